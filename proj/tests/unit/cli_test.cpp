// Copyright 2026 The uniwkb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using uniwkb::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), "uniwkb");
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("solve emits the documented JSON") {
  const auto r = invoke({"solve", "--k", "2", "--l", "0", "--n", "0"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"k", "l", "n", "s", "e_app", "q_minus", "q_plus", "t0",
                                         "phi", "e_prime_app", "d", "v", "e_ex", "delta_e"});
  CHECK(std::abs(j["e_app"].get<double>() - 3.000169) <= 2e-6);
  CHECK(std::abs(j["phi"].get<double>() - 1.5707963) <= 1e-7);
  CHECK(j["e_ex"].get<double>() == 3.0);
  CHECK(nlohmann::ordered_json::parse(j.dump()) == j);

  const auto lin = nlohmann::json::parse(invoke({"solve", "--k", "1", "--n", "1"}).out);
  CHECK(std::abs(lin["e_app"].get<double>() - 4.08795) <= 1e-5);
  for (const char* key : {"d", "v", "delta_e"}) CHECK(std::abs(lin[key].get<double>()) <= 1e-8);
}

TEST_CASE("solve text output and usage errors") {
  const auto t = invoke({"solve", "--k", "1", "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("e_app") != std::string::npos);
  const auto bad = invoke({"solve", "--k", "0.5"});
  CHECK(bad.code == uniwkb::cli::kExitUsage);
  CHECK(bad.err.find("k must be ≥ 1") != std::string::npos);
  CHECK(invoke({"solve"}).code == uniwkb::cli::kExitUsage);
  CHECK(invoke({"solve", "--k", "2", "--bogus"}).code == uniwkb::cli::kExitUsage);
  CHECK(invoke({}).code == uniwkb::cli::kExitUsage);
  CHECK(invoke({"solve", "--k", "2", "--format", "xml"}).code == uniwkb::cli::kExitUsage);
  CHECK(invoke({"solve", "--k", "2", "-o", "/nonexistent/dir/out.json"}).code ==
        uniwkb::cli::kExitSolverFailure);
}

TEST_CASE("wavefn CSV") {
  const auto r = invoke({"wavefn", "--k", "2", "--l", "0", "--n", "0", "--grid", "0.01:6:600"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 601);
  CHECK(rows[0] == std::vector<std::string>{"x", "psi_app", "dpsi_app", "h_psi", "psi_exact", "diff"});
  double sup = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 6);
    sup = std::max(sup, std::abs(std::stod(rows[i][5])));
    CHECK(std::stod(rows[i][5]) ==
          doctest::Approx(std::stod(rows[i][1]) - std::stod(rows[i][4])).epsilon(1e-12));
  }
  CHECK(sup <= 0.05);

  const auto r2 = invoke({"wavefn", "--k", "2", "--l", "2", "--n", "2", "--grid", "0.01:7:700"});
  const auto rows2 = csv_rows(r2.out);
  int changes = 0;
  for (std::size_t i = 2; i < rows2.size(); ++i) {
    if ((std::stod(rows2[i][1]) < 0.0) != (std::stod(rows2[i - 1][1]) < 0.0)) ++changes;
  }
  CHECK(changes == 2);

  const auto one = csv_rows(invoke({"wavefn", "--k", "4", "--l", "1", "--grid", "1:1:1"}).out);
  CHECK(one.size() == 2);
  CHECK(one[1].size() == 6);
}

TEST_CASE("wavefn argument checks") {
  CHECK(invoke({"wavefn", "--k", "2"}).code == uniwkb::cli::kExitUsage);
  CHECK(invoke({"wavefn", "--k", "2", "--grid", "1:2"}).code == uniwkb::cli::kExitUsage);
  CHECK(invoke({"wavefn", "--k", "2", "--grid", "0:2:5"}).code == uniwkb::cli::kExitUsage);
  CHECK_THROWS_AS(uniwkb::cli::parse_grid("2:1:5"), std::invalid_argument);
  CHECK_THROWS_AS(uniwkb::cli::parse_grid("1:2:x"), std::invalid_argument);
  const auto g = uniwkb::cli::parse_grid("0.5:2.5:5");
  CHECK(g.count == 5);
  CHECK(uniwkb::cli::expand_grid(g) == std::vector<double>{0.5, 1.0, 1.5, 2.0, 2.5});
}

TEST_CASE("table1 filter and tolerance override") {
  const auto r = invoke({"table1", "--only", "k=4"});
  std::set<std::string> rows;
  std::istringstream in(r.out);
  std::string line;
  bool mismatch = false;
  while (std::getline(in, line)) {
    if (line.rfind("  4", 0) == 0) rows.insert(line.substr(0, 9));
    if (line.find("MISMATCH") != std::string::npos) mismatch = true;
  }
  CHECK(rows.size() == 9);
  CHECK(r.code == (mismatch ? uniwkb::cli::kExitTableMismatch : uniwkb::cli::kExitOk));

  const auto loose = invoke({"table1", "--only", "k=4", "--tol-table", "0.5", "--threads", "1"});
  CHECK(loose.code == uniwkb::cli::kExitOk);
  CHECK(loose.out.find("9/9 rows") != std::string::npos);

  const auto one = invoke({"table1", "--only", "k=1,l=0,n=2"});
  CHECK(one.code == uniwkb::cli::kExitOk);
  CHECK(one.out.find("1/1 rows") != std::string::npos);
  CHECK(invoke({"table1", "--only", "q=3"}).code == uniwkb::cli::kExitUsage);
}

TEST_CASE("oracle command") {
  auto e_of = [](std::vector<std::string> args) {
    args.insert(args.begin(), "oracle");
    const auto r = invoke(args);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("e_ex_half_resolution"));
    return j["e_ex"].get<double>();
  };
  CHECK(std::abs(e_of({"--k", "4", "--l", "1", "--n", "2"}) - 26.3500) <= 1e-4);
  CHECK(std::abs(e_of({"--k", "2", "--l", "0", "--n", "2"}) - 11.0) <= 1e-8);
  CHECK(std::abs(e_of({"--k", "1", "--l", "0", "--n", "0"}) - 2.33811) <= 1e-5);
}

TEST_CASE("shortest round-trip formatting") {
  CHECK(uniwkb::cli::format_double(0.1) == "0.1");
  CHECK(uniwkb::cli::format_double(3.0) == "3");
  for (int i = 0; i < 200; ++i) {
    const double v = oracle::uniform(-1e3, 1e3) * std::pow(10.0, oracle::uniform(-20, 20));
    const std::string s = uniwkb::cli::format_double(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == v);
  }
}
