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

#include "cli.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "uniwkb/diagnostics.hpp"
#include "uniwkb/errors.hpp"
#include "uniwkb/reference.hpp"
#include "uniwkb/spectrum.hpp"
#include "uniwkb/wavefunction.hpp"

namespace uniwkb::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LevelArgs {
  double k = 2.0;
  int l = 0;
  int n = 0;
  std::optional<double> s;
};

void add_level_options(CLI::App* cmd, LevelArgs& a) {
  cmd->add_option("--k", a.k, "power of the potential x^k (k >= 1)")->required();
  cmd->add_option("--l", a.l, "angular momentum")->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", a.n, "radial quantum number")->check(CLI::NonNegativeNumber);
}

void check_level(const LevelArgs& a) {
  if (!(a.k >= 1.0)) throw UsageError("k must be ≥ 1");
  if (a.s && !(*a.s > 0.0)) throw UsageError("s must be > 0");
}

// Writes to the named file, or to out when the path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot open '" + path + "' for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }
  void finish() {
    os_->flush();
    if (!*os_) throw Error("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

nlohmann::ordered_json solve_report(const Eigenstate& st,
                                    const DiagnosticsRecord& rec) {
  nlohmann::ordered_json j;
  j["k"] = rec.k;
  j["l"] = rec.l;
  j["n"] = rec.n;
  j["s"] = st.problem.s();
  j["e_app"] = rec.e_app;
  j["q_minus"] = st.q_minus;
  j["q_plus"] = st.q_plus;
  j["t0"] = st.origin.t0;
  j["phi"] = st.origin.phi;
  j["e_prime_app"] = rec.e_prime_app;
  j["d"] = rec.d;
  j["v"] = rec.v;
  j["e_ex"] = rec.e_ex;
  j["delta_e"] = rec.delta_e;
  return j;
}

int cmd_solve(const LevelArgs& a, const std::string& format,
              const std::string& path, std::ostream& out) {
  check_level(a);
  const Eigenstate st = normalize(solve_level(PowerLawProblem(a.k, a.l, a.s), a.n));
  const DiagnosticsRecord rec = diagnose(st, best_reference(a.k, a.l, a.n).e_ex);
  const auto report = solve_report(st, rec);
  Sink sink(path, out);
  if (format == "json") {
    sink.stream() << report.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : report.items()) {
      sink.stream() << std::left << std::setw(13) << key << ' '
                    << (value.is_number_integer() ? std::to_string(value.get<long>())
                                                  : format_double(value.get<double>()))
                    << '\n';
    }
  }
  sink.finish();
  return kExitOk;
}

int cmd_wavefn(const LevelArgs& a, const std::string& grid_text,
               const std::string& path, std::ostream& out) {
  check_level(a);
  GridSpec g;
  try {
    g = parse_grid(grid_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::vector<double> grid = expand_grid(g);
  const Eigenstate st = normalize(solve_level(PowerLawProblem(a.k, a.l, a.s), a.n));
  const std::vector<WaveSample> samples = sample_grid(st, grid);

  std::optional<ReferenceSolution> ref;
  try {
    ref = best_reference(a.k, a.l, a.n);
  } catch (const Error&) {
    ref.reset();
  }
  double sign = 1.0;
  if (ref) {
    double overlap = 0.0;
    for (const auto& w : samples) overlap += w.psi * ref->value_at(w.x);
    if (overlap < 0.0) sign = -1.0;
  }

  Sink sink(path, out);
  std::ostream& os = sink.stream();
  os << "x,psi_app,dpsi_app,h_psi,psi_exact,diff\n";
  for (const auto& w : samples) {
    os << format_double(w.x) << ',' << format_double(w.psi) << ','
       << format_double(w.dpsi) << ',' << format_double(w.h_psi) << ',';
    if (ref) {
      const double ex = sign * ref->value_at(w.x);
      os << format_double(ex) << ',' << format_double(w.psi - ex);
    } else {
      os << ',';
    }
    os << '\n';
  }
  sink.finish();
  return kExitOk;
}

struct RowFilter {
  std::optional<double> k;
  std::optional<int> l;
  std::optional<int> n;
  bool accepts(const Table1Entry& e) const {
    return (!k || *k == e.k) && (!l || *l == e.l) && (!n || *n == e.n);
  }
};

RowFilter parse_filter(const std::string& text) {
  RowFilter f;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--only expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "k") {
        f.k = std::stod(value);
      } else if (key == "l") {
        f.l = std::stoi(value);
      } else if (key == "n") {
        f.n = std::stoi(value);
      } else {
        throw UsageError("--only accepts keys k, l, n");
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad value in --only: '" + item + "'");
    }
  }
  return f;
}

struct RowOutcome {
  Table1Entry ref;
  std::optional<DiagnosticsRecord> rec;
  std::vector<CellComparison> cells;
  std::string failure;
};

std::string cell_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int cmd_table1(const std::string& only, std::optional<double> tol_table,
               int threads, const std::string& path, std::ostream& out) {
  const RowFilter filter = parse_filter(only);
  TableTolerances tol;
  if (tol_table) {
    if (!(*tol_table > 0.0)) throw UsageError("--tol-table must be positive");
    tol.relative = *tol_table;
  }
  std::vector<RowOutcome> rows;
  for (const auto& e : table1_reference()) {
    if (filter.accepts(e)) rows.push_back({e, std::nullopt, {}, {}});
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      RowOutcome& r = rows[i];
      try {
        r.rec = table1_row(r.ref.k, r.ref.l, r.ref.n);
        r.cells = compare_row(*r.rec, r.ref, tol);
      } catch (const std::exception& ex) {
        r.failure = ex.what();
      }
    }
  };
  const int count = std::max(1, threads > 0 ? threads
                                             : static_cast<int>(std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Sink sink(path, out);
  std::ostream& os = sink.stream();
  os << "  k  l  n  cell      computed       reference      deviation  status\n";
  bool all_pass = true;
  int passed_rows = 0;
  for (const auto& r : rows) {
    char head[32];
    std::snprintf(head, sizeof head, "%3g%3d%3d", r.ref.k, r.ref.l, r.ref.n);
    if (!r.rec) {
      os << head << "  FAILED: " << r.failure << '\n';
      all_pass = false;
      continue;
    }
    bool row_pass = true;
    for (const auto& c : r.cells) {
      char line[160];
      std::snprintf(line, sizeof line, "%s  %-8s  %-13s  %-13s  %-9.2e  %s\n", head,
                    c.name.c_str(), cell_text(c.computed).c_str(),
                    cell_text(c.reference).c_str(), c.deviation, c.pass ? "ok" : "MISMATCH");
      os << line;
      row_pass = row_pass && c.pass;
    }
    all_pass = all_pass && row_pass;
    passed_rows += row_pass ? 1 : 0;
  }
  os << passed_rows << '/' << rows.size() << " rows within tolerance\n";
  sink.finish();
  return all_pass ? kExitOk : kExitTableMismatch;
}

int cmd_oracle(const LevelArgs& a, const std::string& path, std::ostream& out) {
  check_level(a);
  const ReferenceSolution r = numerov_solve(a.k, a.l, a.n);
  nlohmann::ordered_json j;
  j["k"] = a.k;
  j["l"] = a.l;
  j["n"] = a.n;
  j["e_ex"] = r.e_ex;
  j["e_ex_half_resolution"] = r.e_ex_coarse.value_or(std::nan(""));
  j["grid_points"] = r.grid.size();
  j["method"] = to_string(r.method);
  Sink sink(path, out);
  sink.stream() << j.dump(2) << '\n';
  sink.finish();
  return kExitOk;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos) {
    throw std::invalid_argument("grid must be min:max:count");
  }
  try {
    std::size_t used = 0;
    const std::string smin = text.substr(0, c1);
    const std::string smax = text.substr(c1 + 1, c2 - c1 - 1);
    const std::string scount = text.substr(c2 + 1);
    g.min = std::stod(smin, &used);
    if (used != smin.size()) throw std::invalid_argument("min");
    g.max = std::stod(smax, &used);
    if (used != smax.size()) throw std::invalid_argument("max");
    g.count = std::stoi(scount, &used);
    if (used != scount.size()) throw std::invalid_argument("count");
  } catch (const std::logic_error&) {
    throw std::invalid_argument("grid must be min:max:count, got '" + text + "'");
  }
  if (!(g.min > 0.0) || g.count < 1 || (g.count > 1 && !(g.max > g.min))) {
    throw std::invalid_argument("grid needs 0 < min < max and count >= 1");
  }
  return g;
}

std::vector<double> expand_grid(const GridSpec& g) {
  if (g.count == 1) return {g.min};
  std::vector<double> x(g.count);
  for (int i = 0; i < g.count; ++i) {
    x[i] = g.min + (g.max - g.min) * i / (g.count - 1);
  }
  x.back() = g.max;
  return x;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Uniform Airy-kernel WKB solver for power-law radial potentials"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  LevelArgs level;
  std::string format = "json";
  std::string output;
  std::string grid;
  std::string only;
  std::optional<double> tol_table;
  int threads = 0;
  double s_value = 0.0;

  auto* solve = app.add_subcommand("solve", "solve one level and report its metrics");
  add_level_options(solve, level);
  solve->add_option("--s", s_value, "override the substitution power");
  solve->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  solve->add_option("-o,--output", output, "write to a file instead of stdout");

  auto* wavefn = app.add_subcommand("wavefn", "tabulate psi, psi' and H psi as CSV");
  add_level_options(wavefn, level);
  wavefn->add_option("--s", s_value, "override the substitution power");
  wavefn->add_option("--grid", grid, "min:max:count, endpoints inclusive")->required();
  wavefn->add_option("-o,--output", output, "write to a file instead of stdout");

  auto* table1 = app.add_subcommand("table1", "reproduce the reference accuracy table");
  table1->add_option("--only", only, "row filter such as k=4 or k=2,l=1");
  table1->add_option("--tol-table", tol_table, "relative tolerance for v, d and delta_e");
  table1->add_option("--threads", threads, "worker threads (default: hardware)");
  table1->add_option("-o,--output", output, "write to a file instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "Numerov reference energy for one level");
  add_level_options(oracle, level);
  oracle->add_option("-o,--output", output, "write to a file instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  if (solve->count("--s") || wavefn->count("--s")) level.s = s_value;

  try {
    if (*solve) return cmd_solve(level, format, output, out);
    if (*wavefn) return cmd_wavefn(level, grid, output, out);
    if (*table1) return cmd_table1(only, tol_table, threads, output, out);
    if (*oracle) return cmd_oracle(level, output, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolverFailure;
  }
  return kExitUsage;
}

}  // namespace uniwkb::cli
