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

#include "uniwkb/diagnostics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "uniwkb/errors.hpp"
#include "uniwkb/numerics.hpp"
#include "uniwkb/reference.hpp"
#include "uniwkb/wavefunction.hpp"
#include "wave_tables.hpp"

namespace uniwkb {

namespace detail {
std::string_view table1_csv() noexcept;
}  // namespace detail

StateMoments state_moments(const Eigenstate& st) {
  const double s = st.problem.s();
  const double k = st.problem.k();
  const double cl = st.problem.l() * (st.problem.l() + 1.0);
  const auto breaks = detail::quadrature_breaks(st, st.tables->q_cut);
  QuadratureOptions opt;
  opt.rel_tol = 1e-11;
  opt.abs_tol = 1e-14 * st.norm * st.norm * std::max(1.0, st.e * st.e);
  auto integrand = [&](double q) {
    const WaveSample w = detail::sample_at_q(st, q);
    const double jac = s * std::pow(q, s - 1.0);
    const double p2 = w.psi * w.psi;
    Vec<5> out;
    out[0] = p2;
    out[1] = w.psi * w.h_psi;
    out[2] = w.h_psi * w.h_psi;
    out[3] = w.dpsi * w.dpsi + cl * p2 / (w.x * w.x);
    out[4] = 0.5 * k * std::pow(w.x, k) * p2;
    return out * jac;
  };
  Vec<5> total;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    total += integrate_adaptive(integrand, breaks[i - 1], breaks[i], opt).value;
  }
  return {total[0], total[1], total[2], total[3], total[4]};
}

double expectation_e(const Eigenstate& st) {
  const StateMoments m = state_moments(st);
  return m.h1 / m.norm;
}

double expectation_e_prime(const Eigenstate& st) {
  const StateMoments m = state_moments(st);
  return std::sqrt(m.h2 / m.norm);
}

double discrepancy(const Eigenstate& st) {
  const StateMoments m = state_moments(st);
  return m.h1 / std::sqrt(m.h2 * m.norm) - 1.0;
}

double virial_error(const Eigenstate& st) {
  const StateMoments m = state_moments(st);
  return m.kinetic / m.potential - 1.0;
}

double energy_error(double e_app, double e_ex) {
  if (e_ex == 0.0) throw DomainError("exact energy must be nonzero");
  return e_app / e_ex - 1.0;
}

double energy_error(const Eigenstate& st, double e_ex) {
  return energy_error(expectation_e(st), e_ex);
}

DiagnosticsRecord diagnose(const Eigenstate& st, double e_ex) {
  const StateMoments m = state_moments(st);
  DiagnosticsRecord r;
  r.k = st.problem.k();
  r.l = st.problem.l();
  r.n = st.n;
  r.e_app = m.h1 / m.norm;
  r.e_prime_app = std::sqrt(m.h2 / m.norm);
  r.d = r.e_app / r.e_prime_app - 1.0;
  r.v = m.kinetic / m.potential - 1.0;
  r.e_ex = e_ex;
  r.delta_e = energy_error(r.e_app, e_ex);
  r.e_spectral = st.e;
  const MatchingReport mr = matching_report(st);
  r.slope_jump = std::max(mr.slope_jump_minus, mr.slope_jump_plus);
  return r;
}

DiagnosticsRecord table1_row(double k, int l, int n) {
  const PowerLawProblem p(k, l);
  const Eigenstate st = normalize(solve_level(p, n));
  return diagnose(st, best_reference(k, l, n).e_ex);
}

namespace {

std::optional<double> parse_cell(std::string_view cell) {
  while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
  while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\r')) cell.remove_suffix(1);
  if (cell.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw DomainError("malformed table cell '" + std::string(cell) + "'");
  }
  return v;
}

}  // namespace

std::vector<Table1Entry> parse_table1_csv(std::string_view text) {
  std::vector<Table1Entry> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (header) {
      header = false;
      if (line.rfind("k,l,n,v,d,e_ex,delta_e", 0) != 0) {
        throw DomainError("unexpected table header");
      }
      continue;
    }
    std::vector<std::string_view> cells;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      cells.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (cells.size() < 7) throw DomainError("short table row: " + line);
    Table1Entry e;
    const auto k = parse_cell(cells[0]);
    const auto l = parse_cell(cells[1]);
    const auto n = parse_cell(cells[2]);
    if (!k || !l || !n) throw DomainError("table row lacks k, l or n: " + line);
    e.k = *k;
    e.l = static_cast<int>(*l);
    e.n = static_cast<int>(*n);
    e.v = parse_cell(cells[3]);
    e.d = parse_cell(cells[4]);
    e.e_ex = parse_cell(cells[5]);
    e.delta_e = parse_cell(cells[6]);
    if (cells.size() > 7) e.delta_e_loba = parse_cell(cells[7]);
    rows.push_back(e);
  }
  return rows;
}

const std::vector<Table1Entry>& table1_reference() {
  static const std::vector<Table1Entry> rows = parse_table1_csv(detail::table1_csv());
  return rows;
}

std::vector<CellComparison> compare_row(const DiagnosticsRecord& rec,
                                        const Table1Entry& ref,
                                        const TableTolerances& tol) {
  std::vector<CellComparison> out;
  auto add = [&](const char* name, double computed, const std::optional<double>& r,
                 bool absolute) {
    if (!r) return;
    CellComparison c;
    c.name = name;
    c.computed = computed;
    c.reference = *r;
    if (*r == 0.0) {
      c.deviation = std::abs(computed);
      c.pass = c.deviation <= tol.zero_abs;
    } else if (absolute) {
      c.deviation = std::abs(computed - *r);
      c.pass = c.deviation <= tol.e_ex_abs;
    } else {
      c.deviation = std::abs(computed / *r - 1.0);
      c.pass = c.deviation <= tol.relative;
    }
    out.push_back(c);
  };
  add("v", rec.v, ref.v, false);
  add("d", rec.d, ref.d, false);
  add("e_ex", rec.e_ex, ref.e_ex, true);
  add("delta_e", rec.delta_e, ref.delta_e, false);
  return out;
}

}  // namespace uniwkb
