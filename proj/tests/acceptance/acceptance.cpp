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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "uniwkb/airy.hpp"
#include "uniwkb/diagnostics.hpp"
#include "uniwkb/errors.hpp"
#include "uniwkb/log_derivative.hpp"
#include "uniwkb/numerics.hpp"
#include "uniwkb/problem.hpp"
#include "uniwkb/reference.hpp"
#include "uniwkb/spectrum.hpp"
#include "uniwkb/wavefunction.hpp"

using namespace uniwkb;

namespace {

const complex kI(0.0, 1.0);

// Collects failed checks; a criterion passes when none are recorded.
class Findings {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  int checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

std::string level(double k, int l, int n) { return fmt("(%g,%g,%g)", k, l, n); }

double rel_dev(double computed, double reference) { return std::abs(computed / reference - 1.0); }

Eigenstate solved(double k, int l, int n) { return normalize(solve_level(PowerLawProblem(k, l), n)); }

const Table1Entry& reference_row(double k, int l, int n) {
  for (const auto& r : table1_reference()) {
    if (r.k == k && r.l == l && r.n == n) return r;
  }
  throw DomainError("no reference row");
}

void compare_cell(Findings& f, const char* name, double k, int l, int n, double computed,
                  double reference, double tol) {
  const double dev = rel_dev(computed, reference);
  f.check(dev <= tol, std::string(name) + level(k, l, n) +
                          fmt(" computed %.4e reference %.4e dev %.3f", computed, reference, dev));
}

// AC1: linear potential, l = 0, is solved exactly.
void linear_exactness(Findings& f) {
  const double expect[] = {2.33811, 4.08795, 5.52056};
  for (int n = 0; n < 3; ++n) {
    const auto st = solved(1.0, 0, n);
    f.check(std::abs(st.e - expect[n]) <= 1e-5, "e" + level(1, 0, n) + fmt(" = %.8f", st.e));
    const auto rec = diagnose(st, -oracle::boost_ai_zero(n));
    for (auto [name, value] : {std::pair{"d", rec.d}, {"v", rec.v}, {"delta_e", rec.delta_e}}) {
      f.check(std::abs(value) <= 1e-8, std::string(name) + level(1, 0, n) + fmt(" = %.3e", value));
    }
  }
}

// AC2: oscillator block.
void oscillator_block(Findings& f) {
  for (int l = 0; l < 3; ++l) {
    for (int n = 0; n < 3; ++n) {
      const double exact = 4 * n + 2 * l + 3;
      const double e_ex = oscillator_exact(l, n).e_ex;
      f.check(e_ex == exact, "e_ex" + level(2, l, n) + fmt(" = %.17g", e_ex));
      const auto rec = diagnose(solved(2.0, l, n), exact);
      compare_cell(f, "delta_e", 2, l, n, rec.delta_e, *reference_row(2, l, n).delta_e, 0.10);
    }
  }
}

// AC3: quartic block.
void quartic_block(Findings& f) {
  for (int l = 0; l < 3; ++l) {
    for (int n = 0; n < 3; ++n) {
      const auto& ref = reference_row(4, l, n);
      const double e_ex = numerov_solve(4.0, l, n).e_ex;
      f.check(std::abs(e_ex - *ref.e_ex) <= 1e-4,
              "e_ex" + level(4, l, n) + fmt(" = %.7f reference %.7f", e_ex, *ref.e_ex));
      const auto rec = diagnose(solved(4.0, l, n), e_ex);
      compare_cell(f, "delta_e", 4, l, n, rec.delta_e, *ref.delta_e, 0.10);
      compare_cell(f, "v", 4, l, n, rec.v, *ref.v, 0.10);
      compare_cell(f, "d", 4, l, n, rec.d, *ref.d, 0.10);
    }
  }
}

// AC4: every table cell plus the sign pattern.
void full_table(Findings& f) {
  int sign_ok = 0;
  for (const auto& ref : table1_reference()) {
    const auto rec = table1_row(ref.k, ref.l, ref.n);
    for (const auto& c : compare_row(rec, ref)) {
      f.check(c.pass, c.name + level(ref.k, ref.l, ref.n) +
                          fmt(" computed %.4e reference %.4e dev %.3e", c.computed, c.reference,
                              c.deviation));
    }
    const bool exact = ref.k == 1.0 && ref.l == 0;
    const bool pattern = exact || (rec.v > 0.0 && rec.d < 0.0 && rec.delta_e > 0.0);
    f.check(pattern, "sign pattern" + level(ref.k, ref.l, ref.n));
    sign_ok += pattern ? 1 : 0;
  }
  f.check(sign_ok == 26, fmt("sign pattern on %g/26 rows", sign_ok));
}

// AC5: oscillator wave functions against the closed form.
void wave_fidelity(Findings& f) {
  for (auto [l, n] : {std::pair{0, 0}, {1, 1}, {2, 2}}) {
    const auto st = solved(2.0, l, n);
    std::vector<double> grid;
    for (int i = 1; i <= 4000; ++i) grid.push_back(8.0 * i / 4000.0);
    const auto samples = sample_grid(st, grid);
    double overlap = 0.0;
    for (const auto& w : samples) overlap += w.psi * oracle::oscillator_psi(l, n, w.x);
    const double sign = overlap < 0.0 ? -1.0 : 1.0;
    double sup = 0.0;
    int changes = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      sup = std::max(sup, std::abs(sign * samples[i].psi - oracle::oscillator_psi(l, n, samples[i].x)));
      if (i > 0 && (samples[i].psi < 0.0) != (samples[i - 1].psi < 0.0)) ++changes;
    }
    f.check(sup <= 0.05, "sup|psi_app - psi_ex|" + level(2, l, n) + fmt(" = %.4f", sup));
    f.check(changes == n, "sign changes" + level(2, l, n) + fmt(" = %g", changes));
    f.check(count_nodes(st) == n, "count_nodes" + level(2, l, n));
  }
}

// AC6: analytic identities and structural properties.
void identity_suite(Findings& f) {
  const complex choices[] = {complex(0.0), kI, -kI};
  double worst_y1 = 0.0, worst_y2 = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double a = oracle::uniform(-8.0, 8.0);
    const complex t = i % 4 < 3 ? choices[i % 4] : complex(oracle::uniform(-3.0, 3.0));
    const double den = std::abs(oracle::boost_ai(a) + t * oracle::boost_bi(a));
    const double scale = std::abs(oracle::boost_ai(a)) + std::abs(t) * std::abs(oracle::boost_bi(a));
    if (den < 1e-3 * scale) continue;
    const auto k = mixture_kernels(a, t);
    worst_y1 = std::max(worst_y1, std::abs(k.dy1 + k.y1 * k.y1 - a) /
                                    (1.0 + std::abs(a) + std::abs(k.y1 * k.y1)));
    const complex r2 = k.dy2 + 2.0 * k.y1 * k.y2 - (2.0 * a * k.dy1 - k.y1) / 3.0;
    worst_y2 = std::max(worst_y2, std::abs(r2) / (1.0 + std::abs(a * a * k.dy1) + std::abs(k.y1 * k.y2)));
  }
  f.check(worst_y1 <= 1e-10, fmt("y1 identity residual %.2e", worst_y1));
  f.check(worst_y2 <= 1e-10, fmt("y2 identity residual %.2e", worst_y2));

  double worst_w = 0.0;
  for (double a = -30.0; a <= 30.0; a += 0.0917) {
    const auto p = airy_eval(a);
    worst_w = std::max(worst_w, std::abs((p.ai * p.dbi - p.dai * p.bi) * std::numbers::pi - 1.0));
  }
  f.check(worst_w <= 1e-12, fmt("Wronskian deviation %.2e", worst_w));

  bool conj_ok = true;
  for (int i = 0; i < 200; ++i) {
    const double a = oracle::uniform(-20.0, 20.0);
    const complex t(oracle::uniform(-2.0, 2.0), oracle::uniform(0.1, 2.0));
    const auto k = mixture_kernels(a, t);
    const auto kc = mixture_kernels(a, std::conj(t));
    conj_ok = conj_ok && kc.y1 == std::conj(k.y1) && kc.y2 == std::conj(k.y2) &&
              kc.dy1 == std::conj(k.dy1) && kc.dy2 == std::conj(k.dy2);
  }
  f.check(conj_ok, "conjugate symmetry");

  const double ks[] = {1.0, 2.0, 4.0};
  double worst_riccati = 0.0;
  int points = 0;
  while (points < 500) {
    const double k = ks[oracle::rng()() % 3];
    const int l = static_cast<int>(oracle::rng()() % 3);
    const PowerLawProblem p(k, l);
    const double e = effective_potential_minimum(p) + oracle::uniform(0.5, 25.0);
    const auto tp = turning_points(p, e);
    const double lo = tp.q_minus > 0.0 ? 0.3 * tp.q_minus : 0.05 * tp.q_plus;
    const double q = oracle::uniform(lo, 1.6 * tp.q_plus);
    const auto qd = q_function(p, e, q);
    if (qd.Q1 == 0.0 || std::abs(airy_arguments(qd).a) > kAsymptoticCutoff) continue;
    const complex t = q < tp.q_minus ? origin_mixture(p).t0
                                     : (q > tp.q_plus ? complex(0.0) : (points % 2 ? kI : -kI));
    const auto r = riccati_residual(p, e, q, t);
    worst_riccati = std::max(worst_riccati, std::abs(r.lhs - r.rhs) / (1.0 + std::abs(r.lhs)));
    ++points;
  }
  f.check(worst_riccati <= 1e-8, fmt("Riccati residual identity %.2e over 500 points", worst_riccati));

  for (int l : {1, 2}) {
    const auto o = origin_mixture(PowerLawProblem(2.0, l, 2.0));
    const auto A = oracle::maclaurin_airy(o.a0);
    const long double y1 = (A.dai + o.t0 * A.dbi) / (A.ai + o.t0 * A.bi);
    const long double a = o.a0;
    const long double y2 = (-8 * a * a * y1 * y1 - 3 - 4 * a * y1 + 8 * a * a * a) / 30;
    const double dev = std::abs(double(-(2 * a * y1 + 3 * y2)) - (2.0 * l + 1.5));
    f.check(dev <= 1e-9, fmt("origin consistency l=%g: %.2e", l, dev));
  }

  for (double k : ks) {
    for (int l = 0; l < 3; ++l) {
      for (int n = 0; n < 3; ++n) {
        const auto st = solved(k, l, n);
        const auto mr = matching_report(st);
        const double gap = std::max(mr.value_gap_minus, mr.value_gap_plus);
        f.check(gap <= 1e-8, "continuity" + level(k, l, n) + fmt(" %.2e", gap));
        const double norm = norm_integral(st);
        f.check(std::abs(norm - 1.0) <= 1e-8, "norm" + level(k, l, n) + fmt(" %.12f", norm));
      }
      const PowerLawProblem p(k, l);
      const double vmin = effective_potential_minimum(p);
      double prev = -1.0;
      bool increasing = true;
      for (int i = 1; i <= 30; ++i) {
        const double ph = phase_integral(p, vmin + 0.7 * i);
        increasing = increasing && ph > prev;
        prev = ph;
      }
      f.check(increasing, "phase monotonicity" + level(k, l, -1));
    }
  }
}

double q_at_a(const PowerLawProblem& p, double e, double target, double lo, double hi) {
  auto g = [&](double q) { return airy_arguments(p, e, q).a - target; };
  return find_root(g, make_bracket(g, lo, hi), 1e-15);
}

// AC7: branch agreement at the cutoff and regular turning points.
void branch_robustness(Findings& f) {
  double worst = 0.0;
  for (double k : {1.0, 2.0, 4.0}) {
    for (int l = 0; l < 3; ++l) {
      const PowerLawProblem p(k, l);
      const double e = effective_potential_minimum(p) + 4.0;
      const auto tp = turning_points(p, e);
      double hi = tp.q_plus * 1.1;
      while (airy_arguments(p, e, hi).a < kAsymptoticCutoff) hi *= 1.2;
      const auto qd = q_function(p, e, q_at_a(p, e, kAsymptoticCutoff, tp.q_plus, hi));
      for (complex t : {complex(0.0), kI, -kI}) {
        const auto a = eval_Y_on_branch(qd, t, Branch::airy);
        const auto b = eval_Y_on_branch(qd, t, Branch::asymptotic);
        worst = std::max(worst, std::abs(a.Y - b.Y) / std::abs(a.Y));
      }
    }
    const PowerLawProblem p(k, 0);
    const auto tp = turning_points(p, 9.0);
    const auto qd = q_function(p, 9.0, q_at_a(p, 9.0, -kAsymptoticCutoff, 1e-3 * tp.q_plus, tp.q_plus));
    for (complex t : {kI, -kI}) {
      const auto a = eval_Y_on_branch(qd, t, Branch::airy);
      const auto b = eval_Y_on_branch(qd, t, Branch::asymptotic);
      worst = std::max(worst, std::abs(a.Y - b.Y) / std::abs(a.Y));
    }
  }
  f.check(worst <= 1e-8, fmt("branch mismatch at |a| = 7: %.2e", worst));

  double worst_jump = 0.0;
  bool evaluated = true;
  for (double k : {1.0, 2.0, 4.0}) {
    for (int l = 0; l < 3; ++l) {
      const PowerLawProblem p(k, l);
      const double e = effective_potential_minimum(p) + 3.0;
      const auto tp = turning_points(p, e);
      std::vector<double> turning{tp.q_plus};
      if (tp.q_minus > 0.0) turning.push_back(tp.q_minus);
      for (double qt : turning) {
        for (complex t : {complex(0.0), kI, -kI}) {
          const double d = 1e-10 * qt;
          try {
            const auto c = eval_Y(p, e, qt, t);
            const auto lo = eval_Y(p, e, qt - d, t);
            const auto hi = eval_Y(p, e, qt + d, t);
            worst_jump = std::max(worst_jump, std::abs(hi.Y - lo.Y) / (1.0 + std::abs(c.Y)));
            for (int i = -50; i <= 50; ++i) {
              const double q = qt * (1.0 + 1e-3 * i / 50.0);
              if (std::abs(airy_arguments(p, e, q).a) > 0.1) continue;
              evaluated = evaluated && std::isfinite(std::abs(eval_Y(p, e, q, t).Y));
            }
          } catch (const Error&) {
            evaluated = false;
          }
        }
      }
    }
  }
  f.check(evaluated, "turning-point neighbourhoods evaluate");
  f.check(worst_jump <= 1e-8, fmt("turning-point continuity %.2e", worst_jump));
}

struct Criterion {
  const char* id;
  const char* title;
  double time_limit;
  std::function<void(Findings&)> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "linear l=0 exactness", 5.0, linear_exactness},
      {"AC2", "oscillator energies", 30.0, oscillator_block},
      {"AC3", "quartic rows", 120.0, quartic_block},
      {"AC4", "full table regression", 0.0, full_table},
      {"AC5", "wave-function fidelity", 0.0, wave_fidelity},
      {"AC6", "identity suite", 60.0, identity_suite},
      {"AC7", "branch robustness", 0.0, branch_robustness},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Findings f;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception& ex) {
      f.check(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0) f.check(secs < c.time_limit, fmt("runtime %.1f s over %.0f s", secs, c.time_limit));
    std::printf("%s %s  %s (%d checks, %.2f s)\n", c.id, f.ok() ? "PASS" : "FAIL", c.title, f.checks(), secs);
    for (const auto& msg : f.failures()) std::printf("    %s\n", msg.c_str());
    std::fflush(stdout);
    failed += f.ok() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
