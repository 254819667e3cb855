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

#include "uniwkb/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "uniwkb/errors.hpp"
#include "uniwkb/log_derivative.hpp"
#include "uniwkb/numerics.hpp"
#include "wave_tables.hpp"

namespace uniwkb {

double phase_integral(const PowerLawProblem& p, double e, double rel_tol) {
  const TurningPoints tp = turning_points(p, e);
  QuadratureOptions opt;
  opt.rel_tol = rel_tol;
  opt.abs_tol = 1e-15;
  auto density = [&](double q) {
    const LogDerivSample y = eval_Y_oscillatory(p, e, q);
    if (!std::isfinite(y.Y.imag())) {
      throw EvaluationError("non-finite phase density at q = " +
                            std::to_string(q));
    }
    return y.Y.imag();
  };
  return integrate_adaptive(density, tp.q_minus, tp.q_plus, opt).value;
}

double quantization_rhs(int n, const OriginData& origin) {
  if (n < 0) throw DomainError("n must be >= 0");
  return std::numbers::pi * (n + 1.0 / 3.0) + origin.phi;
}

Eigenstate solve_level(const PowerLawProblem& p, int n,
                       const SolveOptions& opt) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (p.lambda() < 0.0) {
    throw DomainError("substitution power too small for l = 0 (need s >= 1)");
  }
  const OriginData origin = origin_mixture(p);
  const double target = quantization_rhs(n, origin);
  auto mismatch = [&](double e) {
    return phase_integral(p, e, opt.phase_rel_tol) - target;
  };

  const double vmin = effective_potential_minimum(p);
  double lo = vmin > 0.0 ? 1.0001 * vmin : 0.05;
  double f_lo = 0.0;
  for (int i = 0;; ++i) {
    try {
      f_lo = mismatch(lo);
      break;
    } catch (const ConvergenceError&) {
      if (i + 1 >= opt.max_scan_steps) throw;
      lo = vmin + (lo - vmin) * opt.scan_factor;
    }
  }
  if (f_lo > 0.0) {
    throw ConvergenceError("phase already exceeds the target at the scan start",
                           lo);
  }
  double hi = lo;
  double f_hi = f_lo;
  for (int i = 0; i < opt.max_scan_steps && f_hi <= 0.0; ++i) {
    lo = hi;
    f_lo = f_hi;
    hi = vmin + (hi - vmin) * opt.scan_factor;
    f_hi = mismatch(hi);
  }
  if (f_hi <= 0.0) {
    throw ConvergenceError("energy bracket scan failed for n = " +
                               std::to_string(n),
                           hi);
  }

  Eigenstate st;
  st.problem = p;
  st.n = n;
  st.e = find_root(mismatch, Bracket{lo, hi, f_lo, f_hi}, opt.energy_rel_tol);
  const TurningPoints tp = turning_points(p, st.e);
  st.q_minus = tp.q_minus;
  st.q_plus = tp.q_plus;
  st.origin = origin;
  st.norm = 1.0;
  auto tables = detail::build_wave_tables(st);
  st.interior_amplitude = std::exp(tables->log_amplitude);
  st.tables = std::move(tables);
  return st;
}

}  // namespace uniwkb
