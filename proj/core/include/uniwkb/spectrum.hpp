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

#ifndef UNIWKB_SPECTRUM_HPP_
#define UNIWKB_SPECTRUM_HPP_

#include <memory>

#include "uniwkb/problem.hpp"

namespace uniwkb {

namespace detail {
struct WaveTables;
}  // namespace detail

/// A solved level. The cached tables hold the cumulative integrals of Y
/// used by the wavefunction module; they are shared between copies.
struct Eigenstate {
  PowerLawProblem problem{2.0, 0};
  int n = 0;
  double e = 0.0;
  double q_minus = 0.0;
  double q_plus = 0.0;
  OriginData origin;
  double norm = 1.0;
  double interior_amplitude = 0.0;
  std::shared_ptr<const detail::WaveTables> tables;
};

struct SolveOptions {
  double phase_rel_tol = 1e-12;
  double energy_rel_tol = 1e-13;
  double scan_factor = 1.6;
  int max_scan_steps = 200;
};

/// Integral of eps Im Y(q; +i) over [q_minus, q_plus].
double phase_integral(const PowerLawProblem& p, double e,
                      double rel_tol = 1e-12);

/// pi (n + 1/3) + phi.
double quantization_rhs(int n, const OriginData& origin);

/// Solves phase_integral(e) = quantization_rhs(n) by an upward geometric
/// scan for a sign change followed by Brent's method. The returned state
/// has norm 1; call normalize() before using absolute amplitudes.
Eigenstate solve_level(const PowerLawProblem& p, int n,
                       const SolveOptions& opt = {});

}  // namespace uniwkb

#endif  // UNIWKB_SPECTRUM_HPP_
