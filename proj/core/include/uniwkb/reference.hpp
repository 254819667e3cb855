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

#ifndef UNIWKB_REFERENCE_HPP_
#define UNIWKB_REFERENCE_HPP_

#include <functional>
#include <optional>
#include <vector>

namespace uniwkb {

enum class ReferenceMethod {
  numerov,
  oscillator_closed_form,
  airy_closed_form,
};

const char* to_string(ReferenceMethod m) noexcept;

/// An accurate eigenpair of -psi'' + (x^k + l(l+1)/x^2) psi = e psi,
/// unit-normalized and positive near the origin.
struct ReferenceSolution {
  double e_ex = 0.0;
  std::vector<double> grid;
  std::vector<double> psi_ex;
  ReferenceMethod method = ReferenceMethod::numerov;
  /// Energy from the same solver on a grid of half the resolution.
  std::optional<double> e_ex_coarse;
  /// Closed-form evaluator, empty for numerov.
  std::function<double(double)> exact;

  /// psi_ex at x: the closed form when available, else cubic interpolation
  /// on the grid (zero beyond it).
  double value_at(double x) const;
};

struct NumerovOptions {
  int steps = 20000;
  double tail_margin = 25.0;
  int max_iterations = 400;
  bool coarse_check = true;
};

/// Shooting solution: outward from the origin series, inward from the far
/// tail, matched at the outer turning point. Throws ConvergenceError when the
/// node count of the result differs from n.
ReferenceSolution numerov_solve(double k, int l, int n, double tol = 1e-12,
                                const NumerovOptions& opt = {});

/// Radial oscillator (k = 2): e = 4n + 2l + 3.
ReferenceSolution oscillator_exact(int l, int n);

/// Linear potential with l = 0: e = -a_n, psi proportional to Ai(x - e).
ReferenceSolution linear_l0_exact(int n);

/// n-th zero of Ai counted from zero (a_0 = -2.33810741...).
double airy_zero(int n);

/// Closed form when one exists for (k, l), else numerov_solve.
ReferenceSolution best_reference(double k, int l, int n);

}  // namespace uniwkb

#endif  // UNIWKB_REFERENCE_HPP_
