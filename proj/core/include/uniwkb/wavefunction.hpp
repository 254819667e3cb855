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

#ifndef UNIWKB_WAVEFUNCTION_HPP_
#define UNIWKB_WAVEFUNCTION_HPP_

#include <span>
#include <vector>

#include "uniwkb/spectrum.hpp"

namespace uniwkb {

struct WaveSample {
  double x = 0.0;
  double psi = 0.0;
  double dpsi = 0.0;
  double h_psi = 0.0;
};

enum class Region {
  inner,    // 0 < q < q_minus
  allowed,  // q_minus <= q <= q_plus
  outer,    // q > q_plus
};

Region region_of(const Eigenstate& st, double q) noexcept;

/// Psi(q) together with dPsi/dq and Q Psi - Psi''.
struct PsiValue {
  double psi = 0.0;
  double dpsi = 0.0;
  double residual = 0.0;
};

/// Evaluates the piecewise Psi at q using the formula of region r, which
/// need not be the region containing q (used to compare one-sided limits
/// at the matching points).
PsiValue eval_Psi_in(const Eigenstate& st, double q, Region r);

double eval_Psi(const Eigenstate& st, double q);

/// psi(x) = norm x^{(s-1)/(2s)} Psi(x^{1/s}) with its derivative and
/// (H psi)(x); every field is filled.
WaveSample eval_psi(const Eigenstate& st, double x);

/// (H psi)(x) = -psi'' + (x^k + l(l+1)/x^2) psi, with psi'' taken from the
/// Riccati form rather than finite differences.
double apply_H(const Eigenstate& st, double x);

/// Radius beyond which the outer envelope is below 1e-16 of its value at
/// the outer turning point.
double x_cut(const Eigenstate& st);

/// Integral of psi^2 over (0, scale * x_cut) with the current norm.
double norm_integral(const Eigenstate& st, double scale = 1.0);

/// Copy of st with norm chosen so that the norm integral equals one.
Eigenstate normalize(const Eigenstate& st);

/// Samples in grid order. Throws DomainError unless the grid is strictly
/// increasing and positive.
std::vector<WaveSample> sample_grid(const Eigenstate& st,
                                    std::span<const double> grid);

/// One-sided mismatch of Psi and dPsi/dq at the matching points, relative
/// to the local scale. Inner values are zero when there is no inner region.
struct MatchingReport {
  double value_gap_minus = 0.0;
  double value_gap_plus = 0.0;
  double slope_jump_minus = 0.0;
  double slope_jump_plus = 0.0;
};

MatchingReport matching_report(const Eigenstate& st);

/// Number of sign changes of psi over (0, x_cut) on an n-point grid.
int count_nodes(const Eigenstate& st, int points = 4000);

}  // namespace uniwkb

#endif  // UNIWKB_WAVEFUNCTION_HPP_
