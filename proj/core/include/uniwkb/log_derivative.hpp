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

#ifndef UNIWKB_LOG_DERIVATIVE_HPP_
#define UNIWKB_LOG_DERIVATIVE_HPP_

#include <complex>

#include "uniwkb/airy.hpp"
#include "uniwkb/problem.hpp"

namespace uniwkb {

enum class Branch {
  airy,        // closed-form Airy kernels
  asymptotic,  // large-|a| series
};

const char* to_string(Branch b) noexcept;

/// |a| beyond which the asymptotic series replaces the Airy kernels.
inline constexpr double kAsymptoticCutoff = 7.0;

/// Y = b1 y1 + b2 y2 and its q-derivative at one point.
struct LogDerivSample {
  double q = 0.0;
  complex t;
  complex Y;
  complex dY;
  Branch branch = Branch::airy;
  double a = 0.0;  // NaN when Q1 == 0
};

/// Sign of dQ/dq, +1 when it vanishes.
int epsilon_sign(const QDerivatives& qd) noexcept;
/// Sign of dQ/dq at q; throws StationaryPointError when it vanishes.
int epsilon_sign(const PowerLawProblem& p, double e, double q);

/// Evaluates Y(q; t). The branch follows |a| and the mixture t; throws
/// StationaryPointError if Q1 == 0 at a point where the series is not
/// available for this t, and PoleError at a zero of Ai + t Bi.
LogDerivSample eval_Y(const PowerLawProblem& p, double e, double q, complex t);
LogDerivSample eval_Y(const QDerivatives& qd, complex t);

/// Same as eval_Y with the branch fixed by the caller. The asymptotic
/// branch is only defined for t = 0 with a > 0, t = +/-i, and real t with
/// a > 0; other requests throw DomainError.
LogDerivSample eval_Y_on_branch(const QDerivatives& qd, complex t, Branch b);

/// The oscillatory combination Re Y(+i) + i eps Im Y(+i), smooth across
/// stationary points of Q. Its imaginary part is the phase density.
LogDerivSample eval_Y_oscillatory(const PowerLawProblem& p, double e, double q);
LogDerivSample eval_Y_oscillatory(const QDerivatives& qd);

/// Both sides of Q - Y' - Y^2 = -[(Q3/Q1) y2 + (Q2/Q1)^2 (y2^2 - 8 y2 / 3
/// + 4 a y1 y2 / 3 - 1/6)], evaluated on the Airy branch.
struct RiccatiResidual {
  complex lhs;
  complex rhs;
};

RiccatiResidual riccati_residual(const PowerLawProblem& p, double e, double q,
                                 complex t);

namespace detail {

/// Coefficients of y1(a) = w sum_j c_j w^{-3j}, the large-argument
/// expansion of the Airy logarithmic derivative (c0 = 1).
double asymptotic_y1_coefficient(int j);
/// Coefficients of y2(a) = sum_{m>=1} e_m w^{-3m}.
double asymptotic_y2_coefficient(int m);

}  // namespace detail

}  // namespace uniwkb

#endif  // UNIWKB_LOG_DERIVATIVE_HPP_
