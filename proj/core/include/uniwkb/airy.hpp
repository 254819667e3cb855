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

#ifndef UNIWKB_AIRY_HPP_
#define UNIWKB_AIRY_HPP_

#include <complex>

namespace uniwkb {

using complex = std::complex<double>;

/// Ai, Bi and their derivatives at a real argument.
struct AiryPair {
  double a = 0.0;
  double ai = 0.0;
  double bi = 0.0;
  double dai = 0.0;
  double dbi = 0.0;
};

/// Airy values with the dominant exponential removed.
///
/// For a >= 0 the stored values satisfy Ai = ai_s * exp(-log_scale) and
/// Bi = bi_s * exp(+log_scale) with log_scale = (2/3) a^{3/2}; the same
/// factors apply to the derivatives. For a < 0 nothing is removed and
/// log_scale is zero.
struct ScaledAiryPair {
  double a = 0.0;
  double ai_s = 0.0;
  double bi_s = 0.0;
  double dai_s = 0.0;
  double dbi_s = 0.0;
  double log_scale = 0.0;
};

/// The mixture kernels y1(a;t) = d/da ln(Ai + t Bi) and the algebraic
/// second kernel y2(a;t), together with their a-derivatives.
struct MixtureLogDeriv {
  complex t;
  double a = 0.0;
  complex y1;
  complex y2;
  complex dy1;
  complex dy2;
};

/// Largest argument for which Bi and Bi' are finite in double precision.
double airy_overflow_threshold() noexcept;

/// Evaluates Ai, Bi, Ai', Bi' at a. Throws RangeError when a exceeds
/// airy_overflow_threshold() (use airy_scaled there) and DomainError for
/// non-finite input.
AiryPair airy_eval(double a);

/// Overflow-safe variant of airy_eval, finite for every finite a.
ScaledAiryPair airy_scaled(double a);

/// y2 expressed through y1: (1/30) [-8 a^2 y1^2 - 3 - 4 a y1 + 8 a^3].
complex y2_from_y1(double a, complex y1) noexcept;

/// Evaluates the mixture kernels. Throws PoleError when Ai(a) + t Bi(a)
/// vanishes to working precision.
MixtureLogDeriv mixture_kernels(double a, complex t);

}  // namespace uniwkb

#endif  // UNIWKB_AIRY_HPP_
