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

#ifndef UNIWKB_PROBLEM_HPP_
#define UNIWKB_PROBLEM_HPP_

#include <optional>

namespace uniwkb {

/// Physical parameters of V(r) = alpha r^k with angular momentum l.
struct PhysicalSpec {
  double alpha = 1.0;
  double k = 2.0;
  double mass = 0.5;
  double hbar = 1.0;
  int l = 0;
};

/// Substitution power used by the method: 1 for l = 0, 2 otherwise.
double choose_s(int l);

/// The dimensionless radial problem -psi'' + (x^k + l(l+1)/x^2) psi = e psi
/// together with the substitution x = q^s. Immutable once built.
class PowerLawProblem {
 public:
  /// Throws DomainError unless k >= 1, l >= 0 and s > 0. Without an
  /// explicit s the choose_s rule applies.
  PowerLawProblem(double k, int l, std::optional<double> s = std::nullopt);

  double k() const noexcept { return k_; }
  int l() const noexcept { return l_; }
  double s() const noexcept { return s_; }

  /// s^2 (l + 1/2)^2 - 1/4, the coefficient of q^{-2} in Q.
  double centrifugal() const noexcept;
  /// (l + 1/2)^2 - 1/(4 s^2): Q / (s^2 q^{2s-2}) = x^k - e + lambda / x^2.
  double lambda() const noexcept;
  /// True when the inner turning point sits at the origin (l = 0, s = 1).
  bool origin_is_turning_point() const noexcept;

 private:
  double k_;
  int l_;
  double s_;
};

struct Nondimensionalized {
  PowerLawProblem problem;
  double length_scale;  // r = length_scale * x
  double energy_scale;  // E = energy_scale * e
};

/// Maps a physical specification onto units hbar = 1, 2m = 1, alpha = 1.
Nondimensionalized nondimensionalize(const PhysicalSpec& spec,
                                     std::optional<double> s = std::nullopt);

/// Q and its first three q-derivatives at energy e.
struct QDerivatives {
  double q = 0.0;
  double Q = 0.0;
  double Q1 = 0.0;
  double Q2 = 0.0;
  double Q3 = 0.0;
};

/// Q(q) = s^2 q^{(2+k)s-2} - e s^2 q^{2s-2} + (s^2 (l+1/2)^2 - 1/4) q^{-2}.
QDerivatives q_function(const PowerLawProblem& p, double e, double q);

/// Minimum over x > 0 of x^k + lambda / x^2 (zero when lambda == 0).
double effective_potential_minimum(const PowerLawProblem& p);

struct TurningPoints {
  double q_minus = 0.0;
  double q_plus = 0.0;
};

/// Zeros of Q bounding the classically allowed region. q_minus is exactly
/// zero for l = 0, s = 1. Throws NoBoundRegionError when e is not above the
/// effective-potential minimum.
TurningPoints turning_points(const PowerLawProblem& p, double e);

/// a = Q/|Q1|^{2/3}, b1 = Q1/|Q1|^{2/3}, b2 = Q2/Q1.
struct AiryArguments {
  double a = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
};

/// Throws StationaryPointError when Q1 == 0.
AiryArguments airy_arguments(const QDerivatives& qd);
AiryArguments airy_arguments(const PowerLawProblem& p, double e, double q);

/// Mixture parameter that reproduces psi ~ r^{l+1} at the origin.
struct OriginData {
  double a0 = 0.0;   // limit of a(q) as q -> 0
  double c = 0.0;    // a0 * y1(a0; t0)
  double t0 = 0.0;
  double phi = 0.0;  // pi/3 - atan(t0)
};

OriginData origin_mixture(const PowerLawProblem& p);

}  // namespace uniwkb

#endif  // UNIWKB_PROBLEM_HPP_
