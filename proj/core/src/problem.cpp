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

#include "uniwkb/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "uniwkb/airy.hpp"
#include "uniwkb/errors.hpp"
#include "uniwkb/numerics.hpp"

namespace uniwkb {

double choose_s(int l) {
  if (l < 0) throw DomainError("l must be >= 0");
  return l == 0 ? 1.0 : 2.0;
}

PowerLawProblem::PowerLawProblem(double k, int l, std::optional<double> s)
    : k_(k), l_(l), s_(0.0) {
  if (!std::isfinite(k) || k < 1.0) {
    throw DomainError("k must be >= 1 (got " + std::to_string(k) + ")");
  }
  if (l < 0) throw DomainError("l must be >= 0");
  s_ = s ? *s : choose_s(l);
  if (!std::isfinite(s_) || s_ <= 0.0) {
    throw DomainError("substitution power s must be > 0");
  }
}

double PowerLawProblem::centrifugal() const noexcept {
  const double lh = l_ + 0.5;
  return s_ * s_ * lh * lh - 0.25;
}

double PowerLawProblem::lambda() const noexcept {
  const double lh = l_ + 0.5;
  return lh * lh - 0.25 / (s_ * s_);
}

bool PowerLawProblem::origin_is_turning_point() const noexcept {
  return l_ == 0 && s_ == 1.0;
}

Nondimensionalized nondimensionalize(const PhysicalSpec& spec,
                                     std::optional<double> s) {
  if (!(spec.alpha > 0.0) || !(spec.mass > 0.0) || !(spec.hbar > 0.0)) {
    throw DomainError("alpha, mass and hbar must be positive");
  }
  PowerLawProblem problem(spec.k, spec.l, s);
  const double k = spec.k;
  const double h2 = spec.hbar * spec.hbar;
  // x = (2 m alpha / hbar^2)^{1/(k+2)} r
  // e = (2 m / (hbar^2 alpha^{2/k}))^{k/(k+2)} E
  const double length_scale =
      std::pow(h2 / (2.0 * spec.mass * spec.alpha), 1.0 / (k + 2.0));
  const double energy_scale = std::pow(
      h2 * std::pow(spec.alpha, 2.0 / k) / (2.0 * spec.mass), k / (k + 2.0));
  return {problem, length_scale, energy_scale};
}

QDerivatives q_function(const PowerLawProblem& p, double e, double q) {
  if (!(q > 0.0)) {
    throw DomainError("q_function requires q > 0 (got " + std::to_string(q) +
                      ")");
  }
  const double s = p.s();
  const double s2 = s * s;
  const double pw = (2.0 + p.k()) * s - 2.0;
  const double rw = 2.0 * s - 2.0;
  const double cc = p.centrifugal();

  const double inv = 1.0 / q;
  const double base[3] = {std::pow(q, pw), std::pow(q, rw), inv * inv};
  const double power[3] = {pw, rw, -2.0};
  const double coef[3] = {s2, -e * s2, cc};

  QDerivatives d;
  d.q = q;
  double* out[4] = {&d.Q, &d.Q1, &d.Q2, &d.Q3};
  for (int i = 0; i < 3; ++i) {
    double f = coef[i] * base[i];
    for (int order = 0; order < 4; ++order) {
      *out[order] += f;
      f *= (power[i] - order) * inv;
    }
  }
  return d;
}

double effective_potential_minimum(const PowerLawProblem& p) {
  const double lam = p.lambda();
  if (lam <= 0.0) return 0.0;
  const double k = p.k();
  const double xm = std::pow(2.0 * lam / k, 1.0 / (k + 2.0));
  return std::pow(xm, k) + lam / (xm * xm);
}

TurningPoints turning_points(const PowerLawProblem& p, double e) {
  const double k = p.k();
  const double s = p.s();
  const double lam = p.lambda();
  if (!std::isfinite(e)) throw DomainError("energy must be finite");

  // Q / (s^2 q^{2s-2}) written in q; shares its zeros with Q.
  auto reduced = [&](double q) {
    return std::pow(q, k * s) - e + (lam == 0.0 ? 0.0 : lam * std::pow(q, -2.0 * s));
  };
  constexpr double kTol = 1e-15;

  if (lam <= 0.0) {
    if (!(e > 0.0)) {
      throw NoBoundRegionError("no classically allowed region for e = " +
                               std::to_string(e));
    }
    const double q_plus_guess = std::pow(e, 1.0 / (k * s));
    if (lam == 0.0) {
      return {0.0, q_plus_guess};
    }
    const double hi = 2.0 * q_plus_guess;
    const double q_plus =
        find_root(reduced, make_bracket(reduced, 1e-300, hi), kTol);
    return {0.0, q_plus};
  }

  const double xm = std::pow(2.0 * lam / k, 1.0 / (k + 2.0));
  const double qm = std::pow(xm, 1.0 / s);
  if (!(reduced(qm) < 0.0)) {
    throw NoBoundRegionError(
        "energy " + std::to_string(e) +
        " does not exceed the effective-potential minimum");
  }
  // Inside: lambda / x^2 > e guarantees a positive value.
  const double x_in = 0.5 * std::sqrt(lam / e);
  const double q_in = std::pow(std::min(x_in, 0.5 * xm), 1.0 / s);
  // Outside: x^k > e guarantees a positive value.
  const double q_out = std::pow(std::max(std::pow(e, 1.0 / k), xm) * 1.5, 1.0 / s);

  TurningPoints tp;
  tp.q_minus = find_root(reduced, make_bracket(reduced, q_in, qm), kTol);
  tp.q_plus = find_root(reduced, make_bracket(reduced, qm, q_out), kTol);
  return tp;
}

AiryArguments airy_arguments(const QDerivatives& qd) {
  if (qd.Q1 == 0.0) {
    throw StationaryPointError("dQ/dq vanishes at q = " + std::to_string(qd.q));
  }
  const double m = std::cbrt(std::abs(qd.Q1));
  const double m2 = m * m;
  return {qd.Q / m2, qd.Q1 / m2, qd.Q2 / qd.Q1};
}

AiryArguments airy_arguments(const PowerLawProblem& p, double e, double q) {
  return airy_arguments(q_function(p, e, q));
}

OriginData origin_mixture(const PowerLawProblem& p) {
  const double s = p.s();
  const double lh = p.l() + 0.5;
  OriginData o;
  o.a0 = std::cbrt(s * s / 4.0 * lh * lh - 1.0 / 16.0);
  const double a0 = o.a0;
  o.c = 1.0 - std::sqrt(1.0 + 1.25 * ((8.0 * a0 * a0 * a0 - 3.0) / 10.0 +
                                      s * lh + 0.5));
  const AiryPair ap = airy_eval(a0);
  o.t0 = (-o.c * ap.ai + a0 * ap.dai) / (o.c * ap.bi - a0 * ap.dbi);
  o.phi = std::numbers::pi / 3.0 - std::atan(o.t0);
  return o;
}

}  // namespace uniwkb
