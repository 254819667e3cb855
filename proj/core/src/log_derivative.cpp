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

#include "uniwkb/log_derivative.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "uniwkb/errors.hpp"

namespace uniwkb {

namespace {

constexpr int kTerms = 64;

struct Coefficients {
  std::array<double, kTerms + 3> c{};
  std::array<double, kTerms + 1> e{};
};

const Coefficients& coefficients() {
  static const Coefficients table = [] {
    Coefficients t;
    t.c[0] = 1.0;
    for (int m = 1; m < kTerms + 3; ++m) {
      double acc = t.c[m - 1] * (4.0 - 3.0 * m) / 2.0;
      for (int i = 1; i < m; ++i) acc += t.c[i] * t.c[m - i];
      t.c[m] = -acc / 2.0;
    }
    for (int m = 1; m <= kTerms; ++m) {
      double conv = 0.0;
      for (int i = 1; i <= m + 1; ++i) conv += t.c[i] * t.c[m + 2 - i];
      t.e[m] = (-16.0 * t.c[m + 2] - 8.0 * conv - 4.0 * t.c[m + 1]) / 30.0;
    }
    return t;
  }();
  return table;
}

struct SeriesValue {
  complex value;
  complex derivative;
};

// Sums coef[first + j] z^j up to its smallest term, together with the
// z-derivative truncated at the same order.
template <std::size_t N>
SeriesValue optimal_sum(const std::array<double, N>& coef, int first,
                        complex z) {
  SeriesValue out{coef[first], 0.0};
  complex zj = 1.0;
  double last = std::abs(coef[first]);
  for (int j = 1; first + j < static_cast<int>(N); ++j) {
    const complex zprev = zj;
    zj *= z;
    const complex term = coef[first + j] * zj;
    const double size = std::abs(term);
    if (size > last) break;
    out.value += term;
    out.derivative += static_cast<double>(j) * coef[first + j] * zprev;
    if (size <= 1e-18 * std::abs(out.value)) break;
    last = size;
  }
  return out;
}

// Large-|a| form written through V with V^2 = Q, free of 1/Q1 factors.
void asymptotic_form(const QDerivatives& qd, complex V, LogDerivSample& out) {
  const auto& co = coefficients();
  const complex V3 = V * V * V;
  const complex z = qd.Q1 / V3;
  const SeriesValue s1 = optimal_sum(co.c, 0, z);
  const SeriesValue s2 = optimal_sum(co.e, 1, z);
  const complex dV = qd.Q1 / (2.0 * V);
  const complex dz = qd.Q2 / V3 - 1.5 * qd.Q1 * qd.Q1 / (V3 * V * V);
  out.Y = V * s1.value + qd.Q2 / V3 * s2.value;
  out.dY = dV * s1.value + V * s1.derivative * dz + qd.Q3 / V3 * s2.value -
           3.0 * qd.Q2 * dV / (V3 * V) * s2.value +
           qd.Q2 / V3 * s2.derivative * dz;
  out.branch = Branch::asymptotic;
}

void airy_form(const QDerivatives& qd, complex t, LogDerivSample& out) {
  const AiryArguments aa = airy_arguments(qd);
  const MixtureLogDeriv k = mixture_kernels(aa.a, t);
  const double da = aa.b1 - 2.0 / 3.0 * aa.a * aa.b2;
  const double db1 = aa.b1 * aa.b2 / 3.0;
  const double db2 = qd.Q3 / qd.Q1 - aa.b2 * aa.b2;
  out.Y = aa.b1 * k.y1 + aa.b2 * k.y2;
  out.dY = db1 * k.y1 + aa.b1 * k.dy1 * da + db2 * k.y2 + aa.b2 * k.dy2 * da;
  out.branch = Branch::airy;
}

double a_of(const QDerivatives& qd) {
  if (qd.Q1 == 0.0) return std::numeric_limits<double>::quiet_NaN();
  const double m = std::cbrt(std::abs(qd.Q1));
  return qd.Q / (m * m);
}

bool is_unit_imaginary(complex t) {
  return t.real() == 0.0 && std::abs(t.imag()) == 1.0;
}

// The value of V = w |Q1|^{1/3} eps for which the series reproduces Y(t),
// or nothing when the expansion does not represent this mixture.
std::optional<complex> series_root(const QDerivatives& qd, complex t,
                                   bool large_only) {
  const double eps = epsilon_sign(qd);
  const double a = a_of(qd);
  const double root = std::sqrt(std::abs(qd.Q));
  if (qd.Q > 0.0) {
    if (t == complex(0.0)) return complex(-eps * root);
    if (is_unit_imaginary(t)) return complex(eps * root);
    if (t.imag() == 0.0 && (!large_only || qd.Q1 == 0.0 || a > 30.0)) {
      return complex(eps * root);
    }
    return std::nullopt;
  }
  if (qd.Q < 0.0 && is_unit_imaginary(t)) {
    return complex(0.0, eps * t.imag() * root);
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(Branch b) noexcept {
  return b == Branch::airy ? "airy" : "asymptotic";
}

int epsilon_sign(const QDerivatives& qd) noexcept {
  return qd.Q1 < 0.0 ? -1 : 1;
}

int epsilon_sign(const PowerLawProblem& p, double e, double q) {
  const QDerivatives qd = q_function(p, e, q);
  if (qd.Q1 == 0.0) {
    throw StationaryPointError("sign of dQ/dq undefined at q = " + std::to_string(q));
  }
  return epsilon_sign(qd);
}

LogDerivSample eval_Y(const QDerivatives& qd, complex t) {
  LogDerivSample out;
  out.q = qd.q;
  out.t = t;
  out.a = a_of(qd);
  const bool far = qd.Q1 == 0.0 || std::abs(out.a) > kAsymptoticCutoff;
  if (far) {
    if (const auto V = series_root(qd, t, true)) {
      asymptotic_form(qd, *V, out);
      return out;
    }
  }
  airy_form(qd, t, out);
  return out;
}

LogDerivSample eval_Y(const PowerLawProblem& p, double e, double q,
                      complex t) {
  return eval_Y(q_function(p, e, q), t);
}

LogDerivSample eval_Y_on_branch(const QDerivatives& qd, complex t, Branch b) {
  LogDerivSample out;
  out.q = qd.q;
  out.t = t;
  out.a = a_of(qd);
  if (b == Branch::airy) {
    airy_form(qd, t, out);
    return out;
  }
  const auto V = series_root(qd, t, false);
  if (!V) {
    throw DomainError("no asymptotic expansion for this mixture at q = " +
                      std::to_string(qd.q));
  }
  asymptotic_form(qd, *V, out);
  return out;
}

LogDerivSample eval_Y_oscillatory(const QDerivatives& qd) {
  const complex t(0.0, 1.0);
  LogDerivSample out;
  out.q = qd.q;
  out.t = t;
  out.a = a_of(qd);
  const bool far = qd.Q1 == 0.0 || std::abs(out.a) > kAsymptoticCutoff;
  if (far && qd.Q < 0.0) {
    asymptotic_form(qd, complex(0.0, std::sqrt(-qd.Q)), out);
    return out;
  }
  out = eval_Y(qd, t);
  if (epsilon_sign(qd) < 0) {
    out.Y = std::conj(out.Y);
    out.dY = std::conj(out.dY);
  }
  return out;
}

LogDerivSample eval_Y_oscillatory(const PowerLawProblem& p, double e,
                                  double q) {
  return eval_Y_oscillatory(q_function(p, e, q));
}

RiccatiResidual riccati_residual(const PowerLawProblem& p, double e, double q,
                                 complex t) {
  const QDerivatives qd = q_function(p, e, q);
  const AiryArguments aa = airy_arguments(qd);
  const MixtureLogDeriv k = mixture_kernels(aa.a, t);
  LogDerivSample s;
  airy_form(qd, t, s);
  RiccatiResidual r;
  r.lhs = qd.Q - s.dY - s.Y * s.Y;
  const double b2 = aa.b2;
  r.rhs = -(qd.Q3 / qd.Q1 * k.y2 +
            b2 * b2 *
                (k.y2 * k.y2 - 8.0 / 3.0 * k.y2 +
                 4.0 / 3.0 * aa.a * k.y1 * k.y2 - 1.0 / 6.0));
  return r;
}

namespace detail {

double asymptotic_y1_coefficient(int j) {
  if (j < 0 || j >= kTerms + 3) throw DomainError("coefficient index out of range");
  return coefficients().c[j];
}

double asymptotic_y2_coefficient(int m) {
  if (m < 1 || m > kTerms) throw DomainError("coefficient index out of range");
  return coefficients().e[m];
}

}  // namespace detail

}  // namespace uniwkb
