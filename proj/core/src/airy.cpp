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

#include "uniwkb/airy.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "uniwkb/errors.hpp"

namespace uniwkb {
namespace {

// |a| <= kTableLimit is served from a node table plus a local Taylor
// expansion; beyond it the asymptotic expansions are accurate to roundoff.
constexpr double kTableLimit = 12.0;
constexpr double kTableStep = 0.25;
constexpr int kHalfNodes = 48;
constexpr int kNodes = 2 * kHalfNodes + 1;
constexpr int kAsymTerms = 64;

using real = long double;

// One Taylor step of y'' = a y from a = c to a = c + h. The coefficients
// obey m (m-1) d_m = c d_{m-2} + d_{m-3}.
template <typename T>
void taylor_step(T c, T h, T& y, T& dy) {
  if (h == T(0)) return;
  std::array<T, 96> d{};
  d[0] = y;
  d[1] = dy;
  T val = d[0] + d[1] * h;
  T der = d[1];
  T hp = h;  // h^{m-1}
  int small_run = 0;
  for (int m = 2; m < static_cast<int>(d.size()); ++m) {
    d[m] = (c * d[m - 2] + (m >= 3 ? d[m - 3] : T(0))) / (T(m) * T(m - 1));
    const T dterm = T(m) * d[m] * hp;
    hp *= h;
    const T vterm = d[m] * hp;
    der += dterm;
    val += vterm;
    const T eps = std::numeric_limits<T>::epsilon() * T(0.01);
    if (std::abs(vterm) <= eps * std::abs(val) &&
        std::abs(dterm) <= eps * std::abs(der)) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
  }
  y = val;
  dy = der;
}

struct AsymCoefficients {
  std::array<real, kAsymTerms> u{};
  std::array<real, kAsymTerms> v{};
  AsymCoefficients() {
    u[0] = 1;
    v[0] = 1;
    for (int k = 1; k < kAsymTerms; ++k) {
      const real kk = k;
      u[k] = u[k - 1] * (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) /
             ((2 * kk - 1) * 216 * kk);
      v[k] = -(6 * kk + 1) / (6 * kk - 1) * u[k];
    }
  }
};

const AsymCoefficients& asym_coefficients() {
  static const AsymCoefficients instance;
  return instance;
}

// sum_j (+-1)^j c[first + j*stride] zeta^{-(first + j*stride)}, truncated
// at the smallest term.
template <typename T>
T asym_series(const std::array<real, kAsymTerms>& c, T zeta, bool alternate,
              int first, int stride) {
  const T inv = T(1) / zeta;
  T power = std::pow(inv, T(first));
  const T step = std::pow(inv, T(stride));
  T sum = 0;
  T prev = std::numeric_limits<T>::infinity();
  for (int j = 0, idx = first; idx < kAsymTerms; ++j, idx += stride) {
    T term = T(c[idx]) * power;
    if (alternate && (j % 2 == 1)) term = -term;
    const T mag = std::abs(term);
    if (mag > prev) break;
    sum += term;
    if (mag <= std::numeric_limits<T>::epsilon() * T(1e-3) * std::abs(sum)) {
      break;
    }
    prev = mag;
    power *= step;
  }
  return sum;
}

template <typename T>
struct Quad {
  T ai, dai, bi, dbi;
};

// a > 0: Ai = ai_s e^{-zeta}, Bi = bi_s e^{zeta}.
template <typename T>
Quad<T> asym_positive_scaled(T a) {
  const auto& c = asym_coefficients();
  const T sqrt_pi = std::sqrt(std::numbers::pi_v<T>);
  const T a4 = std::pow(a, T(0.25));
  const T zeta = T(2) / T(3) * a * std::sqrt(a);
  return {asym_series<T>(c.u, zeta, true, 0, 1) / (2 * sqrt_pi * a4),
          -a4 * asym_series<T>(c.v, zeta, true, 0, 1) / (2 * sqrt_pi),
          asym_series<T>(c.u, zeta, false, 0, 1) / (sqrt_pi * a4),
          a4 * asym_series<T>(c.v, zeta, false, 0, 1) / sqrt_pi};
}

// a < 0, oscillatory forms with theta = zeta - pi/4.
template <typename T>
Quad<T> asym_negative(T a) {
  const auto& c = asym_coefficients();
  const T z = -a;
  const T sqrt_pi = std::sqrt(std::numbers::pi_v<T>);
  const T z4 = std::pow(z, T(0.25));
  const T zeta = T(2) / T(3) * z * std::sqrt(z);
  const T theta = zeta - std::numbers::pi_v<T> / 4;
  const T cs = std::cos(theta);
  const T sn = std::sin(theta);
  const T p = asym_series<T>(c.u, zeta, true, 0, 2);
  const T q = asym_series<T>(c.u, zeta, true, 1, 2);
  const T r = asym_series<T>(c.v, zeta, true, 0, 2);
  const T s = asym_series<T>(c.v, zeta, true, 1, 2);
  return {(cs * p + sn * q) / (sqrt_pi * z4), z4 * (sn * r - cs * s) / sqrt_pi,
          (-sn * p + cs * q) / (sqrt_pi * z4), z4 * (cs * r + sn * s) / sqrt_pi};
}

struct NodeTable {
  std::array<Quad<double>, kNodes> nodes{};

  NodeTable() {
    // Exact origin values from the Gamma function.
    const real g13 = std::tgamma(real(1) / 3);
    const real g23 = std::tgamma(real(2) / 3);
    const real ai0 = 1 / (std::pow(real(3), real(2) / 3) * g23);
    const real dai0 = -1 / (std::pow(real(3), real(1) / 3) * g13);
    const real bi0 = 1 / (std::pow(real(3), real(1) / 6) * g23);
    const real dbi0 = std::pow(real(3), real(1) / 6) / g13;

    std::array<Quad<real>, kNodes> work{};
    work[kHalfNodes] = {ai0, dai0, bi0, dbi0};

    constexpr int kSub = 4;
    const real sub = real(kTableStep) / kSub;

    // Oscillatory side: both solutions are stable marching away from 0.
    {
      real ai = ai0, dai = dai0, bi = bi0, dbi = dbi0;
      for (int i = 1; i <= kHalfNodes; ++i) {
        for (int j = 0; j < kSub; ++j) {
          const real c = -real(kTableStep) * (i - 1) - sub * j;
          taylor_step<real>(c, -sub, ai, dai);
          taylor_step<real>(c, -sub, bi, dbi);
        }
        work[kHalfNodes - i] = {ai, dai, bi, dbi};
      }
    }
    // Bi is dominant for a > 0: march outward from 0.
    {
      real bi = bi0, dbi = dbi0;
      for (int i = 1; i <= kHalfNodes; ++i) {
        for (int j = 0; j < kSub; ++j) {
          const real c = real(kTableStep) * (i - 1) + sub * j;
          taylor_step<real>(c, sub, bi, dbi);
        }
        work[kHalfNodes + i].bi = bi;
        work[kHalfNodes + i].dbi = dbi;
      }
    }
    // Ai is recessive for a > 0: march inward from the asymptotic end.
    {
      const real edge = kTableLimit;
      const Quad<real> s = asym_positive_scaled<real>(edge);
      const real zeta = real(2) / 3 * edge * std::sqrt(edge);
      real ai = s.ai * std::exp(-zeta);
      real dai = s.dai * std::exp(-zeta);
      work[kNodes - 1].ai = ai;
      work[kNodes - 1].dai = dai;
      for (int i = kHalfNodes - 1; i >= 1; --i) {
        for (int j = 0; j < kSub; ++j) {
          const real c = real(kTableStep) * (i + 1) - sub * j;
          taylor_step<real>(c, -sub, ai, dai);
        }
        work[kHalfNodes + i].ai = ai;
        work[kHalfNodes + i].dai = dai;
      }
    }
    for (int i = 0; i < kNodes; ++i) {
      nodes[i] = {static_cast<double>(work[i].ai),
                  static_cast<double>(work[i].dai),
                  static_cast<double>(work[i].bi),
                  static_cast<double>(work[i].dbi)};
    }
  }
};

const NodeTable& node_table() {
  static const NodeTable table;
  return table;
}

Quad<double> from_table(double a) {
  const auto& table = node_table();
  const int idx = static_cast<int>(std::lround(a / kTableStep)) + kHalfNodes;
  const double c = (idx - kHalfNodes) * kTableStep;
  const double h = a - c;
  Quad<double> q = table.nodes[idx];
  taylor_step<double>(c, h, q.ai, q.dai);
  taylor_step<double>(c, h, q.bi, q.dbi);
  return q;
}

double zeta_of(double a) { return 2.0 / 3.0 * a * std::sqrt(a); }

void require_finite(double a) {
  if (!std::isfinite(a)) {
    throw DomainError("Airy argument must be finite");
  }
}

}  // namespace

double airy_overflow_threshold() noexcept {
  // Bi'(a) ~ a^{1/4} e^{zeta} / sqrt(pi) overflows first; solve
  // zeta + log(a^{1/4}/sqrt(pi)) = log(DBL_MAX) by a few Newton steps.
  static const double threshold = [] {
    const double target = std::log(std::numeric_limits<double>::max());
    double a = 100.0;
    for (int i = 0; i < 50; ++i) {
      const double f = zeta_of(a) + 0.25 * std::log(a) -
                       0.5 * std::log(std::numbers::pi) - target;
      const double df = std::sqrt(a) + 0.25 / a;
      a -= f / df;
    }
    // Back off slightly from the exact overflow point.
    return a - 1e-9 * a;
  }();
  return threshold;
}

AiryPair airy_eval(double a) {
  require_finite(a);
  if (a > airy_overflow_threshold()) {
    throw RangeError("Bi(a) overflows for a = " + std::to_string(a) +
                     "; use airy_scaled");
  }
  if (std::abs(a) <= kTableLimit) {
    const auto q = from_table(a);
    return {a, q.ai, q.bi, q.dai, q.dbi};
  }
  if (a < 0.0) {
    const auto q = asym_negative<double>(a);
    return {a, q.ai, q.bi, q.dai, q.dbi};
  }
  const auto s = asym_positive_scaled<double>(a);
  const double zeta = zeta_of(a);
  const double down = std::exp(-zeta);
  const double up = std::exp(zeta);
  AiryPair out{a, s.ai * down, s.bi * up, s.dai * down, s.dbi * up};
  if (!std::isfinite(out.bi) || !std::isfinite(out.dbi)) {
    throw RangeError("Bi(a) overflows for a = " + std::to_string(a) +
                     "; use airy_scaled");
  }
  return out;
}

ScaledAiryPair airy_scaled(double a) {
  require_finite(a);
  if (a < 0.0) {
    const auto p = airy_eval(a);
    return {a, p.ai, p.bi, p.dai, p.dbi, 0.0};
  }
  const double zeta = zeta_of(a);
  if (a <= kTableLimit) {
    const auto q = from_table(a);
    const double up = std::exp(zeta);
    const double down = std::exp(-zeta);
    return {a, q.ai * up, q.bi * down, q.dai * up, q.dbi * down, zeta};
  }
  const auto s = asym_positive_scaled<double>(a);
  return {a, s.ai, s.bi, s.dai, s.dbi, zeta};
}

complex y2_from_y1(double a, complex y1) noexcept {
  return (-8.0 * a * a * y1 * y1 - 3.0 - 4.0 * a * y1 + 8.0 * a * a * a) /
         30.0;
}

MixtureLogDeriv mixture_kernels(double a, complex t) {
  require_finite(a);
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) {
    throw DomainError("mixture parameter must be finite");
  }
  complex num;
  complex den;
  double scale = 0.0;
  if (a > 0.0) {
    const auto s = airy_scaled(a);
    if (t == complex(0.0)) {
      num = s.dai_s;
      den = s.ai_s;
      scale = std::abs(s.ai_s);
    } else {
      // Common factor e^{zeta} removed: Ai + t Bi = e^{zeta}(ai_s w + t bi_s).
      const double w = std::exp(-2.0 * s.log_scale);
      num = s.dai_s * w + t * s.dbi_s;
      den = s.ai_s * w + t * s.bi_s;
      scale = std::abs(s.ai_s * w) + std::abs(t) * std::abs(s.bi_s);
    }
  } else {
    const auto p = airy_eval(a);
    num = p.dai + t * p.dbi;
    den = p.ai + t * p.bi;
    scale = std::abs(p.ai) + std::abs(t) * std::abs(p.bi);
  }
  if (std::abs(den) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    throw PoleError("Ai(a) + t Bi(a) vanishes at a = " + std::to_string(a));
  }
  MixtureLogDeriv out;
  out.t = t;
  out.a = a;
  out.y1 = num / den;
  out.y2 = y2_from_y1(a, out.y1);
  out.dy1 = a - out.y1 * out.y1;
  // Derivative of the y2 closed form.
  out.dy2 = (-16.0 * a * out.y1 * out.y1 - 16.0 * a * a * out.y1 * out.dy1 -
             4.0 * out.y1 - 4.0 * a * out.dy1 + 24.0 * a * a) /
            30.0;
  return out;
}

}  // namespace uniwkb
