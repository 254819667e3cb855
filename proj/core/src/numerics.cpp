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

#include "uniwkb/numerics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace uniwkb {
namespace {

constexpr int kMaxGaussOrder = 64;

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

void check_finite(double x, double fx) {
  if (!std::isfinite(fx)) {
    throw EvaluationError("root function is not finite at x = " +
                          std::to_string(x));
  }
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static const auto rules = [] {
    std::vector<GaussLegendreRule> all(kMaxGaussOrder + 1);
    for (int i = 1; i <= kMaxGaussOrder; ++i) all[i] = build_rule(i);
    return all;
  }();
  if (n < 1 || n > kMaxGaussOrder) {
    throw DomainError("Gauss-Legendre order must be in [1, 64]");
  }
  return rules[n];
}

Bracket make_bracket(const std::function<double(double)>& f, double lo,
                     double hi) {
  if (!(lo <= hi)) throw DomainError("bracket requires lo <= hi");
  Bracket b{lo, hi, f(lo), f(hi)};
  check_finite(lo, b.f_lo);
  check_finite(hi, b.f_hi);
  if (b.f_lo * b.f_hi > 0.0) {
    throw DomainError("interval [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "] does not bracket a root");
  }
  return b;
}

double find_root(const std::function<double(double)>& f, Bracket bracket,
                 double tol) {
  if (!(bracket.f_lo * bracket.f_hi <= 0.0)) {
    throw DomainError("find_root requires a sign change across the bracket");
  }
  double a = bracket.lo;
  double b = bracket.hi;
  double fa = bracket.f_lo;
  double fb = bracket.f_hi;
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;

  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int iter = 0; iter < 500; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double width_tol = 0.5 * tol * (1.0 + std::abs(b));
    const double tol1 = 2.0 * eps * std::abs(b) + width_tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (std::abs(d) > tol1) {
      b += d;
    } else {
      b += (xm > 0.0 ? tol1 : -tol1);
    }
    // Never evaluate outside the caller's bracket.
    const double lo = std::min(bracket.lo, bracket.hi);
    const double hi = std::max(bracket.lo, bracket.hi);
    b = std::clamp(b, lo, hi);
    fb = f(b);
    check_finite(b, fb);
  }
  throw ConvergenceError("find_root exceeded its iteration budget", b);
}

}  // namespace uniwkb
