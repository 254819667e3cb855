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

#include "uniwkb/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "uniwkb/airy.hpp"
#include "uniwkb/errors.hpp"
#include "uniwkb/numerics.hpp"

namespace uniwkb {

namespace {

constexpr double kRescale = 1e150;

class Shooter {
 public:
  Shooter(double k, int l, double x_max, int steps)
      : k_(k), l_(l), steps_(steps), h_(x_max / steps), v_(steps + 1) {
    const double cl = l * (l + 1.0);
    v_[0] = 0.0;
    for (int j = 1; j <= steps; ++j) {
      const double x = j * h_;
      v_[j] = std::pow(x, k) + cl / (x * x);
    }
  }

  double h() const { return h_; }
  int steps() const { return steps_; }

  double series(double x, double e) const {
    return std::pow(x, l_ + 1.0) *
           (1.0 - e * x * x / (4.0 * l_ + 6.0) +
            std::pow(x, k_ + 2.0) / ((k_ + 2.0) * (2.0 * l_ + k_ + 3.0)));
  }

  // Outward solution on [0, last]; returns the number of sign changes.
  int outward(double e, int last, std::vector<double>& psi) const {
    psi.assign(last + 1, 0.0);
    psi[1] = series(h_, e);
    psi[2] = series(2.0 * h_, e);
    int changes = 0;
    const double c = h_ * h_ / 12.0;
    for (int j = 2; j < last; ++j) {
      const double fm = v_[j - 1] - e;
      const double f0 = v_[j] - e;
      const double fp = v_[j + 1] - e;
      psi[j + 1] = (2.0 * (1.0 + 5.0 * c * f0) * psi[j] - (1.0 - c * fm) * psi[j - 1]) /
                   (1.0 - c * fp);
      if ((psi[j + 1] > 0.0) != (psi[j] > 0.0) && psi[j] != 0.0) ++changes;
      if (std::abs(psi[j + 1]) > kRescale) {
        for (int i = 0; i <= j + 1; ++i) psi[i] /= kRescale;
      }
    }
    return changes;
  }

  // Inward solution on [first, steps] vanishing at the far end.
  void inward(double e, int first, std::vector<double>& psi) const {
    psi.assign(steps_ + 1, 0.0);
    psi[steps_] = 0.0;
    psi[steps_ - 1] = 1e-20;
    const double c = h_ * h_ / 12.0;
    for (int j = steps_ - 1; j > first; --j) {
      const double fm = v_[j - 1] - e;
      const double f0 = v_[j] - e;
      const double fp = v_[j + 1] - e;
      psi[j - 1] = (2.0 * (1.0 + 5.0 * c * f0) * psi[j] - (1.0 - c * fp) * psi[j + 1]) /
                   (1.0 - c * fm);
      if (std::abs(psi[j - 1]) > kRescale) {
        for (int i = j - 1; i <= steps_; ++i) psi[i] /= kRescale;
      }
    }
  }

  int count(double e) const {
    std::vector<double> psi;
    return outward(e, steps_, psi);
  }

  // Normalized Casoratian of the outward and inward solutions at m, m+1.
  double mismatch(double e, int m) const {
    std::vector<double> out, in;
    outward(e, m + 1, out);
    inward(e, m, in);
    const double no = std::hypot(out[m], out[m + 1]);
    const double ni = std::hypot(in[m], in[m + 1]);
    return (out[m] * in[m + 1] - out[m + 1] * in[m]) / (no * ni);
  }

  std::vector<double> eigenfunction(double e, int m) const {
    std::vector<double> out, in;
    outward(e, m + 1, out);
    inward(e, m, in);
    const int j = std::abs(in[m]) > std::abs(in[m + 1]) ? m : m + 1;
    const double scale = out[j] / in[j];
    std::vector<double> psi(steps_ + 1);
    for (int i = 0; i <= steps_; ++i) psi[i] = i <= m ? out[i] : scale * in[i];
    return psi;
  }

 private:
  double k_;
  int l_;
  int steps_;
  double h_;
  std::vector<double> v_;
};

double effective_potential(double k, int l, double x) {
  return std::pow(x, k) + l * (l + 1.0) / (x * x);
}

double schrodinger_minimum(double k, int l) {
  if (l == 0) return 0.0;
  const double cl = l * (l + 1.0);
  const double xm = std::pow(2.0 * cl / k, 1.0 / (k + 2.0));
  return effective_potential(k, l, xm);
}

double outer_turning_point(double k, int l, double e) {
  const double cl = l * (l + 1.0);
  const double lo = l == 0 ? 0.0 : std::pow(2.0 * cl / k, 1.0 / (k + 2.0));
  const double hi = std::pow(e, 1.0 / k) * 1.01 + 1e-3;
  auto f = [&](double x) { return x == 0.0 ? -e : effective_potential(k, l, x) - e; };
  return find_root(f, make_bracket(f, lo, hi), 1e-14);
}

double tail_extent(double k, int l, double e, double margin) {
  const double xt = outer_turning_point(k, l, e);
  const double dx = 1e-3 * std::max(xt, 1.0);
  double x = xt;
  double acc = 0.0;
  while (acc < margin) {
    const double mid = x + 0.5 * dx;
    acc += std::sqrt(std::max(effective_potential(k, l, mid) - e, 0.0)) * dx;
    x += dx;
  }
  return x;
}

double simpson(const std::vector<double>& y, double h) {
  const std::size_t n = y.size() - 1;
  double s = y.front() + y.back();
  for (std::size_t i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * y[i];
  return s * h / 3.0;
}

double airy_ai(double a) {
  const ScaledAiryPair sp = airy_scaled(a);
  return sp.ai_s * std::exp(-sp.log_scale);
}

std::vector<double> uniform_grid(double x_max, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = x_max * i / (points - 1);
  return g;
}

ReferenceSolution tabulate(std::function<double(double)> f, double e,
                           double x_max, ReferenceMethod m) {
  ReferenceSolution r;
  r.e_ex = e;
  r.method = m;
  r.grid = uniform_grid(x_max, 2001);
  r.psi_ex.reserve(r.grid.size());
  for (double x : r.grid) r.psi_ex.push_back(f(x));
  r.exact = std::move(f);
  return r;
}

}  // namespace

const char* to_string(ReferenceMethod m) noexcept {
  switch (m) {
    case ReferenceMethod::numerov:
      return "numerov";
    case ReferenceMethod::oscillator_closed_form:
      return "oscillator_closed_form";
    case ReferenceMethod::airy_closed_form:
      return "airy_closed_form";
  }
  return "unknown";
}

double ReferenceSolution::value_at(double x) const {
  if (exact) return exact(x);
  if (grid.size() < 4 || x <= grid.front() || x >= grid.back()) return 0.0;
  auto it = std::upper_bound(grid.begin(), grid.end(), x);
  std::ptrdiff_t i = (it - grid.begin()) - 2;
  i = std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(grid.size()) - 4);
  double sum = 0.0;
  for (int a = 0; a < 4; ++a) {
    double w = 1.0;
    for (int b = 0; b < 4; ++b) {
      if (a != b) w *= (x - grid[i + b]) / (grid[i + a] - grid[i + b]);
    }
    sum += w * psi_ex[i + a];
  }
  return sum;
}

ReferenceSolution numerov_solve(double k, int l, int n, double tol,
                                const NumerovOptions& opt) {
  if (!(k >= 1.0)) throw DomainError("k must be >= 1");
  if (l < 0 || n < 0) throw DomainError("l and n must be >= 0");
  if (opt.steps < 100 || opt.steps % 2 != 0) {
    throw DomainError("Numerov step count must be even and >= 100");
  }

  const double vmin = schrodinger_minimum(k, l);
  double e_hi = std::max(2.0 * vmin, 1.0);
  std::optional<Shooter> shooter;
  for (int i = 0;; ++i) {
    if (i > opt.max_iterations) {
      throw ConvergenceError("could not bracket level " + std::to_string(n), e_hi);
    }
    shooter.emplace(k, l, tail_extent(k, l, e_hi, opt.tail_margin), opt.steps);
    if (shooter->count(e_hi) > n) break;
    e_hi *= 1.5;
  }
  double e_lo = vmin;
  int c_lo = shooter->count(e_lo);
  int c_hi = shooter->count(e_hi);
  for (int i = 0; i < opt.max_iterations && !(c_lo == n && c_hi == n + 1); ++i) {
    const double mid = 0.5 * (e_lo + e_hi);
    const int c = shooter->count(mid);
    if (c > n) {
      e_hi = mid;
      c_hi = c;
    } else {
      e_lo = mid;
      c_lo = c;
    }
  }
  if (!(c_lo == n && c_hi == n + 1)) {
    throw ConvergenceError("node-count bisection failed for n = " + std::to_string(n),
                           0.5 * (e_lo + e_hi));
  }

  const double xt = outer_turning_point(k, l, 0.5 * (e_lo + e_hi));
  const int m = std::clamp(static_cast<int>(xt / shooter->h()), 10, opt.steps - 10);
  auto f = [&](double e) { return shooter->mismatch(e, m); };
  const double e = find_root(f, make_bracket(f, e_lo, e_hi), tol);

  std::vector<double> psi = shooter->eigenfunction(e, m);
  std::vector<double> sq(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) sq[i] = psi[i] * psi[i];
  const double scale = 1.0 / std::sqrt(simpson(sq, shooter->h()));
  double peak = 0.0;
  for (double& v : psi) {
    v *= scale;
    peak = std::max(peak, std::abs(v));
  }
  int nodes = 0;
  double prev = 0.0;
  for (double v : psi) {
    if (std::abs(v) < 1e-10 * peak) continue;
    if (prev != 0.0 && (v > 0.0) != (prev > 0.0)) ++nodes;
    prev = v;
  }
  if (nodes != n) {
    throw ConvergenceError("Numerov eigenfunction has " + std::to_string(nodes) +
                               " nodes, expected " + std::to_string(n),
                           e);
  }

  ReferenceSolution r;
  r.e_ex = e;
  r.method = ReferenceMethod::numerov;
  r.grid.resize(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) r.grid[i] = i * shooter->h();
  r.psi_ex = std::move(psi);
  if (opt.coarse_check) {
    NumerovOptions coarse = opt;
    coarse.steps = opt.steps / 2 + (opt.steps / 2) % 2;
    coarse.coarse_check = false;
    r.e_ex_coarse = numerov_solve(k, l, n, tol, coarse).e_ex;
  }
  return r;
}

ReferenceSolution oscillator_exact(int l, int n) {
  if (l < 0 || n < 0) throw DomainError("l and n must be >= 0");
  const double alpha = l + 0.5;
  const double norm = std::exp(0.5 * (std::log(2.0) + std::lgamma(n + 1.0) -
                                      std::lgamma(n + alpha + 1.0)));
  auto f = [=](double x) {
    if (x <= 0.0) return 0.0;
    const double u = x * x;
    double lm = 1.0;
    double lk = 1.0;
    if (n > 0) lk = 1.0 + alpha - u;
    for (int j = 1; j < n; ++j) {
      const double next = ((2.0 * j + 1.0 + alpha - u) * lk - (j + alpha) * lm) / (j + 1.0);
      lm = lk;
      lk = next;
    }
    return norm * std::pow(x, l + 1.0) * std::exp(-0.5 * u) * lk;
  };
  const double e = 4.0 * n + 2.0 * l + 3.0;
  return tabulate(f, e, std::sqrt(e) + 7.0, ReferenceMethod::oscillator_closed_form);
}

double airy_zero(int n) {
  if (n < 0) throw DomainError("zero index must be >= 0");
  const double t = 3.0 * std::numbers::pi / 8.0 * (4.0 * (n + 1) - 1.0);
  const double guess = -std::pow(t, 2.0 / 3.0) * (1.0 + 5.0 / 48.0 / (t * t));
  const double half = std::min(0.5, 0.4 * std::numbers::pi / std::sqrt(-guess));
  auto ai = [](double a) { return airy_eval(a).ai; };
  return find_root(ai, make_bracket(ai, guess - half, guess + half), 1e-16);
}

ReferenceSolution linear_l0_exact(int n) {
  const double zero = airy_zero(n);
  const double slope = airy_eval(zero).dai;
  const double e = -zero;
  auto f = [=](double x) {
    if (x <= 0.0) return 0.0;
    return airy_ai(x + zero) / slope;
  };
  return tabulate(f, e, e + 16.0, ReferenceMethod::airy_closed_form);
}

ReferenceSolution best_reference(double k, int l, int n) {
  if (k == 2.0) return oscillator_exact(l, n);
  if (k == 1.0 && l == 0) return linear_l0_exact(n);
  return numerov_solve(k, l, n);
}

}  // namespace uniwkb
