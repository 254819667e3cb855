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

#ifndef UNIWKB_NUMERICS_HPP_
#define UNIWKB_NUMERICS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "uniwkb/errors.hpp"

namespace uniwkb {

/// Fixed-size vector of reals, used to integrate several quantities that
/// share one integrand evaluation.
template <std::size_t N>
struct Vec {
  std::array<double, N> v{};

  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }

  Vec& operator+=(const Vec& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] += o.v[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] -= o.v[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (auto& x : v) x *= s;
    return *this;
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
};

template <std::size_t N>
double magnitude(const Vec<N>& x) {
  double m = 0.0;
  for (double c : x.v) m = std::max(m, std::abs(c));
  return m;
}
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }

template <std::size_t N>
Vec<N> abs_of(const Vec<N>& x) {
  Vec<N> out;
  for (std::size_t i = 0; i < N; ++i) out.v[i] = std::abs(x.v[i]);
  return out;
}
inline double abs_of(double x) { return std::abs(x); }
inline double abs_of(const std::complex<double>& x) { return std::abs(x); }

template <typename T>
struct IntegralResult {
  T value{};
  double abs_error_estimate = 0.0;
  int evaluations = 0;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

/// Evaluates f at both ends and checks that they bracket a sign change.
Bracket make_bracket(const std::function<double(double)>& f, double lo,
                     double hi);

/// Brent's method (bisection safeguarding secant and inverse quadratic
/// steps). Returns once the bracket is narrower than tol * (1 + |root|).
/// Every evaluation lies inside [bracket.lo, bracket.hi].
double find_root(const std::function<double(double)>& f, Bracket bracket,
                 double tol);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int n);

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208643474695, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

}  // namespace detail

/// One Gauss-Kronrod 21/10 panel. `gauss` holds the embedded 10-point
/// estimate; `error` is the QUADPACK-scaled error estimate.
template <typename T>
struct PanelEstimate {
  T kronrod{};
  T gauss{};
  double error = 0.0;
};

template <typename F>
auto gauss_kronrod21(F&& f, double lo, double hi)
    -> PanelEstimate<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  std::array<T, 21> fv{};
  fv[0] = f(center);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * detail::kXgk[j];
    fv[1 + 2 * j] = f(center - dx);
    fv[2 + 2 * j] = f(center + dx);
  }
  T kron = fv[0] * detail::kWgk[10];
  T gauss{};
  T resabs = abs_of(fv[0]) * detail::kWgk[10];
  for (int j = 0; j < 10; ++j) {
    const T pair = fv[1 + 2 * j] + fv[2 + 2 * j];
    kron += pair * detail::kWgk[j];
    resabs += (abs_of(fv[1 + 2 * j]) + abs_of(fv[2 + 2 * j])) * detail::kWgk[j];
    if (j % 2 == 1) gauss += pair * detail::kWg[j / 2];
  }
  const T mean = kron * 0.5;
  T resasc = abs_of(fv[0] - mean) * detail::kWgk[10];
  for (int j = 0; j < 10; ++j) {
    resasc += (abs_of(fv[1 + 2 * j] - mean) + abs_of(fv[2 + 2 * j] - mean)) *
              detail::kWgk[j];
  }
  kron *= half;
  gauss *= half;
  const double asc = magnitude(resasc) * std::abs(half);
  const double abs_sum = magnitude(resabs) * std::abs(half);
  double err = magnitude(kron - gauss);
  if (asc != 0.0 && err != 0.0) {
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * abs_sum, err);
  }
  return {kron, gauss, err};
}

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  int max_depth = 100;
  int max_panels = 20000;
};

/// Globally adaptive Gauss-Kronrod quadrature. The worst panel is bisected
/// until the summed error estimate is below max(rel_tol |I|, abs_tol).
/// Nodes are strictly interior, so integrable endpoint singularities are
/// never evaluated. Throws ConvergenceError (carrying the best estimate's
/// magnitude) when a panel would exceed max_depth bisections.
template <typename F>
auto integrate_adaptive(F&& f, double lo, double hi,
                        const QuadratureOptions& opt = {})
    -> IntegralResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  if (!(lo <= hi)) {
    throw DomainError("integrate_adaptive requires lo <= hi");
  }
  IntegralResult<T> result;
  if (lo == hi) return result;

  struct Panel {
    double lo, hi;
    T value;
    double error;
    int depth;
  };
  auto worse = [](const Panel& a, const Panel& b) { return a.error < b.error; };

  std::vector<Panel> heap;
  const auto first = gauss_kronrod21(f, lo, hi);
  result.evaluations = 21;
  heap.push_back({lo, hi, first.kronrod, first.error, 0});
  T total = first.kronrod;
  double total_error = first.error;

  while (true) {
    const double target = std::max(opt.rel_tol * magnitude(total), opt.abs_tol);
    if (total_error <= target) break;
    std::pop_heap(heap.begin(), heap.end(), worse);
    Panel worst = heap.back();
    heap.pop_back();
    if (worst.depth >= opt.max_depth ||
        static_cast<int>(heap.size()) >= opt.max_panels) {
      throw ConvergenceError(
          "adaptive quadrature did not converge on [" + std::to_string(lo) +
              ", " + std::to_string(hi) + "]",
          magnitude(total));
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    const auto left = gauss_kronrod21(f, worst.lo, mid);
    const auto right = gauss_kronrod21(f, mid, worst.hi);
    result.evaluations += 42;
    total = total - worst.value + left.kronrod + right.kronrod;
    total_error = total_error - worst.error + left.error + right.error;
    heap.push_back({worst.lo, mid, left.kronrod, left.error, worst.depth + 1});
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back({mid, worst.hi, right.kronrod, right.error, worst.depth + 1});
    std::push_heap(heap.begin(), heap.end(), worse);
  }
  // Re-sum to shed the drift of the incremental updates.
  T sum{};
  double err = 0.0;
  for (const auto& p : heap) {
    sum += p.value;
    err += p.error;
  }
  result.value = sum;
  result.abs_error_estimate = err;
  return result;
}

template <typename F>
auto integrate_adaptive(F&& f, double lo, double hi, double rel_tol) {
  QuadratureOptions opt;
  opt.rel_tol = rel_tol;
  return integrate_adaptive(std::forward<F>(f), lo, hi, opt);
}

/// Fixed-order Gauss-Legendre quadrature on [lo, hi].
template <typename F>
auto integrate_fixed(F&& f, double lo, double hi, int order = 20)
    -> std::decay_t<std::invoke_result_t<F&, double>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  const auto& rule = gauss_legendre(order);
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  T sum{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += f(center + half * rule.nodes[i]) * rule.weights[i];
  }
  return sum * half;
}

}  // namespace uniwkb

#endif  // UNIWKB_NUMERICS_HPP_
