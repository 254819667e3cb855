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

#include "uniwkb/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uniwkb/errors.hpp"
#include "uniwkb/log_derivative.hpp"
#include "uniwkb/numerics.hpp"
#include "wave_tables.hpp"

namespace uniwkb {

namespace {

constexpr double kEnvelopeFloor = -36.841361487904734;  // ln(1e-16)
constexpr int kAllowedPanels = 64;
constexpr int kInnerPanelsPerDecade = 12;
constexpr double kInnerDecades = 8.0;

QuadratureOptions table_options() {
  QuadratureOptions opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-14;
  return opt;
}

struct Integrands {
  const PowerLawProblem& p;
  double e;
  double t0;
  double kappa;

  complex inner(double q) const {
    return eval_Y(p, e, q, complex(t0)).Y - kappa / q;
  }
  complex allowed(double q) const { return eval_Y_oscillatory(p, e, q).Y; }
  complex outer(double q) const { return eval_Y(p, e, q, complex(0.0)).Y; }
  complex operator()(Region r, double q) const {
    switch (r) {
      case Region::inner:
        return inner(q);
      case Region::allowed:
        return allowed(q);
      case Region::outer:
        return outer(q);
    }
    return {};
  }
};

Integrands integrands_for(const Eigenstate& st) {
  return {st.problem, st.e, st.origin.t0, st.tables ? st.tables->kappa : 0.0};
}

const detail::RegionTable& table_of(const detail::WaveTables& t, Region r) {
  switch (r) {
    case Region::inner:
      return t.inner;
    case Region::allowed:
      return t.allowed;
    case Region::outer:
      return t.outer;
  }
  return t.allowed;
}

// Cumulative integral at q: nearest cached node plus a local Gauss-Legendre
// correction.
complex cumulative(const Eigenstate& st, Region r, double q) {
  const detail::WaveTables& t = *st.tables;
  const detail::RegionTable& tab = table_of(t, r);
  const Integrands f = integrands_for(st);
  auto fr = [&](double x) { return f(r, x); };
  if (r == Region::inner && q <= tab.q.front()) return tab.cum.front();
  if (r == Region::outer && q > tab.q.back()) {
    return tab.cum.back() +
           integrate_adaptive(fr, tab.q.back(), q, table_options()).value;
  }
  auto it = std::upper_bound(tab.q.begin(), tab.q.end(), q);
  std::size_t i = it == tab.q.begin() ? 0 : static_cast<std::size_t>(it - tab.q.begin()) - 1;
  if (i + 1 < tab.q.size() && tab.q[i + 1] - q < q - tab.q[i]) ++i;
  if (q == tab.q[i]) return tab.cum[i];
  const complex local = integrate_fixed(fr, tab.q[i], q, 20);
  return r == Region::inner ? tab.cum[i] - local : tab.cum[i] + local;
}

detail::RegionTable accumulate(const std::vector<double>& nodes,
                               const std::function<complex(double)>& f) {
  detail::RegionTable tab;
  tab.q = nodes;
  tab.cum.assign(nodes.size(), complex(0.0));
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    tab.cum[i] = tab.cum[i - 1] +
                 integrate_adaptive(f, nodes[i - 1], nodes[i], table_options()).value;
  }
  return tab;
}

}  // namespace

namespace detail {

std::shared_ptr<const WaveTables> build_wave_tables(const Eigenstate& st) {
  auto t = std::make_shared<WaveTables>();
  const PowerLawProblem& p = st.problem;
  const double qm = st.q_minus;
  const double qp = st.q_plus;

  if (qm > 0.0) {
    const MixtureLogDeriv k0 = mixture_kernels(st.origin.a0, complex(st.origin.t0));
    t->kappa = -(2.0 * st.origin.a0 * k0.y1 + 3.0 * k0.y2).real();
  }
  Integrands f{p, st.e, st.origin.t0, t->kappa};

  if (qm > 0.0) {
    t->q_floor = qm * std::pow(10.0, -kInnerDecades);
    const int panels = static_cast<int>(kInnerDecades * kInnerPanelsPerDecade);
    std::vector<double> nodes(panels + 1);
    for (int j = 0; j <= panels; ++j) {
      nodes[j] = t->q_floor * std::pow(qm / t->q_floor, static_cast<double>(j) / panels);
    }
    nodes.back() = qm;
    // Accumulated from q_minus downwards.
    t->inner.q = nodes;
    t->inner.cum.assign(nodes.size(), complex(0.0));
    auto g = [&](double q) { return f.inner(q); };
    for (int j = panels - 1; j >= 0; --j) {
      t->inner.cum[j] = t->inner.cum[j + 1] +
                        integrate_adaptive(g, nodes[j], nodes[j + 1], table_options()).value;
    }
  }

  {
    std::vector<double> nodes(kAllowedPanels + 1);
    for (int j = 0; j <= kAllowedPanels; ++j) {
      nodes[j] = qm + (qp - qm) * j / kAllowedPanels;
    }
    nodes.back() = qp;
    t->allowed = accumulate(nodes, [&](double q) { return f.allowed(q); });
    t->log_amplitude = t->allowed.cum.back().real();
    t->phase_at_q_plus = t->allowed.cum.back().imag();
  }

  {
    const double s = p.s();
    double h = 0.02 * (qp - qm);
    std::vector<double> nodes{qp};
    auto g = [&](double q) { return f.outer(q); };
    t->outer.q = {qp};
    t->outer.cum = {complex(0.0)};
    double stop = 0.0;
    while (t->outer.q.size() < 5000) {
      const double a = t->outer.q.back();
      const double b = a + h;
      const complex c = t->outer.cum.back() +
                        integrate_adaptive(g, a, b, table_options()).value;
      t->outer.q.push_back(b);
      t->outer.cum.push_back(c);
      if (t->q_cut == 0.0 && c.real() <= kEnvelopeFloor) {
        t->q_cut = b;
        stop = std::pow(2.0, 1.0 / s) * b * 1.05;
      }
      if (t->q_cut > 0.0 && b >= stop) break;
      h *= 1.15;
    }
    if (t->q_cut == 0.0) {
      throw ConvergenceError("outer envelope did not decay", t->outer.q.back());
    }
  }
  return t;
}

std::vector<double> quadrature_breaks(const Eigenstate& st, double q_end) {
  const WaveTables& t = *st.tables;
  std::vector<double> b{0.0};
  auto add = [&](const RegionTable& tab) {
    for (double q : tab.q) {
      if (q > b.back() && q < q_end) b.push_back(q);
    }
  };
  add(t.inner);
  add(t.allowed);
  add(t.outer);
  b.push_back(q_end);
  return b;
}

}  // namespace detail

Region region_of(const Eigenstate& st, double q) noexcept {
  if (q < st.q_minus) return Region::inner;
  if (q <= st.q_plus) return Region::allowed;
  return Region::outer;
}

PsiValue eval_Psi_in(const Eigenstate& st, double q, Region r) {
  if (!st.tables) throw DomainError("eigenstate has no wave tables");
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw DomainError("Psi requires q > 0 (got " + std::to_string(q) + ")");
  }
  if (r == Region::inner && !(st.q_minus > 0.0)) {
    throw DomainError("this state has no inner region");
  }
  const detail::WaveTables& t = *st.tables;
  const QDerivatives qd = q_function(st.problem, st.e, q);
  PsiValue out;
  switch (r) {
    case Region::inner: {
      const LogDerivSample y = eval_Y(qd, complex(st.origin.t0));
      const double g = cumulative(st, r, q).real();
      out.psi = std::cos(st.origin.phi) * std::exp(-g) *
                std::pow(q / st.q_minus, t.kappa);
      out.dpsi = y.Y.real() * out.psi;
      out.residual = (qd.Q - y.dY - y.Y * y.Y).real() * out.psi;
      break;
    }
    case Region::allowed: {
      const LogDerivSample y = eval_Y_oscillatory(qd);
      const complex F = std::exp(cumulative(st, r, q) - complex(0.0, st.origin.phi));
      out.psi = F.real();
      out.dpsi = (y.Y * F).real();
      out.residual = ((qd.Q - y.dY - y.Y * y.Y) * F).real();
      break;
    }
    case Region::outer: {
      const LogDerivSample y = eval_Y(qd, complex(0.0));
      const double sign = st.n % 2 == 0 ? 0.5 : -0.5;
      out.psi = sign * std::exp(t.log_amplitude + cumulative(st, r, q).real());
      out.dpsi = y.Y.real() * out.psi;
      out.residual = (qd.Q - y.dY - y.Y * y.Y).real() * out.psi;
      break;
    }
  }
  if (!std::isfinite(out.psi) || !std::isfinite(out.dpsi) ||
      !std::isfinite(out.residual)) {
    throw EvaluationError("non-finite wave function at q = " + std::to_string(q));
  }
  return out;
}

double eval_Psi(const Eigenstate& st, double q) {
  return eval_Psi_in(st, q, region_of(st, q)).psi;
}

namespace detail {

WaveSample sample_at_q(const Eigenstate& st, double q) {
  const double s = st.problem.s();
  const double x = std::pow(q, s);
  const PsiValue v = eval_Psi_in(st, q, region_of(st, q));
  const double gamma = (s - 1.0) / (2.0 * s);
  const double xg = std::pow(q, (s - 1.0) / 2.0);
  const double qx = q / (s * x);
  WaveSample w;
  w.x = x;
  w.psi = st.norm * xg * v.psi;
  w.dpsi = st.norm * (gamma * xg / x * v.psi + xg * v.dpsi * qx);
  w.h_psi = st.e * w.psi + st.norm * xg * qx * qx * v.residual;
  return w;
}

}  // namespace detail

WaveSample eval_psi(const Eigenstate& st, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("psi requires x > 0 (got " + std::to_string(x) + ")");
  }
  WaveSample w = detail::sample_at_q(st, std::pow(x, 1.0 / st.problem.s()));
  w.x = x;
  return w;
}

double apply_H(const Eigenstate& st, double x) { return eval_psi(st, x).h_psi; }

double x_cut(const Eigenstate& st) {
  if (!st.tables) throw DomainError("eigenstate has no wave tables");
  return std::pow(st.tables->q_cut, st.problem.s());
}

double norm_integral(const Eigenstate& st, double scale) {
  if (!(scale > 0.0)) throw DomainError("scale must be positive");
  const double s = st.problem.s();
  const double q_end = std::pow(scale * x_cut(st), 1.0 / s);
  const auto breaks = detail::quadrature_breaks(st, q_end);
  QuadratureOptions opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = 1e-15 * st.norm * st.norm;
  auto density = [&](double q) {
    const double psi = eval_Psi(st, q);
    return st.norm * st.norm * s * std::pow(q, 2.0 * s - 2.0) * psi * psi;
  };
  double total = 0.0;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    total += integrate_adaptive(density, breaks[i - 1], breaks[i], opt).value;
  }
  return total;
}

Eigenstate normalize(const Eigenstate& st) {
  const double integral = norm_integral(st);
  if (!(integral > 0.0) || !std::isfinite(integral)) {
    throw EvaluationError("wave function norm is not positive");
  }
  Eigenstate out = st;
  out.norm = st.norm / std::sqrt(integral);
  return out;
}

std::vector<WaveSample> sample_grid(const Eigenstate& st,
                                    std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw DomainError("grid points must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw DomainError("grid must be strictly increasing");
    }
  }
  std::vector<WaveSample> out;
  out.reserve(grid.size());
  for (double x : grid) out.push_back(eval_psi(st, x));
  return out;
}

MatchingReport matching_report(const Eigenstate& st) {
  MatchingReport r;
  const double width = st.q_plus - st.q_minus;
  auto compare = [&](double q, Region left, Region right, double& gap,
                     double& jump) {
    const PsiValue a = eval_Psi_in(st, q, left);
    const PsiValue b = eval_Psi_in(st, q, right);
    const double vscale = std::max(std::abs(a.psi), std::abs(b.psi));
    const double sscale = std::max({std::abs(a.dpsi), std::abs(b.dpsi), vscale / width});
    gap = vscale > 0.0 ? std::abs(a.psi - b.psi) / vscale : 0.0;
    jump = sscale > 0.0 ? std::abs(a.dpsi - b.dpsi) / sscale : 0.0;
  };
  if (st.q_minus > 0.0) {
    compare(st.q_minus, Region::inner, Region::allowed, r.value_gap_minus,
            r.slope_jump_minus);
  }
  compare(st.q_plus, Region::allowed, Region::outer, r.value_gap_plus,
          r.slope_jump_plus);
  return r;
}

int count_nodes(const Eigenstate& st, int points) {
  if (points < 2) throw DomainError("need at least two sample points");
  const double xc = x_cut(st);
  int nodes = 0;
  double prev = 0.0;
  for (int i = 1; i <= points; ++i) {
    const double v = eval_psi(st, xc * i / points).psi;
    if (v != 0.0) {
      if (prev != 0.0 && (v > 0.0) != (prev > 0.0)) ++nodes;
      prev = v;
    }
  }
  return nodes;
}

}  // namespace uniwkb
