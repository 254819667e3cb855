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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "uniwkb/errors.hpp"
#include "uniwkb/log_derivative.hpp"
#include "uniwkb/problem.hpp"

using namespace uniwkb;

TEST_CASE("construction and substitution rule") {
  CHECK(choose_s(0) == 1.0);
  CHECK(choose_s(1) == 2.0);
  CHECK(choose_s(5) == 2.0);
  CHECK(PowerLawProblem(2.0, 0).s() == 1.0);
  CHECK(PowerLawProblem(2.0, 3).s() == 2.0);
  CHECK(PowerLawProblem(2.0, 3, 1.5).s() == 1.5);
  CHECK_THROWS_AS(PowerLawProblem(0.5, 0), DomainError);
  CHECK_THROWS_AS(PowerLawProblem(2.0, -1), DomainError);
  CHECK_THROWS_AS(PowerLawProblem(2.0, 1, 0.0), DomainError);
  CHECK(PowerLawProblem(1.5, 2).k() == 1.5);
}

TEST_CASE("nondimensionalization") {
  PhysicalSpec unit;
  unit.alpha = 1.0;
  unit.mass = 0.5;
  unit.hbar = 1.0;
  const auto id = nondimensionalize(unit);
  CHECK(id.length_scale == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(id.energy_scale == doctest::Approx(1.0).epsilon(1e-15));

  // Standard oscillator V = r^2 / 2 with hbar = m = 1: E0 = 3/2 for l = 0.
  PhysicalSpec osc;
  osc.k = 2.0;
  osc.alpha = 0.5;
  osc.mass = 1.0;
  osc.hbar = 1.0;
  const auto nd = nondimensionalize(osc);
  CHECK(1.5 / nd.energy_scale == doctest::Approx(3.0).epsilon(1e-14));

  // Doubling alpha changes E and the scale together; e stays put.
  PhysicalSpec osc2 = osc;
  osc2.alpha = 1.0;
  const auto nd2 = nondimensionalize(osc2);
  const double omega_ratio = std::sqrt(2.0);
  CHECK(nd2.energy_scale / nd.energy_scale == doctest::Approx(omega_ratio).epsilon(1e-14));

  // Round trip r -> x -> r and E -> e -> E.
  PhysicalSpec odd;
  odd.k = 3.3;
  odd.alpha = 2.7;
  odd.mass = 0.37;
  odd.hbar = 1.9;
  const auto o = nondimensionalize(odd);
  const double r = 1.234;
  const double E = 5.678;
  CHECK((r / o.length_scale) * o.length_scale == doctest::Approx(r).epsilon(1e-14));
  CHECK((E / o.energy_scale) * o.energy_scale == doctest::Approx(E).epsilon(1e-14));
  // The scales solve the dimensionless equation: hbar^2/(2m L^2) = alpha L^k = energy scale.
  const double L = o.length_scale;
  CHECK(odd.hbar * odd.hbar / (2 * odd.mass * L * L) == doctest::Approx(o.energy_scale).epsilon(1e-13));
  CHECK(odd.alpha * std::pow(L, odd.k) == doctest::Approx(o.energy_scale).epsilon(1e-13));

  PhysicalSpec bad;
  bad.alpha = -1.0;
  CHECK_THROWS_AS(nondimensionalize(bad), DomainError);
}

TEST_CASE("Q function values") {
  const auto a = q_function(PowerLawProblem(2.0, 0), 3.0, 1.0);
  CHECK(a.Q == doctest::Approx(-2.0).epsilon(1e-15));
  const auto b = q_function(PowerLawProblem(2.0, 1), 5.0, 1.0);
  CHECK(b.Q == doctest::Approx(-7.25).epsilon(1e-15));
  for (double q : {0.3, 1.0, 7.5}) {
    const auto c = q_function(PowerLawProblem(1.0, 0), 2.2, q);
    CHECK(c.Q == doctest::Approx(q - 2.2).epsilon(1e-15));
    CHECK(c.Q1 == 1.0);
    CHECK(c.Q2 == 0.0);
    CHECK(c.Q3 == 0.0);
  }
  CHECK_THROWS_AS(q_function(PowerLawProblem(2.0, 0), 3.0, 0.0), DomainError);
}

TEST_CASE("Q derivatives match finite differences") {
  const double ks[] = {1.0, 2.0, 4.0, 1.7};
  for (int i = 0; i < 100; ++i) {
    const double k = ks[i % 4];
    const int l = i % 3;
    const PowerLawProblem p(k, l);
    const double e = oracle::uniform(1.0, 20.0);
    const double q = oracle::uniform(0.3, 2.5);
    const double h = 1e-4 * q;
    const auto d = q_function(p, e, q);
    auto Q = [&](double x) { return q_function(p, e, x).Q; };
    auto Q1 = [&](double x) { return q_function(p, e, x).Q1; };
    auto Q2 = [&](double x) { return q_function(p, e, x).Q2; };
    CAPTURE(k);
    CAPTURE(l);
    CAPTURE(q);
    auto near = [](double a, double b, double scale) { return std::abs(a - b) <= 1e-6 * scale; };
    CHECK(near(d.Q1, oracle::central_difference(Q, q, h), 1.0 + std::abs(d.Q1)));
    CHECK(near(d.Q2, oracle::central_difference(Q1, q, h), 1.0 + std::abs(d.Q2)));
    CHECK(near(d.Q3, oracle::central_difference(Q2, q, h), 1.0 + std::abs(d.Q3)));
  }
}

TEST_CASE("turning points") {
  const auto t1 = turning_points(PowerLawProblem(2.0, 0), 3.0);
  CHECK(t1.q_minus == 0.0);
  CHECK(t1.q_plus == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));

  const auto t2 = turning_points(PowerLawProblem(2.0, 1), 5.0);
  const double disc = std::sqrt(25.0 - 4.0 * 2.1875);
  CHECK(t2.q_minus == doctest::Approx(std::pow((5.0 - disc) / 2.0, 0.25)).epsilon(1e-13));
  CHECK(t2.q_plus == doctest::Approx(std::pow((5.0 + disc) / 2.0, 0.25)).epsilon(1e-13));

  const auto t3 = turning_points(PowerLawProblem(1.0, 0), 2.33811);
  CHECK(t3.q_minus == 0.0);
  CHECK(t3.q_plus == doctest::Approx(2.33811).epsilon(1e-14));

  CHECK_THROWS_AS(turning_points(PowerLawProblem(2.0, 1), 1.0), NoBoundRegionError);
  CHECK_THROWS_AS(turning_points(PowerLawProblem(2.0, 0), -1.0), NoBoundRegionError);

  // Q vanishes at both ends and has the right sign pattern.
  for (double k : {1.0, 2.0, 4.0, 2.5}) {
    for (int l : {1, 2, 4}) {
      const PowerLawProblem p(k, l);
      const double e = 1.5 * effective_potential_minimum(p) + 0.5;
      const auto tp = turning_points(p, e);
      const auto qm = q_function(p, e, tp.q_minus);
      const auto qp = q_function(p, e, tp.q_plus);
      const double scale_m = std::abs(qm.Q1) * tp.q_minus;
      const double scale_p = std::abs(qp.Q1) * tp.q_plus;
      CAPTURE(k);
      CAPTURE(l);
      CHECK(std::abs(qm.Q) <= 1e-12 * scale_m);
      CHECK(std::abs(qp.Q) <= 1e-12 * scale_p);
      CHECK(q_function(p, e, 0.5 * (tp.q_minus + tp.q_plus)).Q < 0.0);
      CHECK(q_function(p, e, 0.5 * tp.q_minus).Q > 0.0);
      CHECK(q_function(p, e, 1.5 * tp.q_plus).Q > 0.0);
    }
  }
}

TEST_CASE("Airy arguments") {
  const PowerLawProblem lin(1.0, 0);
  for (double q : {0.5, 3.0}) {
    const auto aa = airy_arguments(lin, 2.0, q);
    CHECK(aa.a == doctest::Approx(q - 2.0).epsilon(1e-15));
    CHECK(aa.b1 == 1.0);
    CHECK(aa.b2 == 0.0);
  }
  const auto h = airy_arguments(PowerLawProblem(2.0, 0), 3.0, 2.0);
  CHECK(h.a == doctest::Approx(1.0 / std::pow(4.0, 2.0 / 3.0)).epsilon(1e-14));
  CHECK(h.b1 == doctest::Approx(std::cbrt(4.0)).epsilon(1e-14));
  CHECK(h.b2 == doctest::Approx(0.5).epsilon(1e-15));

  const PowerLawProblem p(2.0, 1);
  const auto tp = turning_points(p, 5.0);
  CHECK(std::abs(airy_arguments(p, 5.0, tp.q_plus).a) <= 1e-12);

  // Stationary point of Q for k = 2, l = 1, s = 2: Q1 = 16 q^3 - 40 q - 17.5 / q^3 = 0.
  const auto qd = q_function(p, 5.0, 1.0);
  CHECK_THROWS_AS(airy_arguments(QDerivatives{1.0, qd.Q, 0.0, qd.Q2, qd.Q3}), StationaryPointError);
}

TEST_CASE("origin matching data") {
  const auto o0 = origin_mixture(PowerLawProblem(2.0, 0));
  CHECK(o0.a0 == 0.0);
  CHECK(o0.c == doctest::Approx(1.0 - std::sqrt(1.875)).epsilon(1e-15));
  CHECK(o0.t0 == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-13));
  CHECK(o0.phi == doctest::Approx(std::numbers::pi / 2).epsilon(1e-13));

  CHECK(origin_mixture(PowerLawProblem(2.0, 0, 2.0)).a0 == doctest::Approx(std::cbrt(3.0 / 16.0)).epsilon(1e-15));

  const auto o1 = origin_mixture(PowerLawProblem(2.0, 1));
  CHECK(o1.a0 == doctest::Approx(std::cbrt(35.0 / 16.0)).epsilon(1e-15));
  CHECK(o1.c == doctest::Approx(1.0 - std::sqrt(7.1875)).epsilon(1e-14));
  // t0 from long-double series Airy values.
  const auto A = oracle::maclaurin_airy(o1.a0);
  const double t0 = double((-o1.c * A.ai + o1.a0 * A.dai) / (o1.c * A.bi - o1.a0 * A.dbi));
  CHECK(o1.t0 == doctest::Approx(t0).epsilon(1e-11));
  CHECK(o1.phi == doctest::Approx(std::numbers::pi / 3 - std::atan(t0)).epsilon(1e-12));
}

TEST_CASE("origin consistency for l >= 1") {
  for (int l : {1, 2, 3}) {
    const PowerLawProblem p(2.0, l);
    const auto o = origin_mixture(p);
    const auto A = oracle::maclaurin_airy(o.a0);
    const long double y1 = (A.dai + o.t0 * A.dbi) / (A.ai + o.t0 * A.bi);
    const long double a = o.a0;
    const long double y2 = (-8 * a * a * y1 * y1 - 3 - 4 * a * y1 + 8 * a * a * a) / 30;
    const double lhs = double(-(2 * a * y1 + 3 * y2));
    CAPTURE(l);
    CHECK(std::abs(lhs - (2.0 * l + 1.5)) <= 1e-9);
  }
}
