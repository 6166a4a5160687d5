// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <random>

#include "qes/polynomial.hpp"

using qes::CoeffVector;
using Catch::Approx;

TEST_CASE("degree ignores trailing zeros", "[polynomial]") {
  CHECK(CoeffVector().degree() == -1);
  CHECK(CoeffVector({0.0, 0.0}).degree() == -1);
  CHECK(CoeffVector({1.0, 2.0, 0.0, 0.0}).degree() == 1);
  CHECK(CoeffVector({1.0, 2.0, 0.0, 0.0}).trimmed().size() == 2);
}

TEST_CASE("arithmetic and evaluation agree pointwise", "[polynomial]") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    CoeffVector p({u(rng), u(rng), u(rng)}), q({u(rng), u(rng), u(rng), u(rng)});
    const double x = u(rng);
    CHECK((p * q)(x) == Approx(p(x) * q(x)).margin(1e-12));
    CHECK((p + q)(x) == Approx(p(x) + q(x)).margin(1e-12));
    CHECK((p - q)(x) == Approx(p(x) - q(x)).margin(1e-12));
    CHECK(p.shifted(2)(x) == Approx(x * x * p(x)).margin(1e-12));
    CHECK(p.reflected()(x) == Approx(p(-x)).margin(1e-12));
  }
}

TEST_CASE("derivative of a monomial", "[polynomial]") {
  const auto d = CoeffVector::monomial(4, 3.0).derivative();
  CHECK(d.degree() == 3);
  CHECK(d[3] == 12.0);
  CHECK(CoeffVector::constant(5.0).derivative().is_zero());
}
