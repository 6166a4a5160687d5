// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "qes/recurrence.hpp"
#include "qes/roots.hpp"

using namespace qes;
using Catch::Approx;

namespace {

// Matrix of T restricted to span{1..x^j}, column m = T x^m.
Eigen::MatrixXd operator_matrix(const AlgebraicOperator& t) {
  const int n = t.j + 1;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    const auto col = apply_operator(t, CoeffVector::monomial(static_cast<std::size_t>(m)));
    for (int r = 0; r < n; ++r) M(r, m) = col[static_cast<std::size_t>(r)];
  }
  return M;
}

}  // namespace

TEST_CASE("initial condition and degrees", "[recurrence][property]") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  for (int trial = 0; trial < 5; ++trial) {
    const OneDModelI m1{0.0, u(rng), u(rng)};
    const OneDModelII m2{0.0, 0.0, u(rng), u(rng)};
    const TwoDModelI m3{u(rng), u(rng), u(rng), 1.0};
    for (int j = 0; j <= 6; ++j) {
      for (const auto& sp : {generate_polynomials(recurrence_spec(m1, j)), generate_polynomials(recurrence_spec(m2, j)),
                             generate_polynomials(recurrence_spec(m3, j))}) {
        REQUIRE(sp.P.size() == static_cast<std::size_t>(j) + 1);
        CHECK(sp.P[0].degree() == 0);
        CHECK(sp.P[0][0] == 1.0);
        for (int m = 0; m <= j; ++m) CHECK(sp.P[static_cast<std::size_t>(m)].degree() == m);
        CHECK(sp.critical.degree() == j + 1);
      }
    }
  }
}

TEST_CASE("critical polynomials for small j", "[recurrence]") {
  SECTION("model I, j = 0 is e") {
    const auto c = generate_polynomials(recurrence_spec(OneDModelI{0.0, 1.7, 0.9}, 0)).critical;
    CHECK(proportionality_check(c, EpsPolynomial({0.0, 1.0}), 1e-14).proportional);
  }
  SECTION("model I, j = 1, B = C = 1: raw form e^2 - 55/9") {
    // Hand recurrence: P1 = 1/3 - e, critical = -6 + (-1/3 - e) P1.
    const auto c = generate_polynomials(recurrence_spec(OneDModelI{0.0, 1.0, 1.0}, 1)).critical;
    CHECK(c[0] == Approx(-55.0 / 9.0).epsilon(1e-14));
    CHECK(c[1] == Approx(0.0).margin(1e-14));
    CHECK(c[2] == Approx(1.0).epsilon(1e-14));
    const auto pr = proportionality_check(c, EpsPolynomial({-55.0, 0.0, 9.0}), 1e-10);
    CHECK(pr.proportional);
    CHECK(pr.scale == Approx(1.0 / 9.0));
  }
  SECTION("model II, j = 1, B = 2, C = 1 is proportional to 2e^2 - 4") {
    const auto c = generate_polynomials(recurrence_spec(OneDModelII{0.0, 0.0, 2.0, 1.0}, 1)).critical;
    CHECK(proportionality_check(c, EpsPolynomial({-4.0, 0.0, 2.0}), 1e-12).proportional);
  }
}

TEST_CASE("critical roots equal the operator-matrix eigenvalues", "[recurrence]") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  for (int trial = 0; trial < 5; ++trial) {
    const OneDModelI m{0.0, u(rng), u(rng)};
    for (int j = 1; j <= 5; ++j) {
      const auto spec = recurrence_spec(m, j);
      const auto crit = generate_polynomials(spec).critical;
      Eigen::EigenSolver<Eigen::MatrixXd> es(operator_matrix(spec.op), false);
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const std::complex<double> z = es.eigenvalues()[i];
        // |crit(z)| relative to the size of its terms
        std::complex<double> acc = 0.0, pw = 1.0;
        double scale = 0.0;
        for (std::size_t k = 0; k < crit.size(); ++k, pw *= z) {
          acc += crit[k] * pw;
          scale += std::abs(crit[k] * pw);
        }
        CHECK(std::abs(acc) <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("proportionality_check", "[recurrence]") {
  const auto yes = proportionality_check(EpsPolynomial({-2.0, 0.0, 2.0}), EpsPolynomial({-1.0, 0.0, 1.0}), 1e-12);
  CHECK(yes.proportional);
  CHECK(yes.scale == Approx(2.0));
  CHECK_FALSE(proportionality_check(EpsPolynomial({1.0, 0.0, 1.0}), EpsPolynomial({-1.0, 0.0, 1.0}), 1e-12).proportional);
  CHECK_THROWS_AS(proportionality_check(EpsPolynomial(), EpsPolynomial({1.0}), 1e-12), qes::invalid_argument);
}

TEST_CASE("recurrence_self_test", "[recurrence]") {
  SECTION("model I j = 0 at e = 0") {
    CHECK(recurrence_self_test(recurrence_spec(OneDModelI{0.0, 1.0, 1.0}, 0), 0.0) == 0.0);
  }
  SECTION("model I j = 1 at sqrt(55)/3") {
    CHECK(recurrence_self_test(recurrence_spec(OneDModelI{0.0, 1.0, 1.0}, 1), std::sqrt(55.0) / 3.0) <= 1e-10);
  }
  SECTION("model II j = 1 at sqrt2") {
    CHECK(recurrence_self_test(recurrence_spec(OneDModelII{0.0, 0.0, 2.0, 1.0}, 1), std::sqrt(2.0)) <= 1e-10);
  }
  SECTION("non-root rejected") {
    CHECK_THROWS_AS(recurrence_self_test(recurrence_spec(OneDModelI{0.0, 1.0, 1.0}, 1), 1.0), qes::invalid_argument);
  }
}

TEST_CASE("self test holds for every real root up to j = 6", "[recurrence][property]") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    const OneDModelI m1{0.0, u(rng), u(rng)};
    const OneDModelII m2{0.0, 0.0, u(rng), u(rng)};
    for (int j = 0; j <= 6; ++j) {
      for (const auto& spec : {recurrence_spec(m1, j), recurrence_spec(m2, j)}) {
        const auto crit = generate_polynomials(spec).critical;
        for (double e : real_roots(crit).roots) CHECK(recurrence_self_test(spec, e) <= 1e-10);
      }
    }
  }
}

TEST_CASE("the recurrence vector is a left eigenvector, not R", "[recurrence]") {
  // B = 2, C = 1, j = 1, e = sqrt2: P = (1, 0) while T(1) = sqrt2 + sqrt2 x.
  const auto spec = recurrence_spec(OneDModelII{0.0, 0.0, 2.0, 1.0}, 1);
  const auto P = evaluate_at(generate_polynomials(spec), std::sqrt(2.0));
  CHECK(P[1] == Approx(0.0).margin(1e-15));
  const auto R = eigenfunction_coefficients(spec, std::sqrt(2.0));
  CHECK(R[0] == Approx(1.0));
  CHECK(R[1] == Approx(0.5));
}

TEST_CASE("degenerate weights abort", "[recurrence]") {
  RecurrenceSpec s = recurrence_spec(OneDModelI{0.0, 1.0, 1.0}, 2);
  s.up = [](int m) { return m == 0 ? 0.0 : static_cast<double>(m - 2); };
  CHECK_THROWS_AS(generate_polynomials(s), qes::degenerate_parameter_error);
}
