// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "qes/wavefunction.hpp"

using namespace qes;
using Catch::Approx;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("gauge factors", "[wavefunction]") {
  const auto g1 = gauge_factor(OneDModelI{0.0, 2.0, 4.0}, 1);
  CHECK(g1.g3 == Approx(-2.0 / 6.0));
  CHECK(g1.g2 == Approx(2.0 / 12.0));
  CHECK(g1.g1 == Approx(3.0 * 2.0 * 4.0 / 4.0));
  const auto g2 = gauge_factor(OneDModelII{0.0, 0.0, 2.0, 1.0}, 0);
  CHECK(g2.g3 == Approx(1.0 / (3.0 * kSqrt2)));
  CHECK(g2.g2 == Approx(2.0 / (2.0 * kSqrt2)));
  CHECK(g2.g1 == 0.0);
}

TEST_CASE("eval_psi", "[wavefunction]") {
  SECTION("model I j = 0 at the origin") {
    const auto lv = solve_levels(OneDModelI{0.0, 1.0, 1.0}, 0);
    REQUIRE(lv.size() == 1);
    const auto s = eval_psi(lv[0].f, 0.0);
    CHECK(s.psi == 1.0);
    CHECK_FALSE(s.saturated);
  }
  SECTION("zero of R") {
    const CoeffVector R({-1.0, 1.0});
    CHECK(eval_psi(GaugeFactor{-0.1, 0.2, 0.3}, R, 1.0).psi == 0.0);
  }
  SECTION("model II j = 0, B = 2, C = 1 at x = 1") {
    const auto lv = solve_levels(OneDModelII{0.0, 0.0, 2.0, 1.0}, 0);
    REQUIRE(lv.size() == 1);
    CHECK(eval_psi(lv[0].f, 1.0).psi == Approx(std::exp(4.0 / (3.0 * kSqrt2))).epsilon(1e-14));
  }
  SECTION("saturation far on the diverging tail") {
    const auto lv = solve_levels(OneDModelI{0.0, 1.0, 1.0}, 0);
    const auto s = eval_psi(lv[0].f, -50.0);
    CHECK(s.saturated);
    CHECK(std::isfinite(s.psi));
    CHECK(s.psi == Approx(std::exp(700.0)));
  }
}

TEST_CASE("schrodinger_residual", "[wavefunction]") {
  const auto xs = uniform_samples(-3.0, 3.0, 50);
  SECTION("model I j = 0") {
    const auto lv = solve_levels(OneDModelI{0.0, 1.0, 1.0}, 0);
    CHECK(schrodinger_residual(lv[0].f, xs).max_residual <= 1e-8);
  }
  SECTION("model II j = 1 both roots") {
    const auto lv = solve_levels(OneDModelII{0.0, 0.0, 2.0, 1.0}, 1);
    REQUIRE(lv.size() == 2);
    for (const auto& s : lv) CHECK(schrodinger_residual(s.f, xs).max_residual <= 1e-8);
  }
  SECTION("perturbed energy fails") {
    auto lv = solve_levels(OneDModelI{0.0, 1.0, 1.0}, 0);
    lv[0].f.energy += 0.1;
    CHECK(schrodinger_residual(lv[0].f, xs).max_residual > 1e-3);
  }
  SECTION("saturated samples are skipped") {
    const auto lv = solve_levels(OneDModelI{0.0, 1.0, 1.0}, 0);
    const std::vector<double> pts{-50.0, 0.0, 1.0};
    const auto r = schrodinger_residual(lv[0].f, pts);
    CHECK(r.saturated == 1);
    CHECK(r.evaluated == 2);
  }
}

TEST_CASE("count_nodes", "[wavefunction]") {
  CHECK(count_nodes(CoeffVector({1.0}), -5.0, 5.0) == 0);
  CHECK(count_nodes(CoeffVector({0.0, 1.0}), -5.0, 5.0) == 1);
  CHECK(count_nodes(CoeffVector({0.0, 0.0, 0.0, 1.0}), -5.0, 5.0) == 1);  // triple root, one sign change
  CHECK(count_nodes(CoeffVector({0.0, 0.0, 1.0}), -5.0, 5.0) == 0);       // touches zero
  SECTION("model II j = 1 upper level") {
    const auto lv = solve_levels(OneDModelII{0.0, 0.0, 2.0, 1.0}, 1);
    CHECK(count_nodes(lv[1].f.R, -10.0, 10.0) == 1);
    CHECK(lv[1].node_count == 1);
  }
  SECTION("node locations are refined") {
    const auto n = node_locations(CoeffVector({-2.0, 0.0, 1.0}), -5.0, 5.0);
    REQUIRE(n.size() == 2);
    CHECK(n[0] == Approx(-kSqrt2).margin(1e-11));
    CHECK(n[1] == Approx(kSqrt2).margin(1e-11));
  }
  CHECK_THROWS_AS(count_nodes(CoeffVector({1.0}), 1.0, 1.0), qes::invalid_argument);
}

TEST_CASE("node count bounded by j", "[wavefunction][property]") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  for (int trial = 0; trial < 10; ++trial)
    for (int j = 0; j <= 6; ++j) {
      for (const auto& s : solve_levels(OneDModelI{0.0, u(rng), u(rng)}, j)) CHECK(s.node_count <= j);
      for (const auto& s : solve_levels(OneDModelII{0.0, 0.0, u(rng), u(rng)}, j)) CHECK(s.node_count <= j);
    }
}

TEST_CASE("normalizability_report", "[wavefunction]") {
  CHECK(normalizability_report(gauge_factor(OneDModelI{0.0, 1.0, 1.0}, 0)).verdict == Normalizability::OneTailDiverges);
  const auto model1 = normalizability_report(gauge_factor(OneDModelI{0.0, 1.0, 1.0}, 0));
  CHECK(model1.tail_minus == 1);
  CHECK(model1.tail_plus == -1);
  CHECK(normalizability_report(GaugeFactor{0.0, -0.5, 0.0}).verdict == Normalizability::BothTailsDecay);
  CHECK(normalizability_report(GaugeFactor{0.0, 0.5, 0.0}).verdict == Normalizability::BothTailsDiverge);
  CHECK(normalizability_report(GaugeFactor{}).verdict == Normalizability::Undetermined);
  CHECK(normalizability_report(gauge_factor(OneDModelII{0.0, 0.0, 2.0, 1.0}, 0)).verdict ==
        Normalizability::OneTailDiverges);
}

TEST_CASE("gauge consistency reproduces the potential", "[wavefunction][property]") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  for (int trial = 0; trial < 5; ++trial) {
    const OneDModelI m1{0.0, u(rng), u(rng)};
    const OneDModelII m2{u(rng) - 1.0, 0.0, u(rng), u(rng)};
    for (int j = 0; j <= 3; ++j) {
      for (const auto& s : solve_levels(m1, j)) CHECK(gauge_consistency(s.f) <= 1e-10);
      for (const auto& s : solve_levels(m2, j)) CHECK(gauge_consistency(s.f) <= 1e-10);
      const auto c1 = constrained(m1, j);
      CHECK(operator_gauge_consistency(build_operator(c1, j), gauge_factor(c1, j), potential(c1),
                                       energy_map(c1, j, 0.37), 0.37) <= 1e-12);
      const auto c2 = constrained(m2, j);
      CHECK(operator_gauge_consistency(build_operator(c2, j), gauge_factor(c2, j), potential(c2),
                                       energy_map(c2, j, -0.2), -0.2) <= 1e-12);
    }
  }
  SECTION("the printed model II gauge sign is inconsistent") {
    const auto c2 = constrained(OneDModelII{0.0, 0.0, 2.0, 1.0}, 1);
    auto g = gauge_factor(c2, 1);
    g.g3 = -g.g3;
    g.g2 = -g.g2;
    CHECK(operator_gauge_consistency(build_operator(c2, 1), g, potential(c2), energy_map(c2, 1, 0.0), 0.0) > 0.1);
  }
}
