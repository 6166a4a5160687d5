// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_ALGEBRA_HPP_
#define QES_ALGEBRA_HPP_

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qes/error.hpp"
#include "qes/model.hpp"
#include "qes/polynomial.hpp"

namespace qes {

/// sl2(R) generators in the first-order differential realization
///   J+ = x^2 d/dx - j x,   J0 = x d/dx - j/2,   J- = d/dx.
enum class GeneratorKind { JPlus, JZero, JMinus };

/**
 * T = cMM J-^2 + cM J- + c0 J0 + cP J+ + cId 1 acting in the spin-j/2
 * representation. For integer j >= 0 the span of {1, x, ..., x^j} is
 * invariant because J+ annihilates x^j.
 */
struct AlgebraicOperator {
  double cMM = 0.0;
  double cM = 0.0;
  double c0 = 0.0;
  double cP = 0.0;
  double cId = 0.0;
  int j = 0;

  [[nodiscard]] bool finite() const {
    return std::isfinite(cMM) && std::isfinite(cM) && std::isfinite(c0) && std::isfinite(cP) &&
           std::isfinite(cId);
  }
};

/// Converts a real-valued representation index, rejecting non-integers.
inline int representation_index(double j) {
  if (!std::isfinite(j) || j < 0.0 || std::floor(j) != j)
    throw invalid_argument("j must be a non-negative integer");
  return static_cast<int>(j);
}

inline CoeffVector apply_generator(GeneratorKind gen, int j, const CoeffVector& p) {
  require_representation_index(j);
  const auto c = p.coeffs();
  const double half_j = 0.5 * static_cast<double>(j);
  switch (gen) {
    case GeneratorKind::JMinus: {
      if (c.size() <= 1) return {};
      std::vector<double> out(c.size() - 1, 0.0);
      for (std::size_t m = 1; m < c.size(); ++m) out[m - 1] = static_cast<double>(m) * c[m];
      return CoeffVector(std::move(out));
    }
    case GeneratorKind::JZero: {
      std::vector<double> out(c.size(), 0.0);
      for (std::size_t m = 0; m < c.size(); ++m) out[m] = (static_cast<double>(m) - half_j) * c[m];
      return CoeffVector(std::move(out));
    }
    case GeneratorKind::JPlus: {
      if (c.empty()) return {};
      std::vector<double> out(c.size() + 1, 0.0);
      for (std::size_t m = 0; m < c.size(); ++m)
        out[m + 1] = (static_cast<double>(m) - static_cast<double>(j)) * c[m];
      return CoeffVector(std::move(out));
    }
  }
  return {};
}

inline CoeffVector apply_operator(const AlgebraicOperator& t, const CoeffVector& p) {
  using enum GeneratorKind;
  const CoeffVector lowered = apply_generator(JMinus, t.j, p);
  CoeffVector out = t.cMM * apply_generator(JMinus, t.j, lowered);
  out += t.cM * lowered;
  out += t.c0 * apply_generator(JZero, t.j, p);
  out += t.cP * apply_generator(JPlus, t.j, p);
  out += t.cId * p;
  return out;
}

/// Largest coefficient of each commutator defect over the monomials tested.
struct CommutatorReport {
  double plus_minus = 0.0;  // [J+, J-] + 2 J0
  double zero_plus = 0.0;   // [J0, J+] - J+
  double zero_minus = 0.0;  // [J0, J-] + J-

  [[nodiscard]] double max() const { return std::max({plus_minus, zero_plus, zero_minus}); }
};

inline CommutatorReport commutator_report(int j, int max_degree) {
  require_representation_index(j);
  detail::require(max_degree >= 1, "max_degree must be at least 1");
  using enum GeneratorKind;
  auto app = [j](GeneratorKind g, const CoeffVector& p) { return apply_generator(g, j, p); };
  // Defects are scaled by the largest coefficient produced by either ordering.
  auto defect = [](const CoeffVector& d, const CoeffVector& ab, const CoeffVector& ba) {
    return d.max_abs() / std::max({1.0, ab.max_abs(), ba.max_abs()});
  };
  CommutatorReport r;
  for (int m = 0; m <= max_degree; ++m) {
    const auto xm = CoeffVector::monomial(static_cast<std::size_t>(m));
    const auto pm = app(JPlus, app(JMinus, xm));
    const auto mp = app(JMinus, app(JPlus, xm));
    r.plus_minus = std::max(r.plus_minus, defect(pm - mp + 2.0 * app(JZero, xm), pm, mp));

    const auto zp = app(JZero, app(JPlus, xm));
    const auto pz = app(JPlus, app(JZero, xm));
    r.zero_plus = std::max(r.zero_plus, defect(zp - pz - app(JPlus, xm), zp, pz));

    const auto zm = app(JZero, app(JMinus, xm));
    const auto mz = app(JMinus, app(JZero, xm));
    r.zero_minus = std::max(r.zero_minus, defect(zm - mz + app(JMinus, xm), zm, mz));
  }
  return r;
}

/// Which factor of a separable 2D problem an operator acts on.
enum class Axis { X, Y };

/// -J-^2 + 2B J- + 2A J+ : the quartic-oscillator axis operator shared by both 2D families.
inline AlgebraicOperator quartic_axis_operator(double A, double B, int j) {
  require_representation_index(j);
  return {-1.0, 2.0 * B, 0.0, 2.0 * A, 0.0, j};
}

/// -J-^2 + 2c J0 + c j : equals -d^2/dy^2 + 2 c y d/dy, which keeps every degree.
inline AlgebraicOperator oscillator_axis_operator(double c, int k) {
  require_representation_index(k);
  return {-1.0, 0.0, 2.0 * c, 0.0, c * static_cast<double>(k), k};
}

inline AlgebraicOperator build_operator(const OneDModelI& m, int j) {
  require_representation_index(j);
  validate(m);
  const double sc = std::sqrt(m.C);
  return {-1.0, -3.0 * (j + 1) * m.C / m.B, -2.0 * m.B / (3.0 * sc), sc, 0.0, j};
}

inline AlgebraicOperator build_operator(const OneDModelII& m, int j) {
  require_representation_index(j);
  validate(m);
  constexpr double r2 = std::numbers::sqrt2;
  return {-1.0, 0.0, -r2 * m.B, -r2 * m.C, 0.0, j};
}

inline AlgebraicOperator build_operator(const TwoDModelI& m, int j, Axis axis = Axis::X) {
  validate(m);
  return axis == Axis::X ? quartic_axis_operator(m.A, m.B, j) : oscillator_axis_operator(m.C, j);
}

inline AlgebraicOperator build_operator(const TwoDModelII& m, int j, Axis axis = Axis::X) {
  validate(m);
  return axis == Axis::X ? quartic_axis_operator(m.A1, m.B1, j) : quartic_axis_operator(m.A2, m.B2, j);
}

inline AlgebraicOperator build_operator(const PotentialModel& model, int j, Axis axis = Axis::X) {
  return std::visit(
      [&](const auto& m) -> AlgebraicOperator {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, OneDModelI> || std::is_same_v<M, OneDModelII>) {
          detail::require(axis == Axis::X, "one-dimensional models have no y axis");
          return build_operator(m, j);
        } else {
          return build_operator(m, j, axis);
        }
      },
      model);
}

}  // namespace qes

#endif  // QES_ALGEBRA_HPP_
