// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_CLOSED_FORMS_HPP_
#define QES_CLOSED_FORMS_HPP_

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qes/model.hpp"
#include "qes/recurrence.hpp"

namespace qes {

/**
 * Tabulated critical polynomials for j = 0..3 with denominators cleared.
 * Variables: e for the 1D families, s = -(x-axis T eigenvalue) for TwoD_I.
 * Returns nullopt for j > 3.
 */
inline std::optional<EpsPolynomial> closed_form(const OneDModelI& m, int j) {
  const double B = m.B, C = m.C;
  const double c52 = std::pow(C, 2.5), c72 = std::pow(C, 3.5);
  switch (j) {
    case 0: return EpsPolynomial({0.0, 1.0});
    case 1: return EpsPolynomial({-B * B * B - 54.0 * c52, 0.0, 9.0 * B * C});
    case 2: return EpsPolynomial({36.0 * B * C * C, -4.0 * (B * B * B + 81.0 * c52), 0.0, 9.0 * B * C});
    case 3:
      return EpsPolynomial({std::pow(B, 6) + 216.0 * B * B * B * c52 + 11664.0 * std::pow(C, 5),
                            216.0 * B * B * C * C * C, -(10.0 * std::pow(B, 4) * C + 1080.0 * B * c72), 0.0,
                            9.0 * B * B * C * C});
    default: return std::nullopt;
  }
}

inline std::optional<EpsPolynomial> closed_form(const OneDModelII& m, int j) {
  const double B = m.B, C = m.C, r2 = std::numbers::sqrt2;
  switch (j) {
    case 0: return EpsPolynomial({0.0, 1.0});
    case 1: return EpsPolynomial({-B * B, 0.0, 2.0});
    case 2: return EpsPolynomial({-4.0 * r2 * B * C, -2.0 * r2 * B * B + 4.0 * C, 0.0, r2});
    case 3:
      return EpsPolynomial({9.0 * B * B * (B * B - 4.0 * r2 * C), 96.0 * B * C, -20.0 * (B * B - 2.0 * r2 * C), 0.0,
                            4.0});
    default: return std::nullopt;
  }
}

inline std::optional<EpsPolynomial> closed_form(const TwoDModelI& m, int j) {
  const double A = m.A, B = m.B;
  switch (j) {
    case 0: return EpsPolynomial({0.0, 1.0});
    case 1: return EpsPolynomial({4.0 * A * B, 0.0, 1.0});
    case 2: return EpsPolynomial({-16.0 * A * A, 16.0 * A * B, 0.0, 1.0});
    case 3: return EpsPolynomial({144.0 * A * A * B * B, -96.0 * A * A, 40.0 * A * B, 0.0, 1.0});
    default: return std::nullopt;
  }
}

/// Generated critical polynomial expressed in the tabulated variable.
inline EpsPolynomial critical_in_tabulated_variable(const OneDModelI& m, int j) {
  return generate_polynomials(recurrence_spec(m, j)).critical;
}
inline EpsPolynomial critical_in_tabulated_variable(const OneDModelII& m, int j) {
  return generate_polynomials(recurrence_spec(m, j)).critical;
}
inline EpsPolynomial critical_in_tabulated_variable(const TwoDModelI& m, int j) {
  return generate_polynomials(recurrence_spec(m, j)).critical.reflected();
}

struct ClosedFormCheck {
  int j = 0;
  bool available = false;
  Proportionality result;
};

template <typename Model>
ClosedFormCheck closed_form_check(const Model& m, int j, double tol = 1e-10) {
  ClosedFormCheck c;
  c.j = j;
  const auto tab = closed_form(m, j);
  if (!tab) return c;
  c.available = true;
  c.result = proportionality_check(critical_in_tabulated_variable(m, j), *tab, tol);
  return c;
}

}  // namespace qes

#endif  // QES_CLOSED_FORMS_HPP_
