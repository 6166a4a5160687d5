// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_MODEL_HPP_
#define QES_MODEL_HPP_

#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "qes/error.hpp"
#include "qes/polynomial.hpp"

namespace qes {

enum class Family { OneD_I, OneD_II, TwoD_I, TwoD_II };

/// V(x) = A/2 x^2 - B/3 x^3 + C/4 x^4. A is forced by the QES condition.
struct OneDModelI {
  double A = 0.0;
  double B = 1.0;
  double C = 1.0;
};

/// V(x) = V0 - A x + x^2 (B + C x)^2 / 2. A is forced by the QES condition.
struct OneDModelII {
  double V0 = 0.0;
  double A = 0.0;
  double B = 1.0;
  double C = 1.0;
};

/// V(x, y) = A^2 x^4 + 2AB x^2 + C^2 y^2 - 2A alpha x, alpha = j + 1.
struct TwoDModelI {
  double A = 1.0;
  double B = 1.0;
  double C = 1.0;
  double alpha = 1.0;
};

/// V(x, y) = A1^2 x^4 + A2^2 y^4 + 2A1B1 x^2 + 2A2B2 y^2 - 2A1 alpha x - 2A2 beta y.
struct TwoDModelII {
  double A1 = 1.0;
  double A2 = 1.0;
  double B1 = 0.0;
  double B2 = 0.0;
  double alpha = 1.0;
  double beta = 1.0;
};

using PotentialModel = std::variant<OneDModelI, OneDModelII, TwoDModelI, TwoDModelII>;

inline Family family_of(const PotentialModel& m) { return static_cast<Family>(m.index()); }

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::OneD_I: return "oned1";
    case Family::OneD_II: return "oned2";
    case Family::TwoD_I: return "twod1";
    case Family::TwoD_II: return "twod2";
  }
  return "unknown";
}

inline bool is_one_dimensional(Family f) { return f == Family::OneD_I || f == Family::OneD_II; }

namespace detail {

inline void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw domain_error(std::string(name) + " must be finite");
}

}  // namespace detail

/// Throws domain_error when the parameters fall outside the family's guards.
inline void validate(const OneDModelI& m) {
  detail::require_finite(m.A, "A");
  detail::require_finite(m.B, "B");
  detail::require_finite(m.C, "C");
  detail::require_domain(m.B != 0.0, "B must be nonzero");
  detail::require_domain(m.C > 0.0, "C must be positive");
}

inline void validate(const OneDModelII& m) {
  detail::require_finite(m.V0, "V0");
  detail::require_finite(m.A, "A");
  detail::require_finite(m.B, "B");
  detail::require_finite(m.C, "C");
  detail::require_domain(m.C != 0.0, "C must be nonzero");
}

inline void validate(const TwoDModelI& m) {
  detail::require_finite(m.A, "A");
  detail::require_finite(m.B, "B");
  detail::require_finite(m.C, "C");
  detail::require_domain(m.A != 0.0, "A must be nonzero");
  detail::require_domain(m.C > 0.0, "C must be positive");
}

inline void validate(const TwoDModelII& m) {
  for (auto [v, n] : {std::pair{m.A1, "A1"}, {m.A2, "A2"}, {m.B1, "B1"}, {m.B2, "B2"}})
    detail::require_finite(v, n);
  detail::require_domain(m.A1 != 0.0, "A1 must be nonzero");
  detail::require_domain(m.A2 != 0.0, "A2 must be nonzero");
}

inline void validate(const PotentialModel& m) {
  std::visit([](const auto& v) { validate(v); }, m);
}

/// Potential as a polynomial in x.
inline CoeffVector potential(const OneDModelI& m) {
  return CoeffVector({0.0, 0.0, m.A / 2.0, -m.B / 3.0, m.C / 4.0});
}

inline CoeffVector potential(const OneDModelII& m) {
  const CoeffVector inner({0.0, m.B, m.C});  // x (B + C x)
  return CoeffVector({m.V0, -m.A}) + 0.5 * (inner * inner);
}

/// Separable 2D potential V(x, y) = x_part(x) + y_part(y).
struct SeparablePotential {
  CoeffVector x_part;
  CoeffVector y_part;
};

inline SeparablePotential potential(const TwoDModelI& m) {
  return {CoeffVector({0.0, -2.0 * m.A * m.alpha, 2.0 * m.A * m.B, 0.0, m.A * m.A}),
          CoeffVector({0.0, 0.0, m.C * m.C})};
}

inline SeparablePotential potential(const TwoDModelII& m) {
  return {CoeffVector({0.0, -2.0 * m.A1 * m.alpha, 2.0 * m.A1 * m.B1, 0.0, m.A1 * m.A1}),
          CoeffVector({0.0, -2.0 * m.A2 * m.beta, 2.0 * m.A2 * m.B2, 0.0, m.A2 * m.A2})};
}

inline void require_representation_index(int j) {
  if (j < 0) throw invalid_argument("j must be a non-negative integer");
}

}  // namespace qes

#endif  // QES_MODEL_HPP_
