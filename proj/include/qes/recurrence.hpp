// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_RECURRENCE_HPP_
#define QES_RECURRENCE_HPP_

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qes/algebra.hpp"
#include "qes/error.hpp"
#include "qes/model.hpp"
#include "qes/polynomial.hpp"

namespace qes {

/**
 * Four-term spectral recurrence
 *
 *   w2(m) P[m-2] + w1(m) P[m-1] + (w0(m) - e) P[m] + up(m) P[m+1] = 0,   P[0] = 1.
 *
 * The weights are the matrix elements of T in the monomial basis read
 * column-wise: T x^m = w2(m) x^(m-2) + w1(m) x^(m-1) + w0(m) x^m + up(m) x^(m+1).
 * The recurrence is therefore the transposed eigen-equation (P is a left
 * eigenvector of T); up(j) = 0 truncates it at m = j.
 */
struct RecurrenceSpec {
  int j = 0;
  AlgebraicOperator op;  // the operator whose matrix the weights must reproduce
  std::function<double(int)> w2;
  std::function<double(int)> w1;
  std::function<double(int)> w0;
  std::function<double(int)> up;
};

namespace detail {

inline RecurrenceSpec quartic_axis_recurrence(double A, double B, int j) {
  RecurrenceSpec s;
  s.j = j;
  s.op = quartic_axis_operator(A, B, j);
  s.w2 = [](int m) { return -static_cast<double>(m) * (m - 1); };
  s.w1 = [B](int m) { return 2.0 * B * m; };
  s.w0 = [](int) { return 0.0; };
  s.up = [A, j](int m) { return 2.0 * A * (m - j); };
  return s;
}

}  // namespace detail

inline RecurrenceSpec recurrence_spec(const OneDModelI& model, int j) {
  RecurrenceSpec s;
  s.j = j;
  s.op = build_operator(model, j);
  const double B = model.B, C = model.C, sc = std::sqrt(model.C);
  s.w2 = [](int m) { return -static_cast<double>(m) * (m - 1); };
  s.w1 = [=](int m) { return -3.0 * m * (j + 1) * C / B; };
  s.w0 = [=](int m) { return -(2.0 * B / (3.0 * sc)) * (m - 0.5 * j); };
  s.up = [=](int m) { return sc * (m - j); };
  return s;
}

inline RecurrenceSpec recurrence_spec(const OneDModelII& model, int j) {
  RecurrenceSpec s;
  s.j = j;
  s.op = build_operator(model, j);
  constexpr double r2 = std::numbers::sqrt2;
  const double B = model.B, C = model.C;
  s.w2 = [](int m) { return -static_cast<double>(m) * (m - 1); };
  s.w1 = [](int) { return 0.0; };
  s.w0 = [=](int m) { return -r2 * B * (m - 0.5 * j); };
  s.up = [=](int m) { return -r2 * C * (m - j); };
  return s;
}

/// The y axis of TwoD_I has no raising term and is handled by the oscillator ladder instead.
inline RecurrenceSpec recurrence_spec(const TwoDModelI& model, int j) {
  validate(model);
  return detail::quartic_axis_recurrence(model.A, model.B, j);
}

inline RecurrenceSpec recurrence_spec(const TwoDModelII& model, int j, Axis axis = Axis::X) {
  validate(model);
  return axis == Axis::X ? detail::quartic_axis_recurrence(model.A1, model.B1, j)
                         : detail::quartic_axis_recurrence(model.A2, model.B2, j);
}

inline RecurrenceSpec recurrence_spec(const PotentialModel& model, int j) {
  return std::visit([j](const auto& m) { return recurrence_spec(m, j); }, model);
}

struct SpectralPolynomials {
  std::vector<EpsPolynomial> P;  // P[0] .. P[j]
  EpsPolynomial critical;        // recurrence left-hand side at m = j, degree j + 1
};

namespace detail {

/// w2(m) P[m-2] + w1(m) P[m-1] + (w0(m) - e) P[m]
inline EpsPolynomial recurrence_lhs(const RecurrenceSpec& s, const std::vector<EpsPolynomial>& P, int m) {
  const auto um = static_cast<std::size_t>(m);
  EpsPolynomial t = s.w0(m) * P[um] - P[um].shifted(1);
  if (m >= 1) t += s.w1(m) * P[um - 1];
  if (m >= 2) t += s.w2(m) * P[um - 2];
  return t;
}

}  // namespace detail

inline SpectralPolynomials generate_polynomials(const RecurrenceSpec& s) {
  require_representation_index(s.j);
  if (s.up(s.j) != 0.0) throw invalid_argument("recurrence does not truncate at m = j");
  SpectralPolynomials out;
  out.P.reserve(static_cast<std::size_t>(s.j) + 1);
  out.P.push_back(EpsPolynomial::constant(1.0));
  for (int m = 0; m < s.j; ++m) {
    const double w = s.up(m);
    if (w == 0.0 || !std::isfinite(w))
      throw degenerate_parameter_error("recurrence weight of P[" + std::to_string(m + 1) +
                                       "] vanishes before the truncation index");
    EpsPolynomial next = detail::recurrence_lhs(s, out.P, m) * (-1.0 / w);
    if (next.degree() != m + 1 || !next.all_finite())
      throw degenerate_parameter_error("P[" + std::to_string(m + 1) + "] lost its leading term");
    out.P.push_back(next.trimmed());
  }
  out.critical = detail::recurrence_lhs(s, out.P, s.j).trimmed();
  if (out.critical.degree() != s.j + 1) throw degenerate_parameter_error("critical polynomial has wrong degree");
  return out;
}

struct Proportionality {
  bool proportional = false;
  double scale = 0.0;   // p ~= scale * q
  double defect = 0.0;  // max |p - scale q| / max |p|
};

/// Least-squares scale between two polynomials and the relative coefficient defect.
template <typename Tag>
Proportionality proportionality_check(const basic_polynomial<Tag>& p, const basic_polynomial<Tag>& q, double tol) {
  if (p.is_zero() || q.is_zero()) throw invalid_argument("proportionality of a zero polynomial");
  const std::size_t n = std::max(p.size(), q.size());
  double pq = 0.0, qq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    pq += p[i] * q[i];
    qq += q[i] * q[i];
  }
  Proportionality r;
  r.scale = pq / qq;
  r.defect = (p - r.scale * q).max_abs() / p.max_abs();
  r.proportional = r.scale != 0.0 && r.defect <= tol;
  return r;
}

/// Evaluates P[0..j] at a fixed spectral value.
inline std::vector<double> evaluate_at(const SpectralPolynomials& sp, double e) {
  std::vector<double> v;
  v.reserve(sp.P.size());
  for (const auto& p : sp.P) v.push_back(p(e));
  return v;
}

/// Scales so the largest-magnitude coefficient equals +1 (first one wins ties).
inline CoeffVector normalize_max_abs(CoeffVector r) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (std::abs(r[i]) > std::abs(r[best])) best = i;
  if (r[best] != 0.0) r *= 1.0 / r[best];
  return r;
}

/**
 * Coefficients of R(x) with T R = e R inside span{1, ..., x^j}.
 *
 * Solves rows j, j-1, ..., 1 of (T - e) a = 0 for a[n-1] starting from a[j] = 1.
 * Row 0 is the remaining condition and holds exactly when e is a root of the
 * critical polynomial.
 */
inline CoeffVector eigenfunction_coefficients(const RecurrenceSpec& s, double e) {
  require_representation_index(s.j);
  const auto n_coef = static_cast<std::size_t>(s.j) + 1;
  std::vector<double> a(n_coef + 2, 0.0);
  a[n_coef - 1] = 1.0;
  for (int n = s.j; n >= 1; --n) {
    const auto un = static_cast<std::size_t>(n);
    const double w = s.up(n - 1);
    if (w == 0.0 || !std::isfinite(w)) throw degenerate_parameter_error("eigenfunction recurrence weight vanishes");
    const double row = (s.w0(n) - e) * a[un] + s.w1(n + 1) * a[un + 1] + s.w2(n + 2) * a[un + 2];
    a[un - 1] = -row / w;
  }
  a.resize(n_coef);
  return normalize_max_abs(CoeffVector(std::move(a)));
}

struct SelfTestReport {
  double right = 0.0;  // |T R - e R| / |R| with R from eigenfunction_coefficients
  double left = 0.0;   // |P T - e P| / |P| with P[m] evaluated at e
  [[nodiscard]] double max() const { return std::max(right, left); }
};

inline bool is_root(const EpsPolynomial& p, double e, double rel_tol = 1e-8) {
  double scale = 0.0, pw = 1.0;
  for (std::size_t k = 0; k < p.size(); ++k, pw *= std::abs(e)) scale += std::abs(p[k]) * pw;
  return std::abs(p(e)) <= rel_tol * scale;
}

/// Checks a root against the operator built by the algebra module, both as a
/// right eigenvector (the physical R) and through the transposed recurrence identity.
inline SelfTestReport recurrence_self_test_report(const RecurrenceSpec& s, double e) {
  const auto sp = generate_polynomials(s);
  if (!is_root(sp.critical, e)) throw invalid_argument("value is not a root of the critical polynomial");

  SelfTestReport rep;
  const CoeffVector R = eigenfunction_coefficients(s, e);
  rep.right = (apply_operator(s.op, R) - e * R).max_abs() / R.max_abs();

  const auto P = evaluate_at(sp, e);
  double pmax = 0.0, worst = 0.0;
  for (double v : P) pmax = std::max(pmax, std::abs(v));
  for (int n = 0; n <= s.j; ++n) {
    const CoeffVector col = apply_operator(s.op, CoeffVector::monomial(static_cast<std::size_t>(n)));
    double acc = -e * P[static_cast<std::size_t>(n)];
    for (int m = 0; m <= s.j; ++m) acc += P[static_cast<std::size_t>(m)] * col[static_cast<std::size_t>(m)];
    worst = std::max(worst, std::abs(acc));
  }
  rep.left = worst / pmax;
  return rep;
}

inline double recurrence_self_test(const RecurrenceSpec& s, double e) { return recurrence_self_test_report(s, e).max(); }

}  // namespace qes

#endif  // QES_RECURRENCE_HPP_
