// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_POLYNOMIAL_HPP_
#define QES_POLYNOMIAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace qes {

/**
 * Dense real polynomial, coefficient of the constant term first.
 *
 * The tag separates polynomials in the coordinate x (basis-space elements
 * R(x), potentials, gauge exponents) from polynomials in the spectral
 * parameter, so the two cannot be mixed by accident. An empty coefficient
 * list is the zero polynomial. Trailing zeros are allowed in storage;
 * degree() ignores them.
 */
template <typename Tag>
class basic_polynomial {
 public:
  basic_polynomial() = default;
  explicit basic_polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {}
  basic_polynomial(std::initializer_list<double> coeffs) : c_(coeffs) {}

  static basic_polynomial monomial(std::size_t power, double scale = 1.0) {
    std::vector<double> c(power + 1, 0.0);
    c[power] = scale;
    return basic_polynomial(std::move(c));
  }

  static basic_polynomial constant(double v) { return basic_polynomial({v}); }

  /// Degree ignoring trailing zeros; -1 for the zero polynomial.
  [[nodiscard]] int degree() const {
    for (std::size_t i = c_.size(); i > 0; --i)
      if (c_[i - 1] != 0.0) return static_cast<int>(i - 1);
    return -1;
  }

  [[nodiscard]] bool is_zero() const { return degree() < 0; }
  [[nodiscard]] std::size_t size() const { return c_.size(); }
  [[nodiscard]] std::span<const double> coeffs() const { return c_; }
  [[nodiscard]] std::vector<double>& data() { return c_; }

  /// Coefficient of the given power; zero past the stored range.
  [[nodiscard]] double operator[](std::size_t power) const {
    return power < c_.size() ? c_[power] : 0.0;
  }

  [[nodiscard]] double leading() const {
    const int d = degree();
    return d < 0 ? 0.0 : c_[static_cast<std::size_t>(d)];
  }

  [[nodiscard]] double max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  [[nodiscard]] bool all_finite() const {
    return std::all_of(c_.begin(), c_.end(), [](double v) { return std::isfinite(v); });
  }

  /// Horner evaluation.
  [[nodiscard]] double operator()(double t) const {
    double acc = 0.0;
    for (std::size_t i = c_.size(); i > 0; --i) acc = acc * t + c_[i - 1];
    return acc;
  }

  [[nodiscard]] basic_polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<double> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
    return basic_polynomial(std::move(d));
  }

  /// Copy with trailing zeros dropped.
  [[nodiscard]] basic_polynomial trimmed() const {
    return basic_polynomial(std::vector<double>(c_.begin(), c_.begin() + (degree() + 1)));
  }

  basic_polynomial& operator+=(const basic_polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }

  basic_polynomial& operator-=(const basic_polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }

  basic_polynomial& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }

  friend basic_polynomial operator+(basic_polynomial a, const basic_polynomial& b) { return a += b; }
  friend basic_polynomial operator-(basic_polynomial a, const basic_polynomial& b) { return a -= b; }
  friend basic_polynomial operator*(basic_polynomial a, double s) { return a *= s; }
  friend basic_polynomial operator*(double s, basic_polynomial a) { return a *= s; }
  friend basic_polynomial operator-(basic_polynomial a) { return a *= -1.0; }

  friend basic_polynomial operator*(const basic_polynomial& a, const basic_polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t k = 0; k < b.c_.size(); ++k) r[i + k] += a.c_[i] * b.c_[k];
    return basic_polynomial(std::move(r));
  }

  /// Multiply by the variable raised to `power`.
  [[nodiscard]] basic_polynomial shifted(std::size_t power) const {
    if (c_.empty()) return {};
    std::vector<double> r(c_.size() + power, 0.0);
    std::copy(c_.begin(), c_.end(), r.begin() + static_cast<std::ptrdiff_t>(power));
    return basic_polynomial(std::move(r));
  }

  /// p(-t).
  [[nodiscard]] basic_polynomial reflected() const {
    auto r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

 private:
  std::vector<double> c_;
};

struct x_variable;
struct spectral_variable;

/// Polynomial in the coordinate x; element of the invariant subspace.
using CoeffVector = basic_polynomial<x_variable>;
/// Polynomial in the spectral parameter.
using EpsPolynomial = basic_polynomial<spectral_variable>;

/// Largest absolute coefficient of (a - b) divided by max(1, scale).
template <typename Tag>
double coefficient_defect(const basic_polynomial<Tag>& a, const basic_polynomial<Tag>& b, double scale) {
  return (a - b).max_abs() / std::max(1.0, scale);
}

}  // namespace qes

#endif  // QES_POLYNOMIAL_HPP_
