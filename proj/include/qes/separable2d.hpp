// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_SEPARABLE2D_HPP_
#define QES_SEPARABLE2D_HPP_

#include <algorithm>
#include <cmath>
#include <future>
#include <span>
#include <tuple>
#include <vector>

#include "qes/algebra.hpp"
#include "qes/model.hpp"
#include "qes/polynomial.hpp"
#include "qes/recurrence.hpp"
#include "qes/roots.hpp"
#include "qes/spectra.hpp"
#include "qes/wavefunction.hpp"

namespace qes {

/**
 * One factor of a separated problem, psi_axis = exp(gauge) * poly with
 * gauge = -W. The polynomial factor obeys
 *
 *   -P'' + drift P' + (offset - E_axis - ground_constant) P = 0,
 *
 * where drift = 2 W', ground = W'^2 - W'' (the potential exp(-W) solves
 * with zero energy up to ground_constant) and offset = V_axis - ground + ground_constant.
 */
struct AxisEquation {
  GaugeFactor gauge;
  CoeffVector drift;
  CoeffVector ground;  // W'^2 - W'' including its constant term
  CoeffVector offset;  // V_axis - (ground - ground[0])
  CoeffVector potential;
};

/// Separated form of a 2D problem with no cross term in the ground-state exponent.
struct SeparatedProblem {
  Family family = Family::TwoD_I;
  AxisEquation x;
  AxisEquation y;
  double E0 = 0.0;  // ground energy of exp(-W - F); equals -(ground_x[0] + ground_y[0])

  /// Ground-state potential V0 = (W'^2 - W'') + (F'^2 - F'') + E0, split per axis with no constants.
  [[nodiscard]] CoeffVector v0_x() const { return x.ground - CoeffVector::constant(x.ground[0]); }
  [[nodiscard]] CoeffVector v0_y() const { return y.ground - CoeffVector::constant(y.ground[0]); }
};

namespace detail {

inline AxisEquation make_axis(const GaugeFactor& gauge, const CoeffVector& potential) {
  AxisEquation a;
  a.gauge = gauge;
  a.potential = potential;
  const CoeffVector dW = -1.0 * gauge.exponent().derivative();
  a.drift = 2.0 * dW;
  a.ground = dW * dW - dW.derivative();
  a.offset = potential - (a.ground - CoeffVector::constant(a.ground[0]));
  return a;
}

}  // namespace detail

inline SeparatedProblem separate(const TwoDModelI& m) {
  validate(m);
  const auto v = potential(m);
  SeparatedProblem p;
  p.family = Family::TwoD_I;
  p.x = detail::make_axis(quartic_axis_gauge(m.A, m.B), v.x_part);
  p.y = detail::make_axis(oscillator_axis_gauge(m.C), v.y_part);
  p.E0 = -(p.x.ground[0] + p.y.ground[0]);
  return p;
}

inline SeparatedProblem separate(const TwoDModelII& m) {
  validate(m);
  const auto v = potential(m);
  SeparatedProblem p;
  p.family = Family::TwoD_II;
  p.x = detail::make_axis(quartic_axis_gauge(m.A1, m.B1), v.x_part);
  p.y = detail::make_axis(quartic_axis_gauge(m.A2, m.B2), v.y_part);
  p.E0 = -(p.x.ground[0] + p.y.ground[0]);
  return p;
}

/// c1 = 2 c k: the y equation -Q'' + 2 c y Q' - c1 Q = 0 then has a degree-k polynomial solution.
inline double quantize_separation_constant(double c, int k) {
  detail::require(k >= 0, "k must be a non-negative integer");
  detail::require_domain(c > 0.0, "oscillator stiffness must be positive");
  return 2.0 * c * k;
}

/// Monic degree-k solution of -Q'' + 2 c y Q' = 2 c k Q (a scaled Hermite polynomial).
inline CoeffVector oscillator_polynomial(double c, int k) {
  detail::require(k >= 0, "k must be a non-negative integer");
  detail::require_domain(c > 0.0, "oscillator stiffness must be positive");
  std::vector<double> a(static_cast<std::size_t>(k) + 1, 0.0);
  a[static_cast<std::size_t>(k)] = 1.0;
  for (int n = k - 2; n >= 0; n -= 2) {
    const auto un = static_cast<std::size_t>(n);
    a[un] = (n + 2.0) * (n + 1.0) * a[un + 2] / (2.0 * c * (n - k));
  }
  return CoeffVector(std::move(a));
}

struct Hypergeometric {
  double value = 1.0;
  int terms = 1;          // nonzero terms summed, including the leading 1
  bool converged = true;  // false when the 500-term cap was hit
};

/// Kummer series 1F1(a; b; z) = sum (a)_n / (b)_n z^n / n!.
inline Hypergeometric eval_1F1(double a, double b, double z) {
  constexpr int kMaxTerms = 500;
  Hypergeometric h;
  double term = 1.0, sum = 1.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    if (a + n == 0.0 || z == 0.0) return h;  // series has terminated
    if (b + n == 0.0) throw invalid_argument("1F1 lower parameter is a non-positive integer");
    term *= (a + n) / (b + n) * z / (n + 1.0);
    sum += term;
    ++h.terms;
    h.value = sum;
    if (std::abs(term) < 1e-16 * std::abs(sum)) return h;
  }
  h.converged = false;
  return h;
}

/// General solution N1 y 1F1(1/2 - c1/(4c); 3/2; c y^2) + N2 1F1(-c1/(4c); 1/2; c y^2).
inline double oscillator_solution(double c, double c1, double n1, double n2, double y) {
  detail::require_domain(c > 0.0, "oscillator stiffness must be positive");
  const double z = c * y * y;
  double v = 0.0;
  if (n1 != 0.0) v += n1 * y * eval_1F1(0.5 - c1 / (4.0 * c), 1.5, z).value;
  if (n2 != 0.0) v += n2 * eval_1F1(-c1 / (4.0 * c), 0.5, z).value;
  return v;
}

struct TwoDLevel {
  int k = 0;  // y label: oscillator excitation (TwoD_I) or y-root index (TwoD_II)
  int r = 0;  // x-root index
  double c1 = 0.0;
  double lambda_x = 0.0;  // eigenvalue of the x-axis operator
  double E_total = 0.0;
  Eigenfunction1D x;  // energy is the x share E_x
  Eigenfunction1D y;  // energy is the y share E_y
  double n1 = 0.0;    // weights of the 1F1 pair (TwoD_I only)
  double n2 = 0.0;
  double residual_x = 0.0;
  double residual_y = 0.0;
  double self_test_x = 0.0;
};

struct TwoDSpectrum {
  PotentialModel model;  // with the forced state parameters
  double E0 = 0.0;
  EpsPolynomial x_critical;
  EpsPolynomial y_critical;  // TwoD_II only
  std::vector<TwoDLevel> levels;
  int complex_root_count = 0;  // x-axis non-real roots (per ladder rung for TwoD_I), counted individually
  int y_complex_root_count = 0;
};

struct TwoDOptions {
  double sample_lo = -3.0;
  double sample_hi = 3.0;
  int samples = 50;
  double root_tol = 1e-9;
  bool parallel = false;
};

namespace detail {

inline void sort_levels(std::vector<TwoDLevel>& levels) {
  std::stable_sort(levels.begin(), levels.end(), [](const TwoDLevel& a, const TwoDLevel& b) {
    return std::tie(a.E_total, a.k, a.r) < std::tie(b.E_total, b.k, b.r);
  });
}

inline void attach_residuals(TwoDLevel& lv, std::span<const double> xs) {
  lv.residual_x = schrodinger_residual(lv.x, xs).max_residual;
  lv.residual_y = schrodinger_residual(lv.y, xs).max_residual;
}

}  // namespace detail

inline TwoDSpectrum solve_2d_model1(const TwoDModelI& base, int j, int k_max, const TwoDOptions& opt = {}) {
  require_representation_index(j);
  detail::require(k_max >= 0, "k_max must be non-negative");
  const TwoDModelI m = constrained(base, j);
  const SeparatedProblem sep = separate(m);
  const RecurrenceSpec xs_spec = recurrence_spec(m, j);
  const auto polys = generate_polynomials(xs_spec);
  const auto rr = real_roots(polys.critical, opt.root_tol);
  const auto xs = uniform_samples(opt.sample_lo, opt.sample_hi, opt.samples);

  std::vector<CoeffVector> R;
  std::vector<double> self;
  for (double lam : rr.roots) {
    R.push_back(eigenfunction_coefficients(xs_spec, lam));
    self.push_back(recurrence_self_test(xs_spec, lam));
  }

  auto rung = [&](int k) {
    std::vector<TwoDLevel> out;
    const double c1 = quantize_separation_constant(m.C, k);
    const CoeffVector Q = oscillator_polynomial(m.C, k);
    for (std::size_t r = 0; r < rr.roots.size(); ++r) {
      TwoDLevel lv;
      lv.k = k;
      lv.r = static_cast<int>(r);
      lv.c1 = c1;
      lv.lambda_x = rr.roots[r];
      lv.E_total = sep.E0 + c1 + lv.lambda_x;
      lv.x = {sep.x.gauge, R[r], sep.x.potential, lv.lambda_x - sep.x.ground[0]};
      lv.y = {sep.y.gauge, Q, sep.y.potential, c1 - sep.y.ground[0]};
      lv.n1 = (k % 2 == 1) ? 1.0 : 0.0;
      lv.n2 = (k % 2 == 0) ? 1.0 : 0.0;
      lv.self_test_x = self[r];
      detail::attach_residuals(lv, xs);
      out.push_back(std::move(lv));
    }
    return out;
  };

  TwoDSpectrum s;
  s.model = m;
  s.E0 = sep.E0;
  s.x_critical = polys.critical;
  s.complex_root_count = rr.complex_count;
  if (opt.parallel) {
    std::vector<std::future<std::vector<TwoDLevel>>> jobs;
    for (int k = 0; k <= k_max; ++k) jobs.push_back(std::async(std::launch::async, rung, k));
    for (auto& f : jobs)
      for (auto& lv : f.get()) s.levels.push_back(std::move(lv));
  } else {
    for (int k = 0; k <= k_max; ++k)
      for (auto& lv : rung(k)) s.levels.push_back(std::move(lv));
  }
  detail::sort_levels(s.levels);
  return s;
}

inline TwoDSpectrum solve_2d_model2(const TwoDModelII& base, int jx, int jy, const TwoDOptions& opt = {}) {
  require_representation_index(jx);
  require_representation_index(jy);
  const TwoDModelII m = constrained(base, jx, jy);
  const SeparatedProblem sep = separate(m);
  const RecurrenceSpec ys_spec = recurrence_spec(m, jy, Axis::Y);
  const RecurrenceSpec xs_spec = recurrence_spec(m, jx, Axis::X);
  const auto ypolys = generate_polynomials(ys_spec);
  const auto xpolys = generate_polynomials(xs_spec);
  const auto yr = real_roots(ypolys.critical, opt.root_tol);
  const auto xr = real_roots(xpolys.critical, opt.root_tol);
  const auto xs = uniform_samples(opt.sample_lo, opt.sample_hi, opt.samples);

  TwoDSpectrum s;
  s.model = m;
  s.E0 = sep.E0;
  s.x_critical = xpolys.critical;
  s.y_critical = ypolys.critical;
  s.complex_root_count = xr.complex_count;
  s.y_complex_root_count = yr.complex_count;
  for (std::size_t k = 0; k < yr.roots.size(); ++k) {
    const double c1 = yr.roots[k];
    const CoeffVector Q = eigenfunction_coefficients(ys_spec, c1);
    for (std::size_t r = 0; r < xr.roots.size(); ++r) {
      TwoDLevel lv;
      lv.k = static_cast<int>(k);
      lv.r = static_cast<int>(r);
      lv.c1 = c1;
      lv.lambda_x = xr.roots[r];
      lv.E_total = sep.E0 + c1 + lv.lambda_x;
      lv.x = {sep.x.gauge, eigenfunction_coefficients(xs_spec, lv.lambda_x), sep.x.potential,
              lv.lambda_x - sep.x.ground[0]};
      lv.y = {sep.y.gauge, Q, sep.y.potential, c1 - sep.y.ground[0]};
      lv.self_test_x = std::max(recurrence_self_test(xs_spec, lv.lambda_x), recurrence_self_test(ys_spec, c1));
      detail::attach_residuals(lv, xs);
      s.levels.push_back(std::move(lv));
    }
  }
  detail::sort_levels(s.levels);
  return s;
}

/// psi(x, y) = R(x) Q(y) psi0(x, y) for an assembled level.
inline PsiSample eval_psi_2d(const TwoDLevel& lv, double x, double y) {
  const PsiSample px = eval_psi(lv.x, x), py = eval_psi(lv.y, y);
  PsiSample s;
  s.x = x;
  s.R = px.R * py.R;
  s.exponent = px.exponent + py.exponent;
  s.saturated = std::abs(s.exponent) > kExponentClamp;
  s.psi = std::exp(std::clamp(s.exponent, -kExponentClamp, kExponentClamp)) * s.R;
  return s;
}

}  // namespace qes

#endif  // QES_SEPARABLE2D_HPP_
