// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_WAVEFUNCTION_HPP_
#define QES_WAVEFUNCTION_HPP_

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "qes/algebra.hpp"
#include "qes/model.hpp"
#include "qes/polynomial.hpp"
#include "qes/recurrence.hpp"
#include "qes/roots.hpp"
#include "qes/spectra.hpp"

namespace qes {

/// psi(x) = exp(g3 x^3 + g2 x^2 + g1 x) R(x).
struct GaugeFactor {
  double g3 = 0.0;
  double g2 = 0.0;
  double g1 = 0.0;

  [[nodiscard]] CoeffVector exponent() const { return CoeffVector({0.0, g1, g2, g3}); }
};

inline GaugeFactor gauge_factor(const OneDModelI& m, int j) {
  validate(m);
  const double sc = std::sqrt(m.C);
  return {-sc / 6.0, m.B / (6.0 * sc), 3.0 * (j + 1) * m.C / (2.0 * m.B)};
}

// Sign fixed by consistency with the T of the model-II family and its energy map.
inline GaugeFactor gauge_factor(const OneDModelII& m, int /*j*/) {
  validate(m);
  constexpr double r2 = std::numbers::sqrt2;
  return {m.C / (3.0 * r2), m.B / (2.0 * r2), 0.0};
}

/// Ground-state exponent -(A x^3 / 3 + B x) of a quartic axis.
inline GaugeFactor quartic_axis_gauge(double A, double B) { return {-A / 3.0, 0.0, -B}; }

/// Ground-state exponent -c y^2 / 2 of a harmonic axis.
inline GaugeFactor oscillator_axis_gauge(double c) { return {0.0, -c / 2.0, 0.0}; }

/// One-dimensional eigenfunction in gauge form together with its Hamiltonian.
struct Eigenfunction1D {
  GaugeFactor gauge;
  CoeffVector R;
  CoeffVector V;
  double energy = 0.0;
};

enum class Normalizability { BothTailsDecay, OneTailDiverges, BothTailsDiverge, Undetermined };

inline const char* normalizability_name(Normalizability n) {
  switch (n) {
    case Normalizability::BothTailsDecay: return "both-tails-decay";
    case Normalizability::OneTailDiverges: return "one-tail-diverges";
    case Normalizability::BothTailsDiverge: return "both-tails-diverge";
    case Normalizability::Undetermined: return "undetermined";
  }
  return "undetermined";
}

struct NormalizabilityReport {
  Normalizability verdict = Normalizability::Undetermined;
  int tail_plus = 0;   // sign of the dominant exponent term as x -> +inf
  int tail_minus = 0;  // sign of the dominant exponent term as x -> -inf
};

inline NormalizabilityReport normalizability_report(const GaugeFactor& g) {
  auto sgn = [](double v) { return (v > 0.0) - (v < 0.0); };
  NormalizabilityReport r;
  if (g.g3 != 0.0) {
    r.tail_plus = sgn(g.g3);
    r.tail_minus = -sgn(g.g3);
  } else if (g.g2 != 0.0) {
    r.tail_plus = r.tail_minus = sgn(g.g2);
  } else if (g.g1 != 0.0) {
    r.tail_plus = sgn(g.g1);
    r.tail_minus = -sgn(g.g1);
  }
  if (r.tail_plus < 0 && r.tail_minus < 0) r.verdict = Normalizability::BothTailsDecay;
  else if (r.tail_plus > 0 && r.tail_minus > 0) r.verdict = Normalizability::BothTailsDiverge;
  else if (r.tail_plus != 0) r.verdict = Normalizability::OneTailDiverges;
  return r;
}

inline constexpr double kExponentClamp = 700.0;

struct PsiSample {
  double x = 0.0;
  double R = 0.0;
  double exponent = 0.0;
  double psi = 0.0;
  bool saturated = false;  // |exponent| > 700; psi uses the clamped exponent
};

inline PsiSample eval_psi(const GaugeFactor& g, const CoeffVector& R, double x) {
  PsiSample s;
  s.x = x;
  s.R = R(x);
  s.exponent = g.exponent()(x);
  s.saturated = std::abs(s.exponent) > kExponentClamp;
  s.psi = std::exp(std::clamp(s.exponent, -kExponentClamp, kExponentClamp)) * s.R;
  return s;
}

inline PsiSample eval_psi(const Eigenfunction1D& f, double x) { return eval_psi(f.gauge, f.R, x); }

struct ResidualReport {
  double max_residual = 0.0;
  int evaluated = 0;
  int saturated = 0;
};

/// max |-psi'' + (V - E) psi| / (1 + |psi|), with psi'' from the exact product rule
/// psi'' = e^g (R'' + 2 g' R' + (g'' + g'^2) R).
inline ResidualReport schrodinger_residual(const Eigenfunction1D& f, std::span<const double> xs) {
  const CoeffVector g = f.gauge.exponent();
  const CoeffVector dg = g.derivative(), d2g = dg.derivative();
  const CoeffVector dR = f.R.derivative(), d2R = dR.derivative();
  ResidualReport rep;
  for (double x : xs) {
    const double ex = g(x);
    if (std::abs(ex) > kExponentClamp) {
      ++rep.saturated;
      continue;
    }
    const double w = std::exp(ex);
    const double r = f.R(x), dgx = dg(x);
    const double bracket = -d2R(x) - 2.0 * dgx * dR(x) + (f.V(x) - f.energy - d2g(x) - dgx * dgx) * r;
    rep.max_residual = std::max(rep.max_residual, std::abs(w * bracket) / (1.0 + std::abs(w * r)));
    ++rep.evaluated;
  }
  return rep;
}

inline std::vector<double> uniform_samples(double lo, double hi, int n) {
  detail::require(n >= 2 && lo < hi, "need n >= 2 samples on a nonempty interval");
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return xs;
}

/// Sign changes of R on [lo, hi]: scan at 1e-3 (hi - lo), refine each by bisection to 1e-12.
inline std::vector<double> node_locations(const CoeffVector& R, double lo, double hi) {
  detail::require(lo < hi, "node interval must satisfy lo < hi");
  std::vector<double> nodes;
  if (R.is_zero()) return nodes;
  constexpr int steps = 1000;
  const double h = (hi - lo) / steps;
  double prev_x = lo, prev_v = R(lo);
  for (int i = 1; i <= steps; ++i) {
    const double x = (i == steps) ? hi : lo + h * i;
    const double v = R(x);
    if (v == 0.0) continue;  // judge the sign change against the next nonzero sample
    if (prev_v != 0.0 && (v > 0.0) != (prev_v > 0.0)) {
      double a = prev_x, b = x, fa = prev_v;
      while (b - a > 1e-12) {
        const double mid = 0.5 * (a + b), fm = R(mid);
        if (fm == 0.0) a = b = mid;
        else if ((fm > 0.0) == (fa > 0.0)) a = mid, fa = fm;
        else b = mid;
      }
      nodes.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_v = v;
  }
  return nodes;
}

inline int count_nodes(const CoeffVector& R, double lo, double hi) {
  return static_cast<int>(node_locations(R, lo, hi).size());
}

/// Nodes on the whole real line: real zeros of R of odd multiplicity.
inline int count_real_nodes(const CoeffVector& R) {
  if (R.degree() < 1) return 0;
  const auto rr = real_roots(R, 1e-9);
  int n = 0;
  for (int m : rr.multiplicities) n += m % 2;
  return n;
}

/**
 * Defect of the identity V R = (g'' + g'^2 + E) R + R'' + 2 g' R', i.e. V = psi''/psi + E
 * with the exponential cleared. Relative to the largest coefficient of V R.
 */
inline double gauge_consistency(const Eigenfunction1D& f) {
  const CoeffVector dg = f.gauge.exponent().derivative();
  const CoeffVector d2g = dg.derivative();
  const CoeffVector dR = f.R.derivative();
  const CoeffVector recon = (d2g + dg * dg + CoeffVector::constant(f.energy)) * f.R + dR.derivative() + 2.0 * (dg * dR);
  const CoeffVector target = f.V * f.R;
  return (recon - target).max_abs() / std::max(1.0, target.max_abs());
}

/**
 * Operator-level version: e^{-g} (H - E) e^{g} must equal T - e on every
 * polynomial, which fixes the drift and the multiplicative part.
 *   drift:       -2 g'                 == cM + c0 x + cP x^2      (cMM = -1)
 *   multiplier:  V - E - g'' - g'^2    == cId - c0 j/2 - cP j x - e
 */
inline double operator_gauge_consistency(const AlgebraicOperator& t, const GaugeFactor& gauge, const CoeffVector& V,
                                         double energy, double e) {
  const CoeffVector dg = gauge.exponent().derivative();
  const double j = t.j;
  const CoeffVector drift_op({t.cM, t.c0, t.cP});
  const CoeffVector mult_op({t.cId - 0.5 * t.c0 * j - e, -t.cP * j});
  const CoeffVector mult = V - CoeffVector::constant(energy) - dg.derivative() - dg * dg;
  const double d1 = (-2.0 * dg - drift_op).max_abs() / std::max(1.0, drift_op.max_abs());
  const double d2 = (mult - mult_op).max_abs() / std::max(1.0, V.max_abs());
  const double lead = std::abs(t.cMM + 1.0);
  return std::max({d1, d2, lead});
}

/// One QES level of a 1D family.
struct QesSolution {
  PotentialModel model;  // carries the forced A
  int j = 0;
  double eps = 0.0;
  Eigenfunction1D f;
  int node_count = 0;
  double self_test = 0.0;
  double max_residual = 0.0;
  int saturated_samples = 0;
  NormalizabilityReport normalizable;
};

struct LevelOptions {
  SpectrumOptions spectrum;
  double sample_lo = -3.0;
  double sample_hi = 3.0;
  int samples = 50;
};

template <typename Model>
  requires std::is_same_v<Model, OneDModelI> || std::is_same_v<Model, OneDModelII>
std::vector<QesSolution> solve_levels(const Model& base, int j, const LevelOptions& opt = {}) {
  const SpectrumResult spec = full_spectrum(base, j, opt.spectrum);
  const Model m = std::get<Model>(spec.model);
  const RecurrenceSpec rs = recurrence_spec(m, j);
  const auto xs = uniform_samples(opt.sample_lo, opt.sample_hi, opt.samples);
  std::vector<QesSolution> out;
  for (std::size_t i = 0; i < spec.eps_roots.size(); ++i) {
    QesSolution s;
    s.model = m;
    s.j = j;
    s.eps = spec.eps_roots[i];
    s.f = {gauge_factor(m, j), eigenfunction_coefficients(rs, s.eps), potential(m), spec.energies[i]};
    s.node_count = count_real_nodes(s.f.R);
    s.self_test = spec.self_test[i];
    const auto res = schrodinger_residual(s.f, xs);
    s.max_residual = res.max_residual;
    s.saturated_samples = res.saturated;
    s.normalizable = normalizability_report(s.f.gauge);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<QesSolution> solve_levels(const PotentialModel& model, int j, const LevelOptions& opt = {}) {
  return std::visit(
      [&](const auto& m) -> std::vector<QesSolution> {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, OneDModelI> || std::is_same_v<M, OneDModelII>)
          return solve_levels(m, j, opt);
        else
          throw invalid_argument("solve_levels expects a one-dimensional model");
      },
      model);
}

}  // namespace qes

#endif  // QES_WAVEFUNCTION_HPP_
