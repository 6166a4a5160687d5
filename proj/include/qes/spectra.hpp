// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_SPECTRA_HPP_
#define QES_SPECTRA_HPP_

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qes/algebra.hpp"
#include "qes/model.hpp"
#include "qes/recurrence.hpp"
#include "qes/roots.hpp"

namespace qes {

/// The potential parameter the QES construction forces at level block j:
/// A for the 1D families, the state parameter alpha (= j + 1) for the 2D ones.
inline double qes_constraint(const OneDModelI& m, int j) {
  require_representation_index(j);
  validate(m);
  return (2.0 * m.B * m.B * m.B - 27.0 * (j + 1) * std::pow(m.C, 2.5)) / (9.0 * m.B * m.C);
}

inline double qes_constraint(const OneDModelII& m, int j) {
  require_representation_index(j);
  validate(m);
  return -std::numbers::sqrt2 * m.C * (j + 1);
}

inline double qes_constraint(const TwoDModelI& m, int j) {
  require_representation_index(j);
  validate(m);
  return j + 1.0;
}

inline double qes_constraint(const TwoDModelII& m, int j) {
  require_representation_index(j);
  validate(m);
  return j + 1.0;
}

/// Copy of the model carrying the forced parameter for this j.
inline OneDModelI constrained(OneDModelI m, int j) {
  m.A = qes_constraint(m, j);
  return m;
}
inline OneDModelII constrained(OneDModelII m, int j) {
  m.A = qes_constraint(m, j);
  return m;
}
inline TwoDModelI constrained(TwoDModelI m, int j) {
  m.alpha = qes_constraint(m, j);
  return m;
}
inline TwoDModelII constrained(TwoDModelII m, int jx, int jy) {
  m.alpha = qes_constraint(m, jx);
  m.beta = qes_constraint(m, jy);
  return m;
}

/// Physical energy from the spectral parameter.
inline double energy_map(const OneDModelI& m, int j, double e) {
  validate(m);
  const double shift = 3.0 * (j + 1) * m.C / (2.0 * m.B);
  return e - (j + 1) * m.B / (3.0 * std::sqrt(m.C)) - shift * shift;
}

inline double energy_map(const OneDModelII& m, int j, double e) {
  validate(m);
  return m.V0 + e - (j + 1) * m.B / std::numbers::sqrt2;
}

/// Stationary point of V with its character.
struct StationaryPoint {
  double x = 0.0;
  double value = 0.0;
  enum class Kind { Minimum, Maximum, Inflection } kind = Kind::Inflection;
};

inline const char* kind_name(StationaryPoint::Kind k) {
  switch (k) {
    case StationaryPoint::Kind::Minimum: return "minimum";
    case StationaryPoint::Kind::Maximum: return "maximum";
    case StationaryPoint::Kind::Inflection: return "inflection";
  }
  return "inflection";
}

inline std::vector<StationaryPoint> stationary_points(const CoeffVector& V) {
  std::vector<StationaryPoint> out;
  const auto dV = V.derivative();
  if (dV.degree() < 1) return out;
  const auto d2V = dV.derivative();
  const auto rr = real_roots(dV, 1e-9);
  const double scale = std::max(1.0, d2V.max_abs());
  for (double x : rr.roots) {
    StationaryPoint s{x, V(x), StationaryPoint::Kind::Inflection};
    const double curv = d2V(x);
    if (curv > 1e-12 * scale) s.kind = StationaryPoint::Kind::Minimum;
    else if (curv < -1e-12 * scale) s.kind = StationaryPoint::Kind::Maximum;
    out.push_back(s);
  }
  return out;
}

/// 2B^2 = 9AC for the cubic-quartic well.
inline bool is_symmetric(const OneDModelI& m) {
  const double lhs = 2.0 * m.B * m.B, rhs = 9.0 * m.A * m.C;
  return std::abs(lhs - rhs) <= 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

inline bool is_symmetric(const OneDModelII& m) { return m.A == 0.0; }

struct SpectrumOptions {
  double root_tol = 1e-9;
};

struct SpectrumResult {
  PotentialModel model;  // with the forced parameter
  int j = 0;
  EpsPolynomial critical;
  std::vector<double> eps_roots;
  std::vector<int> multiplicities;
  int complex_root_count = 0;
  std::vector<double> energies;
  std::vector<double> self_test;  // recurrence_self_test per root
  double constraint = 0.0;
  std::vector<StationaryPoint> stationary;
  bool symmetric = false;
};

template <typename Model>
  requires std::is_same_v<Model, OneDModelI> || std::is_same_v<Model, OneDModelII>
SpectrumResult full_spectrum(const Model& base, int j, const SpectrumOptions& opt = {}) {
  require_representation_index(j);
  validate(base);
  const Model m = constrained(base, j);
  const RecurrenceSpec spec = recurrence_spec(m, j);
  const auto polys = generate_polynomials(spec);
  const auto rr = real_roots(polys.critical, opt.root_tol);

  SpectrumResult r;
  r.model = m;
  r.j = j;
  r.critical = polys.critical;
  r.eps_roots = rr.roots;
  r.multiplicities = rr.multiplicities;
  r.complex_root_count = rr.complex_count;
  r.constraint = m.A;
  for (double e : rr.roots) {
    r.energies.push_back(energy_map(m, j, e));
    r.self_test.push_back(recurrence_self_test(spec, e));
  }
  r.stationary = stationary_points(potential(m));
  r.symmetric = is_symmetric(m);
  return r;
}

inline SpectrumResult full_spectrum(const PotentialModel& model, int j, const SpectrumOptions& opt = {}) {
  return std::visit(
      [&](const auto& m) -> SpectrumResult {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, OneDModelI> || std::is_same_v<M, OneDModelII>)
          return full_spectrum(m, j, opt);
        else
          throw invalid_argument("full_spectrum expects a one-dimensional model");
      },
      model);
}

}  // namespace qes

#endif  // QES_SPECTRA_HPP_
