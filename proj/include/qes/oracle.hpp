// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_ORACLE_HPP_
#define QES_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "qes/error.hpp"
#include "qes/model.hpp"
#include "qes/separable2d.hpp"
#include "qes/wavefunction.hpp"

namespace qes::oracle {

/// Uniform grid of n interior points on (lo, hi) with Dirichlet ends.
struct GridSpec {
  double lo = -12.0;
  double hi = 12.0;
  int n = 4000;

  [[nodiscard]] double step() const { return (hi - lo) / (n + 1); }
  [[nodiscard]] double point(int i) const { return lo + (i + 1) * step(); }
  /// Same interval with half the spacing.
  [[nodiscard]] GridSpec refined() const { return {lo, hi, 2 * n + 1}; }
};

inline void validate(const GridSpec& g) {
  detail::require(g.lo < g.hi, "grid needs lo < hi");
  detail::require(g.n >= 16, "grid needs at least 16 interior points");
}

/// Symmetric tridiagonal matrix.
struct TridiagonalSystem {
  std::vector<double> diagonal;
  std::vector<double> off;  // size n - 1

  [[nodiscard]] int size() const { return static_cast<int>(diagonal.size()); }

  [[nodiscard]] double norm_inf() const {
    double m = 0.0;
    const int n = size();
    for (int i = 0; i < n; ++i) {
      double r = std::abs(diagonal[static_cast<std::size_t>(i)]);
      if (i > 0) r += std::abs(off[static_cast<std::size_t>(i - 1)]);
      if (i + 1 < n) r += std::abs(off[static_cast<std::size_t>(i)]);
      m = std::max(m, r);
    }
    return m;
  }

  /// Gershgorin enclosure of the spectrum.
  [[nodiscard]] std::pair<double, double> gershgorin() const {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    const int n = size();
    for (int i = 0; i < n; ++i) {
      double r = 0.0;
      if (i > 0) r += std::abs(off[static_cast<std::size_t>(i - 1)]);
      if (i + 1 < n) r += std::abs(off[static_cast<std::size_t>(i)]);
      lo = std::min(lo, diagonal[static_cast<std::size_t>(i)] - r);
      hi = std::max(hi, diagonal[static_cast<std::size_t>(i)] + r);
    }
    return {lo, hi};
  }
};

using PotentialFn = std::function<double(double)>;

/// -d^2/dx^2 + V by central differences: diagonal 2/h^2 + V(x_i), off-diagonal -1/h^2.
inline TridiagonalSystem discretize(const PotentialFn& V, const GridSpec& g) {
  detail::require(g.lo < g.hi && g.n >= 1, "grid needs lo < hi and n >= 1");
  const double h = g.step(), inv_h2 = 1.0 / (h * h);
  TridiagonalSystem s;
  s.diagonal.resize(static_cast<std::size_t>(g.n));
  s.off.assign(static_cast<std::size_t>(g.n - 1), -inv_h2);
  for (int i = 0; i < g.n; ++i) {
    const double x = g.point(i), v = V(x);
    if (!std::isfinite(v)) throw invalid_argument("potential is not finite at x = " + std::to_string(x));
    s.diagonal[static_cast<std::size_t>(i)] = 2.0 * inv_h2 + v;
  }
  return s;
}

inline TridiagonalSystem discretize(const CoeffVector& V, const GridSpec& g) {
  return discretize([&V](double x) { return V(x); }, g);
}

/// Number of eigenvalues strictly below lambda (Sturm sequence / LDL^T inertia).
inline int sturm_count(const TridiagonalSystem& s, double lambda) {
  double emax = 0.0;
  for (double e : s.off) emax = std::max(emax, e * e);
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, emax);
  int count = 0;
  double q = 1.0;
  for (int i = 0; i < s.size(); ++i) {
    const double e2 = i > 0 ? s.off[static_cast<std::size_t>(i - 1)] * s.off[static_cast<std::size_t>(i - 1)] : 0.0;
    q = s.diagonal[static_cast<std::size_t>(i)] - lambda - (i > 0 ? e2 / q : 0.0);
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

/// Eigenvalue number k (0-based, ascending) by bisection down to machine resolution.
inline double eigenvalue_by_index(const TridiagonalSystem& s, int k) {
  detail::require(k >= 0 && k < s.size(), "eigenvalue index out of range");
  auto [lo, hi] = s.gershgorin();
  const double pad = 1e-12 * std::max(1.0, s.norm_inf());
  lo -= pad;
  hi += pad;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(s, mid) >= k + 1) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

inline std::vector<double> lowest_eigenvalues(const TridiagonalSystem& s, int count) {
  detail::require(count >= 1 && count <= s.size(), "count must satisfy 1 <= count <= n");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out.push_back(eigenvalue_by_index(s, k));
  return out;
}

/// One Richardson step over spacings h and h/2 for the O(h^2) stencil error.
inline std::vector<double> extrapolated_eigenvalues(const PotentialFn& V, const GridSpec& g, int count) {
  const auto coarse = lowest_eigenvalues(discretize(V, g), count);
  const auto fine = lowest_eigenvalues(discretize(V, g.refined()), count);
  std::vector<double> out(coarse.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  return out;
}

struct HarmonicRow {
  int n = 0;
  double exact = 0.0;       // (2n + 1) C
  double raw = 0.0;         // plain stencil
  double oracle = 0.0;      // extrapolated
  double c1 = 0.0;          // quantize_separation_constant(C, n)
  double c1_defect = 0.0;   // |c1 - (oracle - C)|
};

/// Oracle spectrum of -d^2/dy^2 + C^2 y^2 against (2n+1)C and the separation-constant ladder.
inline std::vector<HarmonicRow> harmonic_check(double C, int count, const GridSpec& g = {}) {
  validate(g);
  detail::require_domain(C > 0.0, "C must be positive");
  const auto V = [C](double y) { return C * C * y * y; };
  const auto raw = lowest_eigenvalues(discretize(V, g), count);
  const auto ext = extrapolated_eigenvalues(V, g, count);
  std::vector<HarmonicRow> rows;
  for (int n = 0; n < count; ++n) {
    HarmonicRow r;
    r.n = n;
    r.exact = (2.0 * n + 1.0) * C;
    r.raw = raw[static_cast<std::size_t>(n)];
    r.oracle = ext[static_cast<std::size_t>(n)];
    r.c1 = quantize_separation_constant(C, n);
    r.c1_defect = std::abs(r.c1 - (r.oracle - C));
    rows.push_back(r);
  }
  return rows;
}

struct ContrastRow {
  double eps = 0.0;
  double qes_energy = 0.0;
  int oracle_index = 0;
  double oracle_energy = 0.0;
  double gap = 0.0;  // qes_energy - oracle_energy
  Normalizability tails = Normalizability::Undetermined;
};

/// Pairs each QES level with the nearest grid eigenvalue. Informational only:
/// a gauge factor with a diverging tail need not describe a real-line eigenstate.
template <typename Model>
  requires std::is_same_v<Model, OneDModelI> || std::is_same_v<Model, OneDModelII>
std::vector<ContrastRow> qes_contrast_report(const Model& base, int j, const GridSpec& g = {}) {
  validate(g);
  const SpectrumResult spec = full_spectrum(base, j);
  const Model m = std::get<Model>(spec.model);
  const CoeffVector V = potential(m);
  const auto fn = [&V](double x) { return V(x); };
  const TridiagonalSystem coarse = discretize(fn, g), fine = discretize(fn, g.refined());
  auto extrapolated = [&](int k) { return (4.0 * eigenvalue_by_index(fine, k) - eigenvalue_by_index(coarse, k)) / 3.0; };
  const Normalizability tails = normalizability_report(gauge_factor(m, j)).verdict;

  std::vector<ContrastRow> rows;
  for (std::size_t i = 0; i < spec.eps_roots.size(); ++i) {
    ContrastRow r;
    r.eps = spec.eps_roots[i];
    r.qes_energy = spec.energies[i];
    r.tails = tails;
    const int below = sturm_count(coarse, r.qes_energy);
    double best = std::numeric_limits<double>::infinity();
    for (int k : {below - 1, below, below + 1}) {
      if (k < 0 || k >= coarse.size()) continue;
      const double ev = extrapolated(k);
      if (std::abs(ev - r.qes_energy) < std::abs(best - r.qes_energy)) {
        best = ev;
        r.oracle_index = k;
      }
    }
    r.oracle_energy = best;
    r.gap = r.qes_energy - best;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace qes::oracle

#endif  // QES_ORACLE_HPP_
