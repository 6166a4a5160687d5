// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_ROOTS_HPP_
#define QES_ROOTS_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qes/error.hpp"
#include "qes/polynomial.hpp"

namespace qes {

struct RealRoots {
  std::vector<double> roots;        // ascending, deduplicated
  std::vector<int> multiplicities;  // aligned with roots
  int complex_count = 0;            // non-real roots, counted individually

  [[nodiscard]] int real_count() const {
    int n = 0;
    for (int m : multiplicities) n += m;
    return n;
  }
};

namespace detail {

/// Parlett-Reinsch diagonal balancing, in place. Eigenvalues are unchanged.
inline void balance(Eigen::MatrixXd& a) {
  constexpr double radix = 2.0;
  const Eigen::Index n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k == i) continue;
        c += std::abs(a(k, i));
        r += std::abs(a(i, k));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix, f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

}  // namespace detail

/// Companion-matrix eigenvalues (balanced) followed by one Newton step per real root.
template <typename Tag>
RealRoots real_roots(const basic_polynomial<Tag>& p, double tol = 1e-9) {
  const int deg = p.degree();
  if (deg < 1) throw invalid_argument("root finding needs a polynomial of degree >= 1");

  std::vector<std::complex<double>> eig;
  if (deg == 1) {
    eig.emplace_back(-p[0] / p[1], 0.0);
  } else {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    const double lead = p.leading();
    for (int i = 0; i < deg; ++i) comp(0, i) = -p[static_cast<std::size_t>(deg - 1 - i)] / lead;
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    detail::balance(comp);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    if (es.info() != Eigen::Success) throw invalid_argument("companion eigenvalue iteration failed");
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) eig.push_back(es.eigenvalues()[i]);
  }

  const auto dp = p.derivative();
  std::vector<double> real;
  RealRoots out;
  for (const auto& z : eig) {
    if (std::abs(z.imag()) > tol * (1.0 + std::abs(z.real()))) {
      ++out.complex_count;
      continue;
    }
    double r = z.real();
    const double d = dp(r);
    if (d != 0.0) {
      const double polished = r - p(r) / d;
      if (std::isfinite(polished) && std::abs(p(polished)) <= std::abs(p(r))) r = polished;
    }
    real.push_back(r);
  }
  std::sort(real.begin(), real.end());
  for (double r : real) {
    if (!out.roots.empty() && std::abs(r - out.roots.back()) <= tol * (1.0 + std::abs(r))) {
      ++out.multiplicities.back();
    } else {
      out.roots.push_back(r);
      out.multiplicities.push_back(1);
    }
  }
  return out;
}

}  // namespace qes

#endif  // QES_ROOTS_HPP_
