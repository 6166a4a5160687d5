// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_DISCREPANCY_HPP_
#define QES_DISCREPANCY_HPP_

#include <string>
#include <vector>

#include "qes/closed_forms.hpp"

namespace qes {

/// A place where a tabulated/printed form of the construction disagrees with
/// the form this library derives and uses.
struct Discrepancy {
  std::string id;
  std::string topic;
  std::string printed;
  std::string implemented;
  std::string reason;
};

/// Static list of form-level disagreements, independent of parameters.
inline std::vector<Discrepancy> known_discrepancies() {
  return {
      {"basis", "invariant polynomial subspace", "<x^0, x^2, ..., x^j>", "<x^0, x^1, ..., x^j>",
       "the j+1 dimensional subspace needs every power up to j"},
      {"coefficients", "eigenfunction coefficients", "R(x) = sum a_m P_m(e) x^m",
       "R = right null vector of (T - e) from the downward recurrence",
       "the recurrence is the transposed eigen-equation; P is a left eigenvector and no diagonal a_m maps it to R"},
      {"oned2-gauge", "model II gauge factor", "exp(-B x^2/(2 sqrt2) - C x^3/(3 sqrt2))",
       "exp(+B x^2/(2 sqrt2) + C x^3/(3 sqrt2))",
       "only this sign reproduces T = -J-^2 - sqrt2 B J0 - sqrt2 C J+ with A = -sqrt2 C (j+1), E = e - (j+1)B/sqrt2"},
      {"oned2-reduced", "model II reduced equation", "(V0 - E - A x + sqrt2 C x - B/sqrt2) R",
       "(V0 - E - A x - sqrt2 C x - B/sqrt2) R", "sign of the sqrt2 C x term follows from the gauge factor"},
      {"ground-identity", "ground-state potential identity", "V0 - E0 = W'' + F'' - W'^2 - F'^2",
       "V0 - E0 = W'^2 - W'' + F'^2 - F''", "direct substitution of exp(-W - F)"},
      {"twod1-potential", "2D model I potential", "A^2 x^4 + A B x^2 + C^2 y^2 + 2 A alpha x",
       "A^2 x^4 + 2 A B x^2 + C^2 y^2 - 2 A alpha x",
       "exp(-A x^3/3 - C y^2/2 - B x) with E0 = C - B^2 solves this form at alpha = 1"},
      {"twod1-separated", "2D model I separated equations", "-Q'' + 2 B y Q' - c1 Q = 0; drift 2(C + A x^2)",
       "-Q'' + 2 C y Q' - c1 Q = 0; drift 2(B + A x^2)", "drifts are derivatives of the ground-state exponent"},
      {"twod1-energy", "2D model I energy", "T R = (E0 - E - c1) R", "T R = (E - E0 - c1) R, E = E0 + c1 + lambda",
       "the x equation from the ground-state exponent carries -E; y excitation must raise E"},
      {"twod1-hypergeometric", "2D model I y solution",
       "N1 1F1(1/2 - c1/(4B), 3/2, B y^2) + N2 1F1(-c1/(4B), 1/2, B y^2)",
       "N1 y 1F1(1/2 - c1/(4C), 3/2, C y^2) + N2 1F1(-c1/(4C), 1/2, C y^2)",
       "the odd solution carries a factor y; the oscillator stiffness is C"},
      {"twod2-energy", "2D model II ground energy", "E0 = B1^2 + B2^2", "E0 = -(B1^2 + B2^2)",
       "direct substitution of the ground-state exponent into the potential at alpha = beta = 1"},
      {"twod2-separated", "2D model II separated equations", "last terms without R (resp. Q)",
       "last terms multiply R (resp. Q)", "the equations are linear in the unknown"},
  };
}

/// Tabulated critical polynomials (j <= 3) that are not proportional to the recurrence output.
template <typename Model>
std::vector<Discrepancy> closed_form_discrepancies(const Model& m, const std::string& family, double tol = 1e-10) {
  std::vector<Discrepancy> out;
  for (int j = 0; j <= 3; ++j) {
    const auto c = closed_form_check(m, j, tol);
    if (!c.available || c.result.proportional) continue;
    out.push_back({family + "-closed-form-j" + std::to_string(j), family + " critical polynomial, j = " +
                                                                   std::to_string(j),
                   "tabulated row", "recurrence output",
                   "relative coefficient defect " + std::to_string(c.result.defect) +
                       " after best scaling; the recurrence is normative"});
  }
  return out;
}

}  // namespace qes

#endif  // QES_DISCREPANCY_HPP_
