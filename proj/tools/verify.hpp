// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_TOOLS_VERIFY_HPP_
#define QES_TOOLS_VERIFY_HPP_

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <vector>

#include "commands.hpp"

namespace qes::cli {

struct Check {
  std::string group;
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  std::string status;  // ok | FAIL | discrepancy
};

inline const std::vector<std::string>& verify_groups() {
  static const std::vector<std::string> g{"algebra", "closed-forms", "recurrence", "residual", "gauge", "2d", "oracle"};
  return g;
}

/// Parameter draws in [0.5, 3]; the uniform map is written out so draws do not
/// depend on the standard library's distribution implementation.
struct Draws {
  std::vector<double> B, C;

  Draws(unsigned seed, int count) {
    std::mt19937 rng(seed);
    auto u = [&rng] { return 0.5 + 2.5 * (static_cast<double>(rng()) / 4294967296.0); };
    for (int i = 0; i < count; ++i) {
      B.push_back(u());
      C.push_back(u());
    }
  }
};

namespace detail_verify {

inline Check le(std::string group, std::string name, double value, double tol) {
  return {std::move(group), std::move(name), value, tol, value <= tol ? "ok" : "FAIL"};
}

inline std::vector<Check> algebra(const RunConfig&) {
  std::vector<Check> out;
  double worst = 0.0;
  for (int j = 0; j <= 8; ++j) worst = std::max(worst, commutator_report(j, 12).max());
  out.push_back(le("algebra", "commutators j<=8 deg<=12", worst, 1e-12));
  return out;
}

template <typename Model>
void closed_form_rows(const std::vector<Model>& models, const std::string& fam, double tol, std::vector<Check>& out) {
  for (int j = 0; j <= 3; ++j) {
    double defect = 0.0, self = 0.0;
    bool logged = true;
    for (const auto& m : models) {
      const auto chk = closed_form_check(m, j);
      defect = std::max(defect, chk.result.defect);
      if (chk.result.proportional) continue;
      const auto rs = recurrence_spec(m, j);
      for (double e : real_roots(generate_polynomials(rs).critical).roots)
        self = std::max(self, recurrence_self_test(rs, e));
      const auto log = closed_form_discrepancies(m, fam);
      logged = logged && std::any_of(log.begin(), log.end(), [&](const Discrepancy& d) {
                 return d.id == fam + "-closed-form-j" + std::to_string(j);
               });
    }
    Check c{"closed-forms", fam + " j=" + std::to_string(j), defect, tol, "ok"};
    if (defect > tol) c.status = (self <= 1e-10 && logged) ? "discrepancy" : "FAIL";
    out.push_back(c);
  }
}

inline std::vector<Check> closed_forms(const RunConfig& c) {
  const Draws d(c.seed, c.draws);
  std::vector<OneDModelI> m1;
  std::vector<OneDModelII> m2;
  std::vector<TwoDModelI> m3;
  for (std::size_t i = 0; i < d.B.size(); ++i) {
    m1.push_back({0.0, d.B[i], d.C[i]});
    m2.push_back({0.0, 0.0, d.B[i], d.C[i]});
    m3.push_back({d.C[i], d.B[i], 1.0, 1.0});
  }
  std::vector<Check> out;
  closed_form_rows(m1, "oned1", c.identity_tol, out);
  closed_form_rows(m2, "oned2", c.identity_tol, out);
  closed_form_rows(m3, "twod1", c.identity_tol, out);
  return out;
}

/// Applies f to every level of both 1D families for j = 0..jmax, reducing per (family, j).
inline std::vector<Check> per_level(const RunConfig& c, const std::string& group, const std::string& label, int jmax,
                                    double tol, const std::function<double(const QesSolution&)>& f) {
  const Draws d(c.seed, c.draws);
  std::vector<Check> out;
  for (const char* fam : {"oned1", "oned2"})
    for (int j = 0; j <= jmax; ++j) {
      double worst = 0.0;
      for (std::size_t i = 0; i < d.B.size(); ++i) {
        const PotentialModel m = std::string(fam) == "oned1" ? PotentialModel(OneDModelI{0.0, d.B[i], d.C[i]})
                                                             : PotentialModel(OneDModelII{0.0, 0.0, d.B[i], d.C[i]});
        for (const auto& s : solve_levels(m, j, level_options(c))) worst = std::max(worst, f(s));
      }
      out.push_back(le(group, std::string(fam) + " j=" + std::to_string(j) + " " + label, worst, tol));
    }
  return out;
}

inline std::vector<Check> recurrence(const RunConfig& c) {
  return per_level(c, "recurrence", "self-test", 6, c.identity_tol, [](const QesSolution& s) { return s.self_test; });
}

inline std::vector<Check> residual(const RunConfig& c) {
  auto out = per_level(c, "residual", "schrodinger", 6, c.residual_tol,
                       [](const QesSolution& s) { return s.max_residual; });
  // A shifted energy must be caught: report the smallest residual after the shift.
  const auto xs = uniform_samples(c.sample_lo, c.sample_hi, c.samples);
  const Draws d(c.seed, c.draws);
  double weakest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.B.size(); ++i)
    for (int j = 0; j <= 6; ++j)
      for (const PotentialModel& m :
           {PotentialModel(OneDModelI{0.0, d.B[i], d.C[i]}), PotentialModel(OneDModelII{0.0, 0.0, d.B[i], d.C[i]})})
        for (auto s : solve_levels(m, j, level_options(c))) {
          s.f.energy += 0.1;
          weakest = std::min(weakest, schrodinger_residual(s.f, xs).max_residual);
        }
  out.push_back({"residual", "energy shift 0.1 detected", weakest, 1e-3, weakest > 1e-3 ? "ok" : "FAIL"});
  return out;
}

inline std::vector<Check> gauge(const RunConfig& c) {
  return per_level(c, "gauge", "consistency", 3, c.identity_tol, [](const QesSolution& s) { return gauge_consistency(s.f); });
}

inline std::vector<Check> two_d(const RunConfig& c) {
  std::vector<Check> out;
  {
    const auto s = solve_2d_model1(TwoDModelI{1.0, -1.0, 1.0, 1.0}, 1, 0);
    double defect = s.levels.size() == 2 ? 0.0 : std::numeric_limits<double>::infinity();
    if (s.levels.size() == 2)
      defect = std::max(std::abs(s.levels[0].E_total - (s.E0 - 2.0)), std::abs(s.levels[1].E_total - (s.E0 + 2.0)));
    out.push_back(le("2d", "twod1 A=1 B=-1 j=1: E = E0 -+ 2", defect, c.identity_tol));
  }
  {
    const auto s = solve_2d_model1(TwoDModelI{1.0, 1.0, 1.0, 1.0}, 1, 0);
    const bool ok = s.levels.empty() && s.complex_root_count == 2;
    out.push_back({"2d", "twod1 A=1 B=1 j=1: one complex pair", static_cast<double>(s.complex_root_count), 2.0,
                   ok ? "ok" : "FAIL"});
  }
  {
    const auto s = solve_2d_model2(TwoDModelII{1.0, 1.0, 0.5, -0.5, 1.0, 1.0}, 0, 0);
    double worst = s.levels.size() == 1 ? 0.0 : std::numeric_limits<double>::infinity();
    for (const auto& l : s.levels) worst = std::max({worst, l.residual_x, l.residual_y});
    out.push_back(le("2d", "twod2 jx=jy=0: single level residuals", worst, c.residual_tol));
  }
  return out;
}

inline std::vector<Check> oracle_checks(const RunConfig& c) {
  const oracle::GridSpec g = grid_of(c);
  std::vector<Check> out;
  for (double C : {1.0, 2.0}) {
    double e = 0.0, q = 0.0;
    for (const auto& h : oracle::harmonic_check(C, 6, g)) {
      e = std::max(e, std::abs(h.oracle - h.exact));
      q = std::max(q, h.c1_defect);
    }
    out.push_back(le("oracle", "harmonic C=" + fmt15(C) + " n<=5", e, c.oracle_tol));
    out.push_back(le("oracle", "separation ladder C=" + fmt15(C), q, c.oracle_tol));
  }
  return out;
}

}  // namespace detail_verify

inline std::vector<Check> run_checks(const RunConfig& c) {
  using Fn = std::vector<Check> (*)(const RunConfig&);
  const std::vector<std::pair<std::string, Fn>> suite{
      {"algebra", detail_verify::algebra},       {"closed-forms", detail_verify::closed_forms},
      {"recurrence", detail_verify::recurrence}, {"residual", detail_verify::residual},
      {"gauge", detail_verify::gauge},           {"2d", detail_verify::two_d},
      {"oracle", detail_verify::oracle_checks}};
  for (const auto& s : c.skip)
    if (std::find(verify_groups().begin(), verify_groups().end(), s) == verify_groups().end())
      throw invalid_argument("unknown check group '" + s + "'");
  auto skipped = [&](const std::string& g) { return std::find(c.skip.begin(), c.skip.end(), g) != c.skip.end(); };

  std::vector<std::vector<Check>> parts(suite.size());
  if (c.parallel) {
    std::vector<std::future<std::vector<Check>>> jobs(suite.size());
    for (std::size_t i = 0; i < suite.size(); ++i)
      if (!skipped(suite[i].first)) jobs[i] = std::async(std::launch::async, suite[i].second, std::cref(c));
    for (std::size_t i = 0; i < suite.size(); ++i)
      if (jobs[i].valid()) parts[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < suite.size(); ++i)
      if (!skipped(suite[i].first)) parts[i] = suite[i].second(c);
  }
  std::vector<Check> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

inline Report cmd_verify(const RunConfig& c) {
  detail::require(c.draws >= 1, "draws must be positive");
  const auto checks = run_checks(c);
  Report r;
  json& d = r.doc = header("verify");
  d["seed"] = c.seed;
  d["draws"] = c.draws;
  json arr = json::array();
  bool passed = true;
  r.table.columns = {"group", "check", "value", "tolerance", "status"};
  for (const auto& k : checks) {
    passed = passed && k.status != "FAIL";
    arr.push_back({{"group", k.group}, {"check", k.name}, {"value", num(k.value)}, {"tolerance", num(k.tolerance)},
                   {"status", k.status}});
    r.table.add({k.group, k.name, cell(k.value), cell(k.tolerance), k.status});
  }
  d["passed"] = passed;
  d["checks"] = arr;
  r.exit_code = passed ? 0 : 1;
  return r;
}

}  // namespace qes::cli

#endif  // QES_TOOLS_VERIFY_HPP_
