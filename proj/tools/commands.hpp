// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QES_TOOLS_COMMANDS_HPP_
#define QES_TOOLS_COMMANDS_HPP_

#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "output.hpp"
#include "qes/qes.hpp"

namespace qes::cli {

/// Everything a run depends on. Identical configs give identical output.
struct RunConfig {
  std::string command;
  std::string model = "oned1";
  double V0 = 0.0, A = 1.0, B = 1.0, C = 1.0;
  double A1 = 1.0, A2 = 1.0, B1 = 0.0, B2 = 0.0;
  int j = 1, jx = 0, jy = 0, kmax = 5;
  double root_tol = 1e-9;
  double residual_tol = 1e-8;
  double identity_tol = 1e-10;
  double oracle_tol = 1e-6;
  double lo = -12.0, hi = 12.0;
  int n = 4000;
  double sample_lo = -3.0, sample_hi = 3.0;
  int samples = 50;  // residual sample count
  int points = 201;  // wavefunction sample count (per axis in 2D)
  int level = 0;
  bool harmonic = false;
  int count = 3;
  unsigned seed = 1;
  int draws = 5;
  bool parallel = false;
  std::vector<std::string> skip;
  std::string format = "json";
  std::string output;
  std::string discrepancy_log;
};

inline PotentialModel make_model(const RunConfig& c) {
  if (c.model == "oned1") return OneDModelI{c.A, c.B, c.C};
  if (c.model == "oned2") return OneDModelII{c.V0, c.A, c.B, c.C};
  if (c.model == "twod1") return TwoDModelI{c.A, c.B, c.C, 1.0};
  if (c.model == "twod2") return TwoDModelII{c.A1, c.A2, c.B1, c.B2, 1.0, 1.0};
  throw invalid_argument("unknown model '" + c.model + "'");
}

inline oracle::GridSpec grid_of(const RunConfig& c) {
  const oracle::GridSpec g{c.lo, c.hi, c.n};
  oracle::validate(g);
  return g;
}

inline json params_json(const PotentialModel& m) {
  return std::visit(
      [](const auto& v) -> json {
        using M = std::decay_t<decltype(v)>;
        json p = json::object();
        if constexpr (std::is_same_v<M, OneDModelI>) {
          p["A"] = num(v.A), p["B"] = num(v.B), p["C"] = num(v.C);
        } else if constexpr (std::is_same_v<M, OneDModelII>) {
          p["V0"] = num(v.V0), p["A"] = num(v.A), p["B"] = num(v.B), p["C"] = num(v.C);
        } else if constexpr (std::is_same_v<M, TwoDModelI>) {
          p["A"] = num(v.A), p["B"] = num(v.B), p["C"] = num(v.C), p["alpha"] = num(v.alpha);
        } else {
          p["A1"] = num(v.A1), p["A2"] = num(v.A2), p["B1"] = num(v.B1), p["B2"] = num(v.B2);
          p["alpha"] = num(v.alpha), p["beta"] = num(v.beta);
        }
        return p;
      },
      m);
}

template <typename Tag>
json coeffs_json(const basic_polynomial<Tag>& p) {
  return num_array(p.coeffs());
}

inline std::string family_str(const PotentialModel& m) { return std::string(family_name(family_of(m))); }

inline void require_1d(const PotentialModel& m, const std::string& cmd) {
  if (!is_one_dimensional(family_of(m)))
    throw invalid_argument(cmd + " needs a 1D model (oned1 or oned2)");
}

inline void require_2d(const PotentialModel& m, const std::string& cmd) {
  if (is_one_dimensional(family_of(m))) throw invalid_argument(cmd + " needs a 2D model (twod1 or twod2)");
}

inline LevelOptions level_options(const RunConfig& c) {
  detail::require(c.samples >= 1, "samples must be positive");
  detail::require(c.sample_lo < c.sample_hi, "sample interval needs sample-lo < sample-hi");
  LevelOptions o;
  o.spectrum.root_tol = c.root_tol;
  o.sample_lo = c.sample_lo;
  o.sample_hi = c.sample_hi;
  o.samples = c.samples;
  return o;
}

// ---------------------------------------------------------------------------

inline Report cmd_spectrum(const RunConfig& c) {
  const PotentialModel base = make_model(c);
  require_1d(base, "spectrum");
  const SpectrumResult spec = full_spectrum(base, c.j, {c.root_tol});
  const auto levels = solve_levels(base, c.j, level_options(c));

  Report r;
  json& d = r.doc = header("spectrum");
  d["family"] = family_str(spec.model);
  d["params"] = params_json(spec.model);
  d["j"] = c.j;
  d["critical"] = coeffs_json(spec.critical);
  d["eps_roots"] = num_array(spec.eps_roots);
  d["multiplicities"] = spec.multiplicities;
  d["energies"] = num_array(spec.energies);
  d["complex_root_count"] = spec.complex_root_count;
  d["normalizability"] = normalizability_name(
      std::visit([&](const auto& m) -> Normalizability {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, OneDModelI> || std::is_same_v<M, OneDModelII>)
          return normalizability_report(gauge_factor(m, c.j)).verdict;
        else
          return Normalizability::Undetermined;
      }, spec.model));
  d["symmetric"] = spec.symmetric;
  json sp = json::array();
  for (const auto& s : spec.stationary) sp.push_back({{"x", num(s.x)}, {"value", num(s.value)}, {"kind", kind_name(s.kind)}});
  d["stationary_points"] = sp;

  r.table.columns = {"index", "eps", "energy", "multiplicity", "self_test", "residual_max", "saturated", "nodes"};
  json lv = json::array();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& s = levels[i];
    lv.push_back({{"index", static_cast<int>(i)},
                  {"eps", num(s.eps)},
                  {"energy", num(s.f.energy)},
                  {"multiplicity", spec.multiplicities[i]},
                  {"self_test", num(s.self_test)},
                  {"residual_max", num(s.max_residual)},
                  {"saturated_samples", s.saturated_samples},
                  {"nodes", s.node_count}});
    r.table.add({cell(static_cast<int>(i)), cell(s.eps), cell(s.f.energy), cell(spec.multiplicities[i]),
                 cell(s.self_test), cell(s.max_residual), cell(s.saturated_samples), cell(s.node_count)});
  }
  d["levels"] = lv;
  return r;
}

/// Constrained model plus its x-axis (or only) recurrence.
inline std::pair<PotentialModel, RecurrenceSpec> constrained_spec(const PotentialModel& base, int j) {
  return std::visit(
      [j](const auto& m) -> std::pair<PotentialModel, RecurrenceSpec> {
        using M = std::decay_t<decltype(m)>;
        validate(m);
        if constexpr (std::is_same_v<M, TwoDModelII>) {
          const auto cm = constrained(m, j, j);
          return {cm, recurrence_spec(cm, j, Axis::X)};
        } else {
          const auto cm = constrained(m, j);
          return {cm, recurrence_spec(cm, j)};
        }
      },
      base);
}

inline Report cmd_polynomials(const RunConfig& c) {
  require_representation_index(c.j);
  const auto [model, rs] = constrained_spec(make_model(c), c.j);
  const SpectralPolynomials sp = generate_polynomials(rs);
  const bool two_d = !is_one_dimensional(family_of(model));

  Report r;
  json& d = r.doc = header("polynomials");
  d["family"] = family_str(model);
  d["params"] = params_json(model);
  d["j"] = c.j;
  d["variable"] = two_d ? "tau" : "eps";
  json ps = json::array();
  for (const auto& p : sp.P) ps.push_back(coeffs_json(p));
  d["polynomials"] = ps;
  d["critical"] = coeffs_json(sp.critical);

  json cf = json::object();
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, TwoDModelII>) {
          cf["available"] = false;
        } else {
          const auto chk = closed_form_check(m, c.j);
          cf["available"] = chk.available;
          if (chk.available) {
            cf["variable"] = std::is_same_v<M, TwoDModelI> ? "s = -tau" : "eps";
            cf["tabulated"] = coeffs_json(*closed_form(m, c.j));
            cf["proportional"] = chk.result.proportional;
            cf["scale"] = num(chk.result.scale);
            cf["defect"] = num(chk.result.defect);
          }
        }
      },
      model);
  d["closed_form"] = cf;

  r.table.columns = {"name", "degree"};
  for (int k = 0; k <= c.j + 1; ++k) r.table.columns.push_back("c" + std::to_string(k));
  auto row = [&](const std::string& name, const EpsPolynomial& p) {
    std::vector<std::string> cells{name, cell(p.degree())};
    for (std::size_t k = 0; k < p.size(); ++k) cells.push_back(cell(p[k]));
    r.table.add(std::move(cells));
  };
  for (std::size_t m = 0; m < sp.P.size(); ++m) row("P" + std::to_string(m), sp.P[m]);
  row("critical", sp.critical);
  return r;
}

inline TwoDOptions twod_options(const RunConfig& c) {
  detail::require(c.samples >= 1, "samples must be positive");
  detail::require(c.sample_lo < c.sample_hi, "sample interval needs sample-lo < sample-hi");
  TwoDOptions o;
  o.sample_lo = c.sample_lo;
  o.sample_hi = c.sample_hi;
  o.samples = c.samples;
  o.root_tol = c.root_tol;
  o.parallel = c.parallel;
  return o;
}

inline TwoDSpectrum solve_2d(const PotentialModel& base, const RunConfig& c) {
  if (const auto* m = std::get_if<TwoDModelI>(&base)) return solve_2d_model1(*m, c.j, c.kmax, twod_options(c));
  return solve_2d_model2(std::get<TwoDModelII>(base), c.jx, c.jy, twod_options(c));
}

inline Report cmd_2d(const RunConfig& c) {
  const PotentialModel base = make_model(c);
  require_2d(base, "2d");
  const TwoDSpectrum s = solve_2d(base, c);
  const bool first = family_of(base) == Family::TwoD_I;

  Report r;
  json& d = r.doc = header("2d");
  d["family"] = family_str(s.model);
  d["params"] = params_json(s.model);
  if (first) {
    d["j"] = c.j;
    d["k_max"] = c.kmax;
  } else {
    d["jx"] = c.jx;
    d["jy"] = c.jy;
  }
  d["E0"] = num(s.E0);
  d["x_critical"] = coeffs_json(s.x_critical);
  if (!first) d["y_critical"] = coeffs_json(s.y_critical);
  d["complex_root_count"] = s.complex_root_count;
  d["complex_pairs"] = s.complex_root_count / 2;
  if (!first) d["y_complex_root_count"] = s.y_complex_root_count;

  r.table.columns = {"k", "r", "c1", "lambda_x", "E", "E_x", "E_y", "residual_x", "residual_y", "self_test"};
  json lv = json::array();
  for (const auto& l : s.levels) {
    lv.push_back({{"k", l.k},
                  {"r", l.r},
                  {"c1", num(l.c1)},
                  {"lambda_x", num(l.lambda_x)},
                  {"E", num(l.E_total)},
                  {"E_x", num(l.x.energy)},
                  {"E_y", num(l.y.energy)},
                  {"residual_x", num(l.residual_x)},
                  {"residual_y", num(l.residual_y)},
                  {"self_test", num(l.self_test_x)}});
    r.table.add({cell(l.k), cell(l.r), cell(l.c1), cell(l.lambda_x), cell(l.E_total), cell(l.x.energy),
                 cell(l.y.energy), cell(l.residual_x), cell(l.residual_y), cell(l.self_test_x)});
  }
  d["levels"] = lv;
  return r;
}

inline Report cmd_wavefunction(const RunConfig& c) {
  detail::require(c.points >= 1, "points must be positive");
  detail::require(c.sample_lo < c.sample_hi, "sample interval needs sample-lo < sample-hi");
  detail::require(c.level >= 0, "level must be non-negative");
  const PotentialModel base = make_model(c);
  const auto xs = uniform_samples(c.sample_lo, c.sample_hi, c.points);

  Report r;
  json& d = r.doc = header("wavefunction");
  json rows = json::array();
  if (is_one_dimensional(family_of(base))) {
    const auto levels = solve_levels(base, c.j, level_options(c));
    if (c.level >= static_cast<int>(levels.size()))
      throw domain_error("level " + std::to_string(c.level) + " requested but only " +
                         std::to_string(levels.size()) + " real levels exist");
    const auto& s = levels[static_cast<std::size_t>(c.level)];
    d["family"] = family_str(s.model);
    d["params"] = params_json(s.model);
    d["j"] = c.j;
    d["level"] = {{"index", c.level}, {"eps", num(s.eps)}, {"energy", num(s.f.energy)}};
    d["gauge"] = {{"g3", num(s.f.gauge.g3)}, {"g2", num(s.f.gauge.g2)}, {"g1", num(s.f.gauge.g1)}};
    d["R"] = coeffs_json(s.f.R);
    r.table.columns = {"x", "R", "exponent", "psi", "saturated"};
    for (double x : xs) {
      const auto p = eval_psi(s.f, x);
      rows.push_back({{"x", num(p.x)}, {"R", num(p.R)}, {"exponent", num(p.exponent)}, {"psi", num(p.psi)},
                      {"saturated", p.saturated}});
      r.table.add({cell(p.x), cell(p.R), cell(p.exponent), cell(p.psi), cell(p.saturated)});
    }
  } else {
    const TwoDSpectrum s = solve_2d(base, c);
    if (c.level >= static_cast<int>(s.levels.size()))
      throw domain_error("level " + std::to_string(c.level) + " requested but only " +
                         std::to_string(s.levels.size()) + " real levels exist");
    const auto& l = s.levels[static_cast<std::size_t>(c.level)];
    d["family"] = family_str(s.model);
    d["params"] = params_json(s.model);
    d["level"] = {{"index", c.level}, {"k", l.k}, {"r", l.r}, {"energy", num(l.E_total)}};
    r.table.columns = {"x", "y", "psi", "saturated"};
    for (double x : xs)
      for (double y : xs) {
        const auto p = eval_psi_2d(l, x, y);
        rows.push_back({{"x", num(x)}, {"y", num(y)}, {"psi", num(p.psi)}, {"saturated", p.saturated}});
        r.table.add({cell(x), cell(y), cell(p.psi), cell(p.saturated)});
      }
  }
  d["samples"] = rows;
  return r;
}

inline Report cmd_oracle(const RunConfig& c) {
  const oracle::GridSpec g = grid_of(c);
  Report r;
  json& d = r.doc = header("oracle");
  d["grid"] = {{"lo", num(g.lo)}, {"hi", num(g.hi)}, {"n", g.n}};
  json rows = json::array();
  if (c.harmonic) {
    detail::require(c.count >= 1 && c.count <= g.n, "count must satisfy 1 <= count <= n");
    d["mode"] = "harmonic";
    d["C"] = num(c.C);
    r.table.columns = {"n", "exact", "raw", "oracle", "c1", "c1_defect"};
    for (const auto& h : oracle::harmonic_check(c.C, c.count, g)) {
      rows.push_back({{"n", h.n},
                      {"exact", num(h.exact)},
                      {"raw", num(h.raw)},
                      {"oracle", num(h.oracle)},
                      {"c1", num(h.c1)},
                      {"c1_defect", num(h.c1_defect)}});
      r.table.add({cell(h.n), cell(h.exact), cell(h.raw), cell(h.oracle), cell(h.c1), cell(h.c1_defect)});
    }
  } else {
    const PotentialModel base = make_model(c);
    require_1d(base, "oracle contrast");
    d["mode"] = "contrast";
    d["family"] = family_str(base);
    d["j"] = c.j;
    const auto report = std::visit(
        [&](const auto& m) -> std::vector<oracle::ContrastRow> {
          using M = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<M, OneDModelI> || std::is_same_v<M, OneDModelII>) {
            d["params"] = params_json(constrained(m, c.j));
            return oracle::qes_contrast_report(m, c.j, g);
          } else {
            return {};
          }
        },
        base);
    r.table.columns = {"eps", "qes_energy", "oracle_index", "oracle_energy", "gap", "tails"};
    for (const auto& row : report) {
      rows.push_back({{"eps", num(row.eps)},
                      {"qes_energy", num(row.qes_energy)},
                      {"oracle_index", row.oracle_index},
                      {"oracle_energy", num(row.oracle_energy)},
                      {"gap", num(row.gap)},
                      {"tails", normalizability_name(row.tails)}});
      r.table.add({cell(row.eps), cell(row.qes_energy), cell(row.oracle_index), cell(row.oracle_energy),
                   cell(row.gap), cell(normalizability_name(row.tails))});
    }
  }
  d["rows"] = rows;
  return r;
}

/// Printed-versus-implemented forms, plus tabulated rows that disagree at the run's parameters.
inline json discrepancy_log(const RunConfig& c) {
  std::vector<Discrepancy> all = known_discrepancies();
  auto append = [&](std::vector<Discrepancy> more) { all.insert(all.end(), more.begin(), more.end()); };
  append(closed_form_discrepancies(OneDModelI{0.0, c.B, c.C}, "oned1"));
  append(closed_form_discrepancies(OneDModelII{c.V0, 0.0, c.B, c.C}, "oned2"));
  append(closed_form_discrepancies(TwoDModelI{c.A, c.B, c.C, 1.0}, "twod1"));
  json d = header("discrepancy-log");
  json arr = json::array();
  for (const auto& x : all)
    arr.push_back({{"id", x.id}, {"topic", x.topic}, {"printed", x.printed}, {"implemented", x.implemented},
                   {"reason", x.reason}});
  d["discrepancies"] = arr;
  return d;
}

}  // namespace qes::cli

#endif  // QES_TOOLS_COMMANDS_HPP_
