// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "qes/qes.hpp"

using namespace qes;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

/// Uniform draws in [lo, hi] from a fixed-seed engine.
class Sampler {
 public:
  explicit Sampler(unsigned seed) : rng_(seed) {}
  double operator()(double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(rng_()) / 4294967296.0); }

 private:
  std::mt19937 rng_;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome algebra_identities() {
  double worst = 0.0;
  for (int j = 0; j <= 8; ++j) worst = std::max(worst, commutator_report(j, 12).max());
  return {worst <= 1e-12, "max commutator defect " + sci(worst)};
}

template <typename Model>
bool printed_rows(const Model& m, const std::string& fam, int& mismatched, double& worst_ok) {
  for (int j = 0; j <= 3; ++j) {
    const auto chk = closed_form_check(m, j, 1e-10);
    if (!chk.available) return false;
    if (chk.result.proportional) {
      worst_ok = std::max(worst_ok, chk.result.defect);
      continue;
    }
    ++mismatched;
    const auto rs = recurrence_spec(m, j);
    for (double e : real_roots(generate_polynomials(rs).critical).roots)
      if (recurrence_self_test(rs, e) > 1e-10) return false;
    const auto log = closed_form_discrepancies(m, fam);
    const std::string id = fam + "-closed-form-j" + std::to_string(j);
    if (std::none_of(log.begin(), log.end(), [&](const Discrepancy& d) { return d.id == id; })) return false;
  }
  return true;
}

Outcome printed_polynomials() {
  Sampler u(2);
  int mismatched = 0;
  double worst = 0.0;
  bool ok = true;
  for (int draw = 0; draw < 5; ++draw) {
    const double B = u(0.5, 3.0), C = u(0.5, 3.0), A = u(0.5, 3.0);
    ok = printed_rows(OneDModelI{0.0, B, C}, "oned1", mismatched, worst) && ok;
    ok = printed_rows(OneDModelII{0.0, 0.0, B, C}, "oned2", mismatched, worst) && ok;
    ok = printed_rows(TwoDModelI{A, B, 1.0, 1.0}, "twod1", mismatched, worst) && ok;
  }
  return {ok, "max defect of agreeing rows " + sci(worst) + "; " + std::to_string(mismatched) +
                  " rows disagree, each self-tested and logged"};
}

/// All levels j <= jmax of both 1D families over `draws` parameter draws.
std::vector<QesSolution> level_set(int jmax, int draws, unsigned seed) {
  Sampler u(seed);
  std::vector<QesSolution> out;
  for (int d = 0; d < draws; ++d) {
    const double B = u(0.5, 3.0), C = u(0.5, 3.0);
    for (int j = 0; j <= jmax; ++j) {
      for (auto& s : solve_levels(OneDModelI{0.0, B, C}, j)) out.push_back(std::move(s));
      for (auto& s : solve_levels(OneDModelII{0.0, 0.0, B, C}, j)) out.push_back(std::move(s));
    }
  }
  return out;
}

Outcome eigen_identity(const std::vector<QesSolution>& levels) {
  double worst = 0.0;
  for (const auto& s : levels) worst = std::max(worst, s.self_test);
  return {worst <= 1e-10 && !levels.empty(),
          std::to_string(levels.size()) + " levels, max self-test residual " + sci(worst)};
}

Outcome schrodinger(const std::vector<QesSolution>& levels) {
  const auto xs = uniform_samples(-3.0, 3.0, 50);
  double worst = 0.0, weakest_shift = std::numeric_limits<double>::infinity();
  for (const auto& s : levels) {
    worst = std::max(worst, schrodinger_residual(s.f, xs).max_residual);
    Eigenfunction1D shifted = s.f;
    shifted.energy += 0.1;
    weakest_shift = std::min(weakest_shift, schrodinger_residual(shifted, xs).max_residual);
  }
  return {worst <= 1e-8 && weakest_shift > 1e-3,
          "max residual " + sci(worst) + "; smallest residual after E += 0.1 is " + sci(weakest_shift)};
}

Outcome gauge_identity() {
  Sampler u(5);
  double worst = 0.0;
  for (int d = 0; d < 5; ++d) {
    const double B = u(0.5, 3.0), C = u(0.5, 3.0);
    for (int j = 0; j <= 3; ++j) {
      for (const auto& s : solve_levels(OneDModelI{0.0, B, C}, j)) worst = std::max(worst, gauge_consistency(s.f));
      for (const auto& s : solve_levels(OneDModelII{0.0, 0.0, B, C}, j))
        worst = std::max(worst, gauge_consistency(s.f));
      // the operator form does not depend on a root being real
      const auto m1 = constrained(OneDModelI{0.0, B, C}, j);
      const auto m2 = constrained(OneDModelII{0.0, 0.0, B, C}, j);
      worst = std::max(worst, operator_gauge_consistency(build_operator(m1, j), gauge_factor(m1, j), potential(m1),
                                                         energy_map(m1, j, 0.0), 0.0));
      worst = std::max(worst, operator_gauge_consistency(build_operator(m2, j), gauge_factor(m2, j), potential(m2),
                                                         energy_map(m2, j, 0.0), 0.0));
    }
  }
  return {worst <= 1e-10, "max coefficient defect " + sci(worst)};
}

Outcome oracle_harmonic() {
  double worst = 0.0, worst_raw = 0.0, worst_c1 = 0.0;
  for (double C : {1.0, 2.0})
    for (const auto& r : oracle::harmonic_check(C, 6, oracle::GridSpec{-12.0, 12.0, 4000})) {
      worst = std::max(worst, std::abs(r.oracle - r.exact));
      worst_raw = std::max(worst_raw, std::abs(r.raw - r.exact));
      worst_c1 = std::max(worst_c1, r.c1_defect);
    }
  return {worst <= 1e-6 && worst_c1 <= 1e-6, "max eigenvalue error " + sci(worst) + " (plain stencil " +
                                                  sci(worst_raw) + "), max c1 defect " + sci(worst_c1)};
}

Outcome assembly_2d() {
  bool ok = true;
  std::string note;
  {
    const auto s = solve_2d_model1(TwoDModelI{1.0, -1.0, 1.0, 1.0}, 1, 0);
    const bool two = s.levels.size() == 2;
    const double defect = two ? std::max(std::abs(s.levels[0].E_total - (s.E0 - 2.0)),
                                         std::abs(s.levels[1].E_total - (s.E0 + 2.0)))
                              : std::numeric_limits<double>::infinity();
    ok = ok && two && defect <= 1e-10;
    note += "twod1 B=-1: " + std::to_string(s.levels.size()) + " levels, defect " + sci(defect);
  }
  {
    const auto s = solve_2d_model1(TwoDModelI{1.0, 1.0, 1.0, 1.0}, 1, 0);
    ok = ok && s.levels.empty() && s.complex_root_count == 2;
    note += "; twod1 B=1: " + std::to_string(s.levels.size()) + " levels, " +
            std::to_string(s.complex_root_count / 2) + " complex pair";
  }
  {
    const auto s = solve_2d_model2(TwoDModelII{1.0, 1.5, 0.5, -0.7, 1.0, 1.0}, 0, 0);
    double worst = 0.0;
    for (const auto& l : s.levels) worst = std::max({worst, l.residual_x, l.residual_y});
    ok = ok && s.levels.size() == 1 && worst <= 1e-8;
    note += "; twod2: " + std::to_string(s.levels.size()) + " level, residual " + sci(worst);
  }
  return {ok, note};
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  status = pclose(p);
  return out;
}

Outcome determinism() {
  const std::string cli = QES_CLI_PATH;
  const std::vector<std::string> runs{cli + " verify --draws 3", cli + " spectrum --model oned1 -B 1.3 -C 0.7 -j 4",
                                      cli + " spectrum --model oned2 -B 2 -C 1 -j 3 --format csv"};
  for (const auto& cmd : runs) {
    int s1 = 0, s2 = 0;
    const std::string a = run_capture(cmd, s1), b = run_capture(cmd, s2);
    if (s1 != 0 || s2 != 0 || a.empty() || a != b) return {false, "differs or failed: " + cmd};
  }
  return {true, std::to_string(runs.size()) + " commands byte-identical across two runs"};
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& fn) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    std::fflush(stdout);
  };

  std::vector<QesSolution> levels;
  report(1, "algebra identities", algebra_identities);
  report(2, "printed polynomials", printed_polynomials);
  report(3, "operator eigen-identity", [&] {
    levels = level_set(6, 20, 3);
    return eigen_identity(levels);
  });
  report(4, "schrodinger residual", [&] { return schrodinger(levels); });
  report(5, "gauge consistency", gauge_identity);
  report(6, "oracle harmonic check", oracle_harmonic);
  report(7, "2D assembly", assembly_2d);
  report(8, "determinism", determinism);
  return failures == 0 ? 0 : 1;
}
