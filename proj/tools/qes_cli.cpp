// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

// qes: spectra, polynomials, wavefunctions and self-checks for the
// quasi-exactly solvable families from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "output.hpp"
#include "verify.hpp"

namespace {

using namespace qes::cli;

void add_options(CLI::App& app, RunConfig& c) {
  app.add_option("--model", c.model, "Potential family")
      ->check(CLI::IsMember({"oned1", "oned2", "twod1", "twod2"}))
      ->capture_default_str();
  app.add_option("--V0", c.V0, "oned2 constant offset")->capture_default_str();
  app.add_option("-A", c.A, "twod1 quartic coefficient (forced in 1D)")->capture_default_str();
  app.add_option("-B", c.B, "B parameter")->capture_default_str();
  app.add_option("-C", c.C, "C parameter")->capture_default_str();
  app.add_option("--A1", c.A1, "twod2 x quartic coefficient")->capture_default_str();
  app.add_option("--A2", c.A2, "twod2 y quartic coefficient")->capture_default_str();
  app.add_option("--B1", c.B1, "twod2 x quadratic coefficient")->capture_default_str();
  app.add_option("--B2", c.B2, "twod2 y quadratic coefficient")->capture_default_str();
  app.add_option("-j", c.j, "Representation index")->capture_default_str();
  app.add_option("--jx", c.jx, "twod2 x representation index")->capture_default_str();
  app.add_option("--jy", c.jy, "twod2 y representation index")->capture_default_str();
  app.add_option("--kmax", c.kmax, "twod1 highest y excitation")->capture_default_str();
  app.add_option("--root-tol", c.root_tol, "Real/complex root classification threshold")->capture_default_str();
  app.add_option("--residual-tol", c.residual_tol, "Schrodinger residual tolerance (verify)")->capture_default_str();
  app.add_option("--identity-tol", c.identity_tol, "Algebraic identity tolerance (verify)")->capture_default_str();
  app.add_option("--oracle-tol", c.oracle_tol, "Oracle eigenvalue tolerance (verify)")->capture_default_str();
  app.add_option("--lo", c.lo, "Oracle grid left end")->capture_default_str();
  app.add_option("--hi", c.hi, "Oracle grid right end")->capture_default_str();
  app.add_option("-n,--n", c.n, "Oracle grid interior points")->capture_default_str();
  app.add_option("--sample-lo", c.sample_lo, "Sampling interval left end")->capture_default_str();
  app.add_option("--sample-hi", c.sample_hi, "Sampling interval right end")->capture_default_str();
  app.add_option("--samples", c.samples, "Residual sample count")->capture_default_str();
  app.add_option("--points", c.points, "Wavefunction samples (per axis in 2D)")->capture_default_str();
  app.add_option("--level", c.level, "Level index for wavefunction")->capture_default_str();
  app.add_flag("--harmonic", c.harmonic, "oracle: harmonic check of -d2/dy2 + C^2 y^2");
  app.add_option("--count", c.count, "oracle: number of harmonic eigenvalues")->capture_default_str();
  app.add_option("--seed", c.seed, "verify: parameter draw seed")->capture_default_str();
  app.add_option("--draws", c.draws, "verify: parameter draws per check")->capture_default_str();
  app.add_flag("--parallel", c.parallel, "Run independent work concurrently");
  app.add_option("--skip", c.skip, "verify: skip a check group (repeatable)")
      ->check(CLI::IsMember(verify_groups()));
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("-o,--output", c.output, "Write output to a file instead of stdout");
  app.add_option("--discrepancy-log", c.discrepancy_log,
                 "Write printed-vs-implemented deviations as JSON to this file");
}

void emit(std::ostream& os, const Report& r, const std::string& format) {
  if (format == "csv") write_csv(os, r.table);
  else if (format == "table") write_aligned(os, r.table);
  else os << r.doc.dump(2) << '\n';
}

Report dispatch(const RunConfig& c) {
  if (c.command == "spectrum") return cmd_spectrum(c);
  if (c.command == "polynomials") return cmd_polynomials(c);
  if (c.command == "wavefunction") return cmd_wavefunction(c);
  if (c.command == "verify") return cmd_verify(c);
  if (c.command == "2d") return cmd_2d(c);
  return cmd_oracle(c);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Quasi-exactly solvable spectra and checks", "qes"};
  app.set_config("--config", "", "Flat key=value file; command-line flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);
  app.fallthrough();
  add_options(app, cfg);
  for (const char* name : {"spectrum", "polynomials", "wavefunction", "verify", "2d", "oracle"}) {
    auto* sub = app.add_subcommand(name);
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  app.get_subcommand("spectrum")->description("Levels, energies and residuals of a 1D family");
  app.get_subcommand("polynomials")->description("Spectral polynomials P0..Pj and the critical polynomial");
  app.get_subcommand("wavefunction")->description("Sample psi = exp(g) R on a grid");
  app.get_subcommand("verify")->description("Run the invariant suite; exit 1 on any failure");
  app.get_subcommand("2d")->description("Assemble separable 2D levels");
  app.get_subcommand("oracle")->description("Finite-difference oracle: harmonic check or QES contrast");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!cfg.discrepancy_log.empty()) {
      std::ofstream log(cfg.discrepancy_log, std::ios::binary);
      if (!log) throw qes::invalid_argument("cannot open discrepancy log '" + cfg.discrepancy_log + "'");
      log << discrepancy_log(cfg).dump(2) << '\n';
    }
    const Report r = dispatch(cfg);
    if (cfg.output.empty()) {
      emit(std::cout, r, cfg.format);
      std::cout.flush();
    } else {
      std::ofstream out(cfg.output, std::ios::binary);
      if (!out) throw qes::invalid_argument("cannot open output '" + cfg.output + "'");
      emit(out, r, cfg.format);
    }
    return r.exit_code;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (char& ch : msg)
      if (ch == '\n') ch = ' ';
    std::cerr << "qes: error: " << msg << '\n';
    return 2;
  }
}
