// Copyright 2026 The tanglesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "app.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "verify.hpp"

namespace tanglesim::cli {
namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kIoError = 2;
constexpr int kVerifyFailed = 3;

struct SimulateFlags {
  std::string config, scenario, alpha, beta, beta_exact, grid, bath, out, columns, roof_restarts,
      seed;
  bool squares = false;
  bool roof = false;
};

// Config file first, then every flag that was given on the command line.
Settings merge(const SimulateFlags& f, CLI::App& sub) {
  Settings s;
  if (!f.config.empty()) s = read_config_file(f.config);
  const std::pair<const char*, const std::string*> pairs[] = {
      {"scenario", &f.scenario}, {"alpha", &f.alpha},   {"beta", &f.beta},
      {"beta_exact", &f.beta_exact}, {"grid", &f.grid}, {"bath", &f.bath},
      {"out", &f.out},           {"columns", &f.columns}, {"roof_restarts", &f.roof_restarts},
      {"seed", &f.seed}};
  for (const auto& [key, value] : pairs) {
    std::string flag = std::string("--") + key;
    for (auto& c : flag)
      if (c == '_') c = '-';
    if (sub.get_option(flag)->count() > 0) s[key] = *value;
  }
  if (f.squares) s["squares"] = "1";
  if (f.roof) s["roof"] = "1";
  return s;
}

void emit(const std::string& path, const Table& table, std::ostream& out) {
  if (path.empty() || path == "-")
    write_csv(out, table);
  else
    write_csv(path, table);
}

void print_suite(std::ostream& out, const SuiteResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %-10s worst=%.3e tol=%.1e", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.worst, r.tolerance);
  out << buf;
  if (!r.detail.empty()) out << "  (" << r.detail << ")";
  out << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement dynamics of atoms coupled to cavities and reservoirs", "tanglesim"};
  app.require_subcommand(1);

  SimulateFlags sim;
  auto* simulate = app.add_subcommand("simulate", "Evolve a scenario and write concurrences as CSV");
  simulate->add_option("--config", sim.config, "key=value settings file");
  simulate->add_option("--scenario", sim.scenario, "1-4 or jc-vacuum, jc-one-photon, double-jc-psi, double-jc-phi");
  simulate->add_option("--alpha", sim.alpha, "Amplitude alpha");
  simulate->add_option("--beta", sim.beta, "Amplitude beta");
  simulate->add_option("--beta-exact", sim.beta_exact,
                       "Unnormalised beta; (alpha, beta) is rescaled keeping their ratio");
  simulate->add_option("--grid", sim.grid, "kind:lo:hi:count with kind gt, t or z");
  simulate->add_option("--bath", sim.bath, "single[:g], markov[:gamma] or comb:N:g:spacing[:detuning]");
  simulate->add_option("--out", sim.out, "Output CSV path (stdout if omitted)");
  simulate->add_option("--columns", sim.columns, "Comma-separated column subset");
  simulate->add_flag("--squares", sim.squares, "Append squared concurrences");
  simulate->add_flag("--roof", sim.roof, "Use the convex-roof optimiser for qutrit pairs");
  simulate->add_option("--roof-restarts", sim.roof_restarts, "Random restarts of the roof optimiser");
  simulate->add_option("--seed", sim.seed, "Seed for randomised steps");

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", ver.suites, "Suite to run (repeatable)");
  verify->add_option("--perturb", ver.perturb, "Amplitude noise injected into analytic states")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", ver.seed, "Random seed");
  verify->add_option("--roof-restarts", ver.roof_restarts, "Random restarts of the roof optimiser")
      ->check(CLI::NonNegativeNumber);

  std::size_t resolution = 101;
  std::size_t z_points = 501;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate sudden-death windows over alpha");
  sweep_cmd->add_option("--resolution", resolution, "Number of alpha values in [0, 1]");
  sweep_cmd->add_option("--z-points", z_points, "z samples used for max E_ABCD");
  sweep_cmd->add_option("--out", sweep_out, "Output CSV path (stdout if omitted)");

  std::string out_dir = ".";
  auto* figures = app.add_subcommand("figures", "Write fig2.csv and fig4.csv");
  figures->add_option("--out-dir", out_dir, "Directory for the CSV files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (*simulate) {
      const RunConfig cfg = build_run_config(merge(sim, *simulate));
      emit(cfg.out.value_or(""), tanglesim::cli::simulate(cfg), out);
    } else if (*verify) {
      bool ok = true;
      for (const auto& r : run_verify(ver)) {
        print_suite(out, r);
        ok = ok && r.passed;
      }
      out << (ok ? "verify: all suites passed" : "verify: FAILED") << '\n';
      return ok ? kOk : kVerifyFailed;
    } else if (*sweep_cmd) {
      if (resolution < 2) throw Error("resolution: must be >= 2");
      emit(sweep_out, sweep_table(resolution, z_points), out);
    } else if (*figures) {
      const std::filesystem::path dir(out_dir);
      std::error_code ec;
      if (!std::filesystem::is_directory(dir, ec))
        throw IoError("output directory '" + out_dir + "' does not exist");
      write_csv((dir / "fig2.csv").string(), figure2_table());
      write_csv((dir / "fig4.csv").string(), figure4_table());
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kOk;
}

}  // namespace tanglesim::cli
