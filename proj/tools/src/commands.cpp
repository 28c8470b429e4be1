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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

namespace tanglesim::cli {
namespace {

const char* kResidual = "tau_or_E";

std::vector<std::string> concurrence_columns(Scenario s, bool roof) {
  switch (s) {
    case Scenario::JCVacuum: return {"C_AB", "C_AC", "C_BC", "C_focus_rest"};
    case Scenario::JCOnePhoton:
      if (roof) return {"C_AB", "C_AC", "C_BC", "C_focus_rest"};
      return {"C_AB", "C_AC", "C_focus_rest"};
    default: return {"C_AB", "C_AC", "C_AD", "C_BC", "C_BD", "C_CD", "C_focus_rest"};
  }
}

std::string x_name(const ScenarioSpec& spec) {
  if (spec.grid_kind == GridKind::Z) return "z";
  const auto* single = std::get_if<SingleMode>(&spec.bath);
  return single && single->g == 1.0 ? "gt" : "t";
}

// Every available quantity at one grid point, keyed by column name.
std::map<std::string, double> evaluate(const RunConfig& cfg, const StateVector& psi) {
  const ScenarioSpec& spec = cfg.spec;
  std::map<std::string, double> v;
  RoofOptions roof;
  roof.restarts = cfg.roof_restarts;
  roof.seed = cfg.seed;
  v["C_focus_rest"] = concurrence_pure_bipartition(psi, {"A"});
  if (is_double_jc(spec.scenario)) {
    const char* pairs[] = {"AB", "AC", "AD", "BC", "BD", "CD"};
    for (const char* p : pairs)
      v[std::string("C_") + p] =
          pair_concurrence(psi, std::string(1, p[0]), std::string(1, p[1]));
    v[kResidual] = v["C_focus_rest"] * v["C_focus_rest"] -
                   (v["C_AB"] * v["C_AB"] + v["C_AC"] * v["C_AC"] + v["C_AD"] * v["C_AD"]);
    return v;
  }
  v["C_AB"] = pair_concurrence(psi, "A", "B");
  if (spec.scenario == Scenario::JCVacuum) {
    v["C_AC"] = pair_concurrence(psi, "A", "C");
    v["C_BC"] = pair_concurrence(psi, "B", "C");
  } else if (cfg.roof) {
    v["C_AC"] = roof_concurrence_rank2(reduced_density(psi, {"A", "C"}), {"A"}, roof).value;
    v["C_BC"] = roof_concurrence_rank2(reduced_density(psi, {"B", "C"}), {"B"}, roof).value;
  }
  v[kResidual] = v["C_focus_rest"] * v["C_focus_rest"] - v["C_AB"] * v["C_AB"];
  if (v.count("C_AC")) v[kResidual] -= v["C_AC"] * v["C_AC"];
  return v;
}

}  // namespace

std::string format_value(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_residual(double v) {
  return format_value(v < 0.0 && v >= -1e-9 ? 0.0 : v);
}

void write_csv(std::ostream& out, const Table& table) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
}

void write_csv(const std::string& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_csv(out, table);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<std::string> available_columns(const RunConfig& cfg) {
  auto cols = concurrence_columns(cfg.spec.scenario, cfg.roof);
  cols.emplace_back(kResidual);
  return cols;
}

Table simulate(const RunConfig& cfg) {
  const ScenarioSpec& spec = cfg.spec;
  spec.validate();
  const auto available = available_columns(cfg);
  std::vector<std::string> chosen;
  if (cfg.columns.empty()) {
    chosen = available;
  } else {
    for (const auto& c : cfg.columns)
      if (std::find(available.begin(), available.end(), c) == available.end())
        throw Error("columns: '" + c + "' is not available for scenario " +
                    to_string(spec.scenario));
    for (const auto& c : available)
      if (std::find(cfg.columns.begin(), cfg.columns.end(), c) != cfg.columns.end())
        chosen.push_back(c);
  }
  std::vector<std::string> squared;
  if (cfg.squares)
    for (const auto& c : chosen)
      if (c != kResidual) squared.push_back(c);

  Table table;
  table.header.push_back(x_name(spec));
  table.header.insert(table.header.end(), chosen.begin(), chosen.end());
  for (const auto& c : squared) table.header.push_back(c + "^2");

  std::optional<AmplitudeModel> model;
  if (is_double_jc(spec.scenario) && spec.grid_kind == GridKind::Time) model.emplace(spec.bath);
  const auto branch =
      spec.scenario == Scenario::DoubleJCPsi ? DoubleJcBranch::Psi : DoubleJcBranch::Phi;

  const auto& xs = spec.time_grid;
  table.rows.resize(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const double x = xs[i];
    StateVector psi =
        !is_double_jc(spec.scenario) ? evolve_scenario(spec, x)
        : model ? evolve_double_jc(model->at(x), spec.alpha, spec.beta, branch)
                : evolve_double_jc(amplitude_pair_from_z(x, spec.bath), spec.alpha, spec.beta,
                                   branch);
    auto values = evaluate(cfg, psi);
    if (spec.scenario == Scenario::JCOnePhoton && !cfg.roof) {
      // Without the roof, the cavity-qutrit pair falls back to the closed form.
      values["C_AC"] = closed_form_jc(spec.scenario, x * std::get<SingleMode>(spec.bath).g,
                                      spec.alpha, spec.beta)
                           .pairs.at("AC");
      const double fr = values["C_focus_rest"], ab = values["C_AB"], ac = values["C_AC"];
      values[kResidual] = fr * fr - ab * ab - ac * ac;
    }
    std::vector<std::string> row{format_value(x)};
    for (const auto& c : chosen)
      row.push_back(c == kResidual ? format_residual(values.at(c)) : format_value(values.at(c)));
    for (const auto& c : squared) row.push_back(format_value(values.at(c) * values.at(c)));
    table.rows[i] = std::move(row);
  });
  return table;
}

Table sweep_table(std::size_t resolution, std::size_t z_points) {
  const SweepReport report = sweep(resolution, z_points);
  Table table;
  table.header = {"alpha",     "beta",     "beta_gt_2alpha", "ab_degenerate", "ab_z_lo",
                  "ab_z_hi",   "ad_z_lo",  "ad_z_hi",        "both_z_lo",     "both_z_hi",
                  "max_E_ABCD", "max_E_z"};
  auto cells = [](const std::optional<EsdWindow>& w, std::vector<std::string>& row) {
    row.push_back(w ? format_value(w->lo) : "");
    row.push_back(w ? format_value(w->hi) : "");
  };
  for (const auto& r : report.rows) {
    std::vector<std::string> row{format_value(r.alpha), format_value(r.beta),
                                 r.beta_exceeds_twice_alpha ? "1" : "0",
                                 r.ab && r.ab->degenerate ? "1" : "0"};
    cells(r.ab, row);
    cells(r.ad, row);
    cells(r.both, row);
    row.push_back(format_residual(r.max_excess));
    row.push_back(format_value(r.max_excess_z));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table figure2_table() {
  const double alpha = 1.0 / std::sqrt(10.0);
  const double beta = 3.0 / std::sqrt(10.0);
  Table table;
  table.header = {"gt",      "C_AB",    "C_AC", "C_A(BC)", "C_AB^2",
                  "C_AC^2", "C_A(BC)^2", "tau"};
  for (double gt : uniform_grid(0.0, 2.0 * std::numbers::pi, 501)) {
    const auto cf = closed_form_jc(Scenario::JCOnePhoton, gt, alpha, beta);
    const double ab = cf.pairs.at("AB"), ac = cf.pairs.at("AC"), fr = cf.focus_rest;
    table.rows.push_back({format_value(gt), format_value(ab), format_value(ac), format_value(fr),
                          format_value(ab * ab), format_value(ac * ac), format_value(fr * fr),
                          format_residual(cf.residual)});
  }
  return table;
}

Table figure4_table() {
  const auto [alpha, beta] = default_amplitudes(Scenario::DoubleJCPhi);
  Table table;
  table.header = {"z",          "C_A(BCD)", "C_AC",
                  "C_AD",       "C_AB",     "C_A(BCD)^2",
                  "C_AB^2+C_AC^2+C_AD^2", "E_ABCD"};
  for (double z : uniform_grid(0.0, 1.0, 501)) {
    const auto cf = closed_form_double_jc(Scenario::DoubleJCPhi,
                                          amplitude_pair_from_z(z, SingleMode{}), alpha, beta);
    const double ab = cf.pairs.at("AB"), ac = cf.pairs.at("AC"), ad = cf.pairs.at("AD");
    const double fr = cf.focus_rest;
    table.rows.push_back({format_value(z), format_value(fr), format_value(ac), format_value(ad),
                          format_value(ab), format_value(fr * fr),
                          format_value(ab * ab + ac * ac + ad * ad),
                          format_residual(cf.residual)});
  }
  return table;
}

}  // namespace tanglesim::cli
