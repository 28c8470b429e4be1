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

#include "config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace tanglesim::cli {
namespace {

const std::vector<std::string> kKnownKeys = {"scenario", "alpha",   "beta",          "beta_exact",
                                             "grid",     "bath",    "out",           "columns",
                                             "squares",  "roof",    "roof_restarts", "seed"};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, sep)) parts.push_back(piece);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::string* find(const Settings& s, const std::string& key) {
  const auto it = s.find(key);
  return it == s.end() ? nullptr : &it->second;
}

}  // namespace

double parse_real(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
    throw Error(field + ": expected a finite number, got '" + text + "'");
  return v;
}

long parse_integer(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE)
    throw Error(field + ": expected an integer, got '" + text + "'");
  return v;
}

bool parse_bool(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
  if (t == "0" || t == "false" || t == "no" || t == "off") return false;
  throw Error(field + ": expected a boolean, got '" + text + "'");
}

Settings read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  Settings out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    for (auto& c : key)
      if (c == '-') c = '_';
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
      throw Error(key + ": unknown config key (line " + std::to_string(lineno) + ")");
    out[key] = trim(t.substr(eq + 1));
  }
  return out;
}

BathSpec parse_bath(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.empty()) throw Error("bath: empty specification");
  const std::string& kind = parts[0];
  BathSpec bath;
  if (kind == "single") {
    if (parts.size() > 2) throw Error("bath: expected single[:g]");
    bath = SingleMode{parts.size() == 2 ? parse_real("bath", parts[1]) : 1.0};
  } else if (kind == "markov") {
    if (parts.size() > 2) throw Error("bath: expected markov[:gamma]");
    bath = Markovian{parts.size() == 2 ? parse_real("bath", parts[1]) : 1.0};
  } else if (kind == "comb") {
    if (parts.size() != 4 && parts.size() != 5)
      throw Error("bath: expected comb:N:g:spacing[:detuning]");
    const long n = parse_integer("bath", parts[1]);
    if (n < 1) throw Error("bath: comb needs at least one mode");
    Comb c;
    c.modes = static_cast<std::size_t>(n);
    c.g = parse_real("bath", parts[2]);
    c.spacing = parse_real("bath", parts[3]);
    c.center_detuning = parts.size() == 5 ? parse_real("bath", parts[4]) : 0.0;
    bath = c;
  } else {
    throw Error("bath: unknown kind '" + kind + "'");
  }
  validate(bath);
  return bath;
}

std::pair<std::vector<double>, GridKind> parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) throw Error("grid: expected kind:lo:hi:count");
  GridKind kind;
  if (parts[0] == "gt" || parts[0] == "t" || parts[0] == "time")
    kind = GridKind::Time;
  else if (parts[0] == "z")
    kind = GridKind::Z;
  else
    throw Error("grid: unknown kind '" + parts[0] + "'");
  const double lo = parse_real("grid", parts[1]);
  const double hi = parse_real("grid", parts[2]);
  const long count = parse_integer("grid", parts[3]);
  if (count < 2) throw Error("grid: count must be >= 2");
  if (!(hi > lo)) throw Error("grid: hi must exceed lo");
  return {uniform_grid(lo, hi, static_cast<std::size_t>(count)), kind};
}

std::pair<double, double> default_amplitudes(Scenario s) {
  if (is_double_jc(s)) return {0.429, std::sqrt(1.0 - 0.429 * 0.429)};
  return {1.0 / std::sqrt(10.0), 3.0 / std::sqrt(10.0)};
}

RunConfig build_run_config(const Settings& settings) {
  for (const auto& [key, value] : settings)
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
      throw Error(key + ": unknown setting");

  RunConfig cfg;
  ScenarioSpec& spec = cfg.spec;
  if (const auto* v = find(settings, "scenario")) {
    const auto s = parse_scenario(trim(*v));
    if (!s) throw Error("scenario: unknown scenario '" + *v + "' (use 1-4)");
    spec.scenario = *s;
  }
  if (const auto* v = find(settings, "bath")) spec.bath = parse_bath(trim(*v));

  const auto* a = find(settings, "alpha");
  const auto* b = find(settings, "beta");
  const auto* bx = find(settings, "beta_exact");
  if (b && bx) throw Error("beta_exact: cannot be combined with beta");
  auto [alpha, beta] = default_amplitudes(spec.scenario);
  if (bx) {
    // The rounded pair is rescaled jointly so that |alpha/beta| is kept.
    const double av = a ? parse_real("alpha", *a) : alpha;
    const double bv = parse_real("beta_exact", *bx);
    const double norm = std::hypot(av, bv);
    if (norm == 0.0) throw Error("beta_exact: alpha and beta cannot both vanish");
    alpha = av / norm;
    beta = bv / norm;
  } else if (a && b) {
    alpha = parse_real("alpha", *a);
    beta = parse_real("beta", *b);
  } else if (a) {
    alpha = parse_real("alpha", *a);
    if (std::abs(alpha) > 1.0) throw Error("alpha: |alpha| must not exceed 1");
    beta = std::sqrt(1.0 - alpha * alpha);
  } else if (b) {
    beta = parse_real("beta", *b);
    if (std::abs(beta) > 1.0) throw Error("beta: |beta| must not exceed 1");
    alpha = std::sqrt(1.0 - beta * beta);
  }
  spec.alpha = alpha;
  spec.beta = beta;

  if (const auto* v = find(settings, "grid")) {
    auto [grid, kind] = parse_grid(trim(*v));
    spec.time_grid = std::move(grid);
    spec.grid_kind = kind;
  } else if (!is_double_jc(spec.scenario)) {
    spec.time_grid = uniform_grid(0.0, 2.0 * std::numbers::pi, 501);
    spec.grid_kind = GridKind::Time;
  } else if (std::holds_alternative<Comb>(spec.bath)) {
    const double rate = std::get<Comb>(spec.bath).golden_rule_rate();
    spec.time_grid = uniform_grid(0.0, 3.0 / rate, 301);
    spec.grid_kind = GridKind::Time;
  } else {
    spec.time_grid = uniform_grid(0.0, 1.0, 501);
    spec.grid_kind = GridKind::Z;
  }

  if (const auto* v = find(settings, "out")) cfg.out = *v;
  if (const auto* v = find(settings, "columns")) {
    for (const auto& c : split(*v, ','))
      if (!trim(c).empty()) cfg.columns.push_back(trim(c));
  }
  if (const auto* v = find(settings, "squares")) cfg.squares = parse_bool("squares", *v);
  if (const auto* v = find(settings, "roof")) cfg.roof = parse_bool("roof", *v);
  if (const auto* v = find(settings, "roof_restarts")) {
    const long r = parse_integer("roof_restarts", *v);
    if (r < 0) throw Error("roof_restarts: must be >= 0");
    cfg.roof_restarts = static_cast<int>(r);
  }
  if (const auto* v = find(settings, "seed")) {
    const long s = parse_integer("seed", *v);
    if (s < 0) throw Error("seed: must be >= 0");
    cfg.seed = static_cast<std::uint64_t>(s);
  }
  spec.validate();
  return cfg;
}

}  // namespace tanglesim::cli
