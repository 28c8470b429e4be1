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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tanglesim/tanglesim.hpp"

namespace tanglesim::cli {

/// Unreadable input or unwritable output; maps to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Settings = std::map<std::string, std::string>;

/// Flat key=value file. Blank lines and lines starting with '#' are skipped.
Settings read_config_file(const std::string& path);

/// Parsed scenario plus output options. Later settings override earlier ones.
struct RunConfig {
  ScenarioSpec spec;
  std::optional<std::string> out;
  std::vector<std::string> columns;
  bool squares = false;
  bool roof = false;
  int roof_restarts = 0;
  std::uint64_t seed = 0;
};

/// Recognised keys: scenario, alpha, beta, beta_exact, grid, bath, out,
/// columns, squares, roof, roof_restarts, seed.
RunConfig build_run_config(const Settings& settings);

/// `single[:g]`, `markov[:gamma]` or `comb:N:g:spacing[:detuning]`.
BathSpec parse_bath(const std::string& text);
/// `kind:lo:hi:count` with kind one of gt, t, time, z.
std::pair<std::vector<double>, GridKind> parse_grid(const std::string& text);

double parse_real(const std::string& field, const std::string& text);
long parse_integer(const std::string& field, const std::string& text);
bool parse_bool(const std::string& field, const std::string& text);

/// Default (alpha, beta) of a scenario: (1/sqrt10, 3/sqrt10) for the
/// single-cavity cases, (0.429, sqrt(1 - 0.429^2)) for the two-bath cases.
std::pair<double, double> default_amplitudes(Scenario s);

}  // namespace tanglesim::cli
