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

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace tanglesim::cli {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// %.12g with negative zero printed as 0.
std::string format_value(double v);
/// Residual columns: values in [-1e-9, 0) are roundoff and print as 0.
std::string format_residual(double v);

void write_csv(std::ostream& out, const Table& table);
/// Throws IoError when the file cannot be written.
void write_csv(const std::string& path, const Table& table);

/// Column names the scenario can produce (x column excluded).
std::vector<std::string> available_columns(const RunConfig& cfg);

Table simulate(const RunConfig& cfg);
Table sweep_table(std::size_t resolution, std::size_t z_points = 501);
Table figure2_table();
Table figure4_table();

}  // namespace tanglesim::cli
