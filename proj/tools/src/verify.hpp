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
#include <string>
#include <vector>

namespace tanglesim::cli {

struct SuiteResult {
  std::string name;
  bool passed = false;
  /// Worst observed deviation, in the units of `tolerance`.
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  /// Empty selects every suite.
  std::vector<std::string> suites;
  /// Amplitude noise added to analytic states before they are checked.
  double perturb = 0.0;
  std::uint64_t seed = 0;
  int roof_restarts = 0;
};

const std::vector<std::string>& suite_names();

/// Throws Error for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

std::vector<SuiteResult> run_verify(const VerifyOptions& options);

}  // namespace tanglesim::cli
