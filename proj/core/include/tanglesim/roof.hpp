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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tanglesim/state.hpp"

namespace tanglesim {

struct RoofOptions {
  /// Grid points per angle; the coarse scan covers grid_points^3 unitaries.
  int grid_points = 32;
  /// Coordinate descent stops once the step falls below this.
  double final_step = 1e-6;
  /// Extra coordinate descents from seeded random starting angles.
  int restarts = 0;
  std::uint64_t seed = 0;
};

struct WeightedState {
  double weight;
  StateVector state;
};

struct RoofResult {
  double value = 0.0;
  std::vector<WeightedState> decomposition;
  /// Average pure-state concurrence of the spectral decomposition.
  double eigen_average = 0.0;
};

/// sqrt(2 (1 - tr rho_side^2)) for a pure state.
double pure_state_concurrence(const StateVector& psi, const std::vector<std::string>& side);

/// Convex-roof concurrence of a rank <= 2 state, minimised over two-element
/// pure decompositions {U_i1 sqrt(p_1) e_1 + U_i2 sqrt(p_2) e_2} with U in
/// SU(2). Throws Error if the third eigenvalue is >= 1e-8.
RoofResult roof_concurrence_rank2(const DensityMatrix& rho, const std::vector<std::string>& side,
                                  const RoofOptions& options = {});

}  // namespace tanglesim
