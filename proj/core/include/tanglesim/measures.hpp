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
#include <map>
#include <string>
#include <vector>

#include "tanglesim/roof.hpp"
#include "tanglesim/state.hpp"

namespace tanglesim {

/// Spin-flip spectrum of a two-qubit state. `lambdas` are the eigenvalues of
/// rho (sy x sy) rho^* (sy x sy), descending and clamped at zero.
struct WoottersSpectrum {
  std::array<double, 4> lambdas{};
  double concurrence = 0.0;
};

/// Wootters concurrence of a 4x4 two-qubit density matrix.
WoottersSpectrum concurrence_two_qubit(const DensityMatrix& rho);

/// Wootters concurrence of rho = w w^dagger for a 4 x k factor `w`. The square
/// roots of the spin-flip eigenvalues are the singular values of
/// w^T (sy x sy) w, which avoids taking square roots of roundoff.
WoottersSpectrum wootters_from_factor(const CMatrix& w);

/// Concurrence between qubits `a` and `b` of a pure multipartite state, using
/// the amplitude matrix as the factor of the reduced state.
double pair_concurrence(const StateVector& psi, const std::string& a, const std::string& b);

/// 2 sqrt(det rho_A) for the qubit (or qubit-dimensional group) `side_a`.
double concurrence_pure_bipartition(const StateVector& psi,
                                    const std::vector<std::string>& side_a);

/// Squared focus-vs-rest concurrence split into pair contributions and a
/// residual (tau_ABC for three parties, E_ABCD for four).
struct TangleReport {
  std::string focus;
  double c_focus_rest = 0.0;
  /// Keyed by focus label followed by partner label, e.g. "AB".
  std::map<std::string, double> pair_concurrences;
  double residual = 0.0;
};

/// tau = C^2_{f(o1 o2)} - C^2_{f o1} - C^2_{f o2}. The state must consist of
/// exactly {focus, others}. A partner with dimension > 2 is handled by the
/// rank-2 convex roof of the reduced pair state.
TangleReport residual_tangle(const StateVector& psi, const std::string& focus,
                             const std::array<std::string, 2>& others,
                             const RoofOptions& roof = {});

/// E = C^2_{f(o1 o2 o3)} - sum of squared pair concurrences; all four parts qubits.
TangleReport residual_excess(const StateVector& psi, const std::string& focus,
                             const std::array<std::string, 3>& others);

}  // namespace tanglesim
