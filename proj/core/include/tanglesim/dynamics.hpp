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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tanglesim/bath.hpp"
#include "tanglesim/cmatrix.hpp"
#include "tanglesim/layout.hpp"
#include "tanglesim/state.hpp"

namespace tanglesim {

// Atomic levels: up = 0, down = 1. Cavity and collective-mode levels are
// photon numbers.
inline constexpr std::size_t kUp = 0;
inline constexpr std::size_t kDown = 1;

enum class Scenario {
  JCVacuum,     // two atoms, A coupled to an empty cavity C
  JCOnePhoton,  // same, cavity starts with one photon
  DoubleJCPsi,  // A-C and B-D baths, atoms in beta|ud> + alpha|du>
  DoubleJCPhi,  // A-C and B-D baths, atoms in beta|uu> + alpha|dd>
};

enum class GridKind { Time, Z };

std::string to_string(Scenario s);
std::optional<Scenario> parse_scenario(const std::string& text);
bool is_double_jc(Scenario s);

struct ScenarioSpec {
  Scenario scenario = Scenario::JCVacuum;
  Complex alpha{1.0 / 3.1622776601683795, 0.0};
  Complex beta{3.0 / 3.1622776601683795, 0.0};
  BathSpec bath = SingleMode{};
  std::vector<double> time_grid;
  GridKind grid_kind = GridKind::Time;

  /// Throws Error naming the offending field.
  void validate() const;
  double c0() const { return 2.0 * std::abs(alpha * beta); }
};

/// Uniform grid of `count` points over [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

/// beta cos(gt)|ud>|0> + alpha|du>|0> - i beta sin(gt)|dd>|1>, layout A:2 B:2 C:2.
StateVector evolve_jc_vacuum(double t, Complex alpha, Complex beta, double g = 1.0);

/// Layout A:2 B:2 C:3; the one-photon cavity branch of the Jaynes-Cummings model.
StateVector evolve_jc_one_photon(double t, Complex alpha, Complex beta, double g = 1.0);

enum class DoubleJcBranch { Psi, Phi };

/// Four effective qubits A, B, C, D (C and D are the collective bath modes).
StateVector evolve_double_jc(const AmplitudePair& amp, Complex alpha, Complex beta,
                             DoubleJcBranch branch);
/// `x` is a time or z = |chi| according to `kind`.
StateVector evolve_double_jc(double x, GridKind kind, Complex alpha, Complex beta,
                             const BathSpec& bath, DoubleJcBranch branch);

/// Evolved state of a scenario at grid coordinate x.
StateVector evolve_scenario(const ScenarioSpec& spec, double x);

/// Closed-form concurrences of a scenario. `pairs` is keyed like "AB".
struct ClosedForms {
  std::map<std::string, double> pairs;
  double focus_rest = 0.0;
  /// focus_rest^2 minus the squared pairs that the closed forms provide
  /// (tau_ABC or E_ABCD).
  double residual = 0.0;
  /// Only for DoubleJCPhi: C_AC^2 + C0^2 |xi|^2.
  std::optional<double> focus_rest_sq_split;
};

/// Scenarios 1-2 take x = gt; scenarios 3-4 take the amplitude pair.
ClosedForms closed_form_jc(Scenario s, double gt, Complex alpha, Complex beta);
ClosedForms closed_form_double_jc(Scenario s, const AmplitudePair& amp, Complex alpha,
                                  Complex beta);
ClosedForms closed_form_concurrences(const ScenarioSpec& spec, double x);

struct Hamiltonian {
  CMatrix matrix;
  SubsystemLayout layout;
};

/// SingleMode: g (c^dag s- + c s+) on A:2 x C:truncation.
/// Comb: rotating-frame Hamiltonian on the zero/one-excitation sector with
/// basis {|down, vac>, |up, vac>, |down, 1_k>}, layout AC:N+2.
/// Markovian has no finite Hamiltonian and throws.
Hamiltonian build_hamiltonian(const BathSpec& bath, std::size_t cavity_truncation = 2);

/// H_AC embedded into A:2 B:2 C:truncation, B idle.
Hamiltonian jc_three_body_hamiltonian(double g, std::size_t cavity_truncation);
/// H_AC + H_BD on A:2 B:2 C:truncation D:truncation.
Hamiltonian double_jc_hamiltonian(double g, std::size_t cavity_truncation);

/// Total excitation count: atoms in `atoms` count 1 when up, modes count photons.
CMatrix excitation_operator(const SubsystemLayout& layout, const std::vector<std::string>& atoms,
                            const std::vector<std::string>& modes);

/// Initial product (beta|ud> + alpha|du>)|n> (or |uu>,|dd> for phi) on a layout
/// whose remaining parts start in their given levels. Throws Error if a
/// requested photon number does not fit the truncation.
StateVector jc_initial_state(Complex alpha, Complex beta, std::size_t photons,
                             std::size_t cavity_truncation);
StateVector double_jc_initial_state(Complex alpha, Complex beta, DoubleJcBranch branch,
                                    std::size_t cavity_truncation);

StateVector evolve_numeric(const Hamiltonian& h, const StateVector& psi0, double t);

}  // namespace tanglesim
