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

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tanglesim/cmatrix.hpp"

namespace tanglesim {

/// One resonant cavity mode coupled with strength g (rad/s).
struct SingleMode {
  double g = 1.0;
};

/// Wigner-Weisskopf limit of a vacuum reservoir with decay rate gamma (1/s).
struct Markovian {
  double gamma = 1.0;
};

/// N equally spaced modes with flat coupling g, centred on the atomic
/// frequency plus `center_detuning`.
struct Comb {
  std::size_t modes = 1;
  double g = 1.0;
  double spacing = 1.0;
  double center_detuning = 0.0;

  /// Detuning of mode k (0-based) from the atomic transition.
  double detuning(std::size_t k) const;
  /// Fermi golden-rule decay rate 2 pi g^2 / spacing.
  double golden_rule_rate() const { return 2.0 * 3.14159265358979323846 * g * g / spacing; }
};

using BathSpec = std::variant<SingleMode, Markovian, Comb>;

/// Throws Error for non-positive rates, N = 0 or non-positive spacing.
void validate(const BathSpec& bath);
std::string describe(const BathSpec& bath);

/// Survival amplitude xi and collective transfer amplitude chi of a single
/// excitation, |up, vac> -> xi |up, 0~> + chi |down, 1~>.
struct AmplitudePair {
  Complex xi;
  Complex chi;
  /// Per-mode amplitudes lambda_k for the Comb model.
  std::optional<std::vector<Complex>> bath_amplitudes;
};

/// Evaluates AmplitudePair for one bath; the Comb sector Hamiltonian is
/// diagonalised once at construction.
class AmplitudeModel {
 public:
  explicit AmplitudeModel(BathSpec bath);

  /// Throws Error for t < 0.
  AmplitudePair at(double t) const;
  const BathSpec& bath() const noexcept { return bath_; }

 private:
  BathSpec bath_;
  struct CombCache;
  std::shared_ptr<const CombCache> comb_;
};

AmplitudePair amplitude_pair(double t, const BathSpec& bath);

/// Amplitudes with |chi| = z and |xi| = sqrt(1 - z^2), carrying the phase
/// convention of the bath: chi = -i z for SingleMode and Comb, chi = z for
/// Markovian. Throws Error for z outside [0, 1].
AmplitudePair amplitude_pair_from_z(double z, const BathSpec& bath);

}  // namespace tanglesim
