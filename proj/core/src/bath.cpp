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

#include "tanglesim/bath.hpp"

#include <cmath>
#include <sstream>

#include "tanglesim/dynamics.hpp"
#include "tanglesim/error.hpp"
#include "tanglesim/linalg.hpp"

namespace tanglesim {

double Comb::detuning(std::size_t k) const {
  return center_detuning +
         (static_cast<double>(k) - 0.5 * static_cast<double>(modes - 1)) * spacing;
}

void validate(const BathSpec& bath) {
  std::visit(
      [](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, SingleMode>) {
          if (!(b.g > 0.0)) throw Error("bath: coupling g must be > 0");
        } else if constexpr (std::is_same_v<T, Markovian>) {
          if (!(b.gamma > 0.0)) throw Error("bath: decay rate gamma must be > 0");
        } else {
          if (b.modes < 1) throw Error("bath: comb needs at least one mode");
          if (!(b.g > 0.0)) throw Error("bath: comb coupling g must be > 0");
          if (!(b.spacing > 0.0)) throw Error("bath: comb spacing must be > 0");
        }
      },
      bath);
}

std::string describe(const BathSpec& bath) {
  std::ostringstream os;
  os.precision(12);
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, SingleMode>) {
          os << "single:" << b.g;
        } else if constexpr (std::is_same_v<T, Markovian>) {
          os << "markov:" << b.gamma;
        } else {
          os << "comb:" << b.modes << ":" << b.g << ":" << b.spacing << ":" << b.center_detuning;
        }
      },
      bath);
  return os.str();
}

struct AmplitudeModel::CombCache {
  EigenSystem eig;
  std::vector<double> couplings;
};

AmplitudeModel::AmplitudeModel(BathSpec bath) : bath_(std::move(bath)) {
  validate(bath_);
  if (const auto* comb = std::get_if<Comb>(&bath_)) {
    const Hamiltonian h = build_hamiltonian(*comb);
    // Drop the decoupled ground state; the sector is {|up,vac>, |down,1_k>}.
    const std::size_t n = comb->modes + 1;
    CMatrix sector(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sector(i, j) = h.matrix(i + 1, j + 1);
    auto cache = std::make_shared<CombCache>();
    cache->eig = herm_eig(sector);
    cache->couplings.assign(comb->modes, comb->g);
    comb_ = std::move(cache);
  }
}

AmplitudePair AmplitudeModel::at(double t) const {
  if (t < 0.0) throw Error("amplitude_pair: t must be >= 0");
  return std::visit(
      [&](const auto& b) -> AmplitudePair {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, SingleMode>) {
          return {Complex{std::cos(b.g * t), 0.0}, Complex{0.0, -std::sin(b.g * t)}, std::nullopt};
        } else if constexpr (std::is_same_v<T, Markovian>) {
          const double decay = std::exp(-b.gamma * t);
          return {Complex{std::exp(-0.5 * b.gamma * t), 0.0},
                  Complex{std::sqrt(std::max(0.0, 1.0 - decay)), 0.0}, std::nullopt};
        } else {
          const auto& eig = comb_->eig;
          const std::size_t n = eig.values.size();
          // Initial state is sector index 0 (|up, vac>).
          std::vector<Complex> coeff(n);
          for (std::size_t k = 0; k < n; ++k)
            coeff[k] = std::conj(eig.vectors(0, k)) * std::exp(Complex{0.0, -eig.values[k] * t});
          std::vector<Complex> amps(n, Complex{0.0, 0.0});
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) amps[i] += eig.vectors(i, k) * coeff[k];

          std::vector<Complex> lambdas(amps.begin() + 1, amps.end());
          double norm2 = 0.0;
          Complex bright{0.0, 0.0};
          for (std::size_t k = 0; k < lambdas.size(); ++k) {
            norm2 += std::norm(lambdas[k]);
            bright += comb_->couplings[k] * lambdas[k];
          }
          // chi takes the phase of the bright-mode projection sum_k g_k lambda_k.
          const double mag = std::sqrt(norm2);
          const Complex chi =
              std::abs(bright) > 0.0 ? mag * bright / std::abs(bright) : Complex{mag, 0.0};
          return {amps[0], chi, std::move(lambdas)};
        }
      },
      bath_);
}

AmplitudePair amplitude_pair(double t, const BathSpec& bath) { return AmplitudeModel(bath).at(t); }

AmplitudePair amplitude_pair_from_z(double z, const BathSpec& bath) {
  if (!(z >= 0.0 && z <= 1.0)) throw Error("z must lie in [0, 1]");
  const Complex xi{std::sqrt(std::max(0.0, 1.0 - z * z)), 0.0};
  const bool real_chi = std::holds_alternative<Markovian>(bath);
  return {xi, real_chi ? Complex{z, 0.0} : Complex{0.0, -z}, std::nullopt};
}

}  // namespace tanglesim
