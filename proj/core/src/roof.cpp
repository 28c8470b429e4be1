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

#include "tanglesim/roof.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "tanglesim/error.hpp"
#include "tanglesim/linalg.hpp"

namespace tanglesim {
namespace {

constexpr double kRankTolerance = 1e-8;

// Weighted pure-state concurrence p * C(w / |w|) of an unnormalized vector
// given as a (side x rest) amplitude matrix.
double weighted_concurrence(const CMatrix& w) {
  if (w.rows() == 2) {
    double det = 0.0;
    for (std::size_t j = 0; j < w.cols(); ++j)
      for (std::size_t k = j + 1; k < w.cols(); ++k)
        det += std::norm(w(0, j) * w(1, k) - w(0, k) * w(1, j));
    return 2.0 * std::sqrt(det);
  }
  double n2 = 0.0;
  for (const auto& z : w.entries()) n2 += std::norm(z);
  double purity_num = 0.0;
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.rows(); ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t r = 0; r < w.cols(); ++r) acc += w(i, r) * std::conj(w(j, r));
      purity_num += std::norm(acc);
    }
  return std::sqrt(2.0 * std::max(0.0, n2 * n2 - purity_num));
}

using Angles = std::array<double, 3>;

// SU(2) mixing [[e^{i a1} cos t, e^{i a2} sin t], [-e^{-i a2} sin t, e^{-i a1} cos t]].
std::array<Complex, 4> mixing(const Angles& x) {
  const double c = std::cos(x[0]);
  const double s = std::sin(x[0]);
  const Complex e1 = std::polar(1.0, x[1]);
  const Complex e2 = std::polar(1.0, x[2]);
  return {e1 * c, e2 * s, -std::conj(e2) * s, std::conj(e1) * c};
}

class RoofObjective {
 public:
  RoofObjective(CMatrix a, CMatrix b) : a_(std::move(a)), b_(std::move(b)), w_(a_.rows(), a_.cols()) {}

  double operator()(const Angles& x) {
    const auto u = mixing(x);
    double total = 0.0;
    for (int row = 0; row < 2; ++row) {
      const Complex ua = u[2 * row];
      const Complex ub = u[2 * row + 1];
      auto wa = a_.entries();
      auto wb = b_.entries();
      auto ww = w_.entries();
      for (std::size_t i = 0; i < ww.size(); ++i) ww[i] = ua * wa[i] + ub * wb[i];
      total += weighted_concurrence(w_);
    }
    return total;
  }

 private:
  CMatrix a_;
  CMatrix b_;
  CMatrix w_;
};

Angles descend(RoofObjective& f, Angles x, double& fx, const Angles& initial_step,
               double final_step) {
  double scale = 1.0;
  while (scale * std::max({initial_step[0], initial_step[1], initial_step[2]}) >= final_step) {
    bool improved = false;
    for (int k = 0; k < 3; ++k) {
      for (double dir : {1.0, -1.0}) {
        Angles trial = x;
        trial[k] += dir * scale * initial_step[k];
        const double ft = f(trial);
        if (ft < fx) {
          x = trial;
          fx = ft;
          improved = true;
          break;
        }
      }
    }
    if (!improved) scale *= 0.5;
  }
  return x;
}

}  // namespace

double pure_state_concurrence(const StateVector& psi, const std::vector<std::string>& side) {
  CMatrix m = amplitude_matrix(psi, side);
  m *= Complex{1.0 / psi.norm(), 0.0};
  return weighted_concurrence(m);
}

RoofResult roof_concurrence_rank2(const DensityMatrix& rho, const std::vector<std::string>& side,
                                  const RoofOptions& options) {
  if (options.grid_points < 2) throw Error("roof_concurrence_rank2: grid_points must be >= 2");
  const EigenSystem eig = herm_eig(rho.matrix());
  const std::size_t n = eig.values.size();
  if (n >= 3 && eig.values[n - 3] >= kRankTolerance)
    throw Error("roof_concurrence_rank2: state has rank > 2 (third eigenvalue " +
                std::to_string(eig.values[n - 3]) + ")");

  auto eigenvector = [&](std::size_t k, double weight) {
    std::vector<Complex> amps(n);
    for (std::size_t r = 0; r < n; ++r) amps[r] = eig.vectors(r, k) * weight;
    return StateVector(std::move(amps), rho.layout());
  };
  const double p0 = std::max(eig.values[n - 1], 0.0);
  const double p1 = n >= 2 ? std::max(eig.values[n - 2], 0.0) : 0.0;
  const StateVector e0 = eigenvector(n - 1, 1.0);

  RoofResult result;
  if (p1 <= 1e-14) {
    result.value = pure_state_concurrence(e0, side);
    result.eigen_average = result.value;
    result.decomposition.push_back({1.0, e0});
    return result;
  }
  const StateVector e1 = eigenvector(n - 2, 1.0);
  const StateVector a = eigenvector(n - 1, std::sqrt(p0));
  const StateVector b = eigenvector(n - 2, std::sqrt(p1));
  result.eigen_average =
      p0 * pure_state_concurrence(e0, side) + p1 * pure_state_concurrence(e1, side);

  RoofObjective objective(amplitude_matrix(a, side), amplitude_matrix(b, side));

  const int g = options.grid_points;
  const double pi = std::numbers::pi;
  const Angles step = {0.5 * pi / (g - 1), 2.0 * pi / g, 2.0 * pi / g};
  Angles best{0.0, 0.0, 0.0};
  double best_value = objective(best);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      for (int k = 0; k < g; ++k) {
        const Angles x{i * step[0], j * step[1], k * step[2]};
        const double v = objective(x);
        if (v < best_value) {
          best_value = v;
          best = x;
        }
      }
  best = descend(objective, best, best_value, step, options.final_step);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
  for (int r = 0; r < options.restarts; ++r) {
    Angles x{angle(rng) / 4.0, angle(rng), angle(rng)};
    double fx = objective(x);
    x = descend(objective, x, fx, step, options.final_step);
    if (fx < best_value) {
      best_value = fx;
      best = x;
    }
  }

  result.value = best_value;
  const auto u = mixing(best);
  for (int row = 0; row < 2; ++row) {
    std::vector<Complex> amps(n);
    for (std::size_t r = 0; r < n; ++r) amps[r] = u[2 * row] * a[r] + u[2 * row + 1] * b[r];
    StateVector w(std::move(amps), rho.layout());
    const double weight = w.norm() * w.norm();
    if (weight > 0.0) result.decomposition.push_back({weight, w.normalized()});
  }
  return result;
}

}  // namespace tanglesim
