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

#include "tanglesim/measures.hpp"

#include <algorithm>
#include <cmath>

#include "tanglesim/error.hpp"
#include "tanglesim/linalg.hpp"

namespace tanglesim {
namespace {

void require_exact_parts(const SubsystemLayout& layout, const std::vector<std::string>& labels,
                         const char* what) {
  if (layout.size() != labels.size())
    throw Error(std::string(what) + ": state must consist of exactly the focus and its partners");
  for (const auto& l : labels) (void)layout.index_of(l);
}

}  // namespace

WoottersSpectrum wootters_from_factor(const CMatrix& w) {
  if (w.rows() != 4) throw Error("wootters_from_factor: factor must have 4 rows");
  const std::size_t k = w.cols();
  // (sy x sy) is the real antidiagonal (-1, 1, 1, -1).
  CMatrix flipped(4, k);
  for (std::size_t j = 0; j < k; ++j) {
    flipped(0, j) = -w(3, j);
    flipped(1, j) = w(2, j);
    flipped(2, j) = w(1, j);
    flipped(3, j) = -w(0, j);
  }
  const CMatrix tau = w.transpose() * flipped;
  const std::vector<double> sv = singular_values(tau);

  WoottersSpectrum out;
  for (std::size_t i = 0; i < 4 && i < sv.size(); ++i) out.lambdas[i] = sv[i] * sv[i];
  const double c = std::sqrt(out.lambdas[0]) - std::sqrt(out.lambdas[1]) -
                   std::sqrt(out.lambdas[2]) - std::sqrt(out.lambdas[3]);
  out.concurrence = std::max(0.0, c);
  return out;
}

WoottersSpectrum concurrence_two_qubit(const DensityMatrix& rho) {
  const auto& parts = rho.layout().parts();
  if (parts.size() != 2 || parts[0].dim != 2 || parts[1].dim != 2)
    throw Error("concurrence_two_qubit: state must be two qubits (4x4)");
  const EigenSystem eig = herm_eig(rho.matrix());
  CMatrix w(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    // Eigenvalues in [-1e-10, 0) are roundoff and are clamped.
    const double amp = std::sqrt(std::max(eig.values[k], 0.0));
    for (std::size_t r = 0; r < 4; ++r) w(r, k) = eig.vectors(r, k) * amp;
  }
  return wootters_from_factor(w);
}

double pair_concurrence(const StateVector& psi, const std::string& a, const std::string& b) {
  if (psi.layout().dim_of(a) != 2 || psi.layout().dim_of(b) != 2)
    throw Error("pair_concurrence: '" + a + "' and '" + b + "' must both be qubits");
  if (a == b) throw Error("pair_concurrence: labels must differ");
  CMatrix m = amplitude_matrix(psi, {a, b});
  m *= Complex{1.0 / psi.norm(), 0.0};
  return wootters_from_factor(m).concurrence;
}

double concurrence_pure_bipartition(const StateVector& psi,
                                    const std::vector<std::string>& side_a) {
  const CMatrix m = amplitude_matrix(psi, side_a);
  if (m.rows() != 2)
    throw Error("concurrence_pure_bipartition: reduced dimension of side is " +
                std::to_string(m.rows()) + ", expected 2");
  // det(m m^dagger) = sum over column pairs of |2x2 minor|^2 (Cauchy-Binet).
  double det = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t k = j + 1; k < m.cols(); ++k)
      det += std::norm(m(0, j) * m(1, k) - m(0, k) * m(1, j));
  const double n2 = psi.norm() * psi.norm();
  return 2.0 * std::sqrt(det) / n2;
}

TangleReport residual_tangle(const StateVector& psi, const std::string& focus,
                             const std::array<std::string, 2>& others, const RoofOptions& roof) {
  require_exact_parts(psi.layout(), {focus, others[0], others[1]}, "residual_tangle");
  if (psi.layout().dim_of(focus) != 2) throw Error("residual_tangle: focus must be a qubit");

  TangleReport report;
  report.focus = focus;
  report.c_focus_rest = concurrence_pure_bipartition(psi, {focus});
  double sum_sq = 0.0;
  for (const auto& other : others) {
    double c;
    if (psi.layout().dim_of(other) == 2) {
      c = pair_concurrence(psi, focus, other);
    } else {
      c = roof_concurrence_rank2(reduced_density(psi, {focus, other}), {focus}, roof).value;
    }
    report.pair_concurrences[focus + other] = c;
    sum_sq += c * c;
  }
  report.residual = report.c_focus_rest * report.c_focus_rest - sum_sq;
  return report;
}

TangleReport residual_excess(const StateVector& psi, const std::string& focus,
                             const std::array<std::string, 3>& others) {
  require_exact_parts(psi.layout(), {focus, others[0], others[1], others[2]}, "residual_excess");
  TangleReport report;
  report.focus = focus;
  report.c_focus_rest = concurrence_pure_bipartition(psi, {focus});
  double sum_sq = 0.0;
  for (const auto& other : others) {
    const double c = pair_concurrence(psi, focus, other);
    report.pair_concurrences[focus + other] = c;
    sum_sq += c * c;
  }
  report.residual = report.c_focus_rest * report.c_focus_rest - sum_sq;
  return report;
}

}  // namespace tanglesim
