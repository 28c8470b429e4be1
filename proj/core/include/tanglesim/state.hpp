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

#include <span>
#include <string>
#include <vector>

#include "tanglesim/cmatrix.hpp"
#include "tanglesim/layout.hpp"

namespace tanglesim {

/// Pure state amplitudes tagged with their tensor layout. Construction checks
/// only the dimension; normalization is checked where an operation needs it.
class StateVector {
 public:
  StateVector(std::vector<Complex> amplitudes, SubsystemLayout layout);

  /// Computational basis state with the given per-part levels.
  static StateVector basis(SubsystemLayout layout, const std::vector<std::size_t>& levels);

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const SubsystemLayout& layout() const noexcept { return layout_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  bool is_normalized(double tol = 1e-10) const;
  StateVector normalized() const;

 private:
  std::vector<Complex> amplitudes_;
  SubsystemLayout layout_;
};

Complex inner(const StateVector& bra, const StateVector& ket);
/// |<a|b>|; the fidelity measure used for pure-state comparisons.
double overlap(const StateVector& a, const StateVector& b);

/// Square density matrix tagged with its tensor layout. Construction checks
/// shape and Hermiticity (1e-12) and unit trace (1e-10).
class DensityMatrix {
 public:
  DensityMatrix(CMatrix matrix, SubsystemLayout layout);

  const CMatrix& matrix() const noexcept { return matrix_; }
  const SubsystemLayout& layout() const noexcept { return layout_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

  double purity() const;
  /// Smallest eigenvalue; physical states have it >= -1e-10.
  double min_eigenvalue() const;

 private:
  CMatrix matrix_;
  SubsystemLayout layout_;
};

/// |psi><psi|; throws when the norm deviates from 1 by more than 1e-8.
DensityMatrix density_from_pure(const StateVector& psi);

/// Reduced state on `keep`, in the layout's original relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep);

/// partial_trace(density_from_pure(psi), keep) without forming the full projector.
DensityMatrix reduced_density(const StateVector& psi, const std::vector<std::string>& keep);

/// Permutes tensor factors so the layout reads `new_order`.
StateVector reorder_subsystems(const StateVector& psi, const std::vector<std::string>& new_order);
DensityMatrix reorder_subsystems(const DensityMatrix& rho,
                                 const std::vector<std::string>& new_order);

/// Enlarges subsystem `label` to `new_dim` levels; added levels carry zero amplitude.
StateVector pad_subsystem(const StateVector& psi, const std::string& label, std::size_t new_dim);

/// Matrix of amplitudes with rows indexed by `rows` (in the given order) and
/// columns by the remaining parts in layout order.
CMatrix amplitude_matrix(const StateVector& psi, const std::vector<std::string>& rows);

/// Extends an operator acting on `op_layout` (a subset of `full` labels) by
/// identities on the remaining parts of `full`.
CMatrix embed_operator(const CMatrix& op, const SubsystemLayout& op_layout,
                       const SubsystemLayout& full);

}  // namespace tanglesim
