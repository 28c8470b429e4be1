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
#include <vector>

#include "tanglesim/cmatrix.hpp"

namespace tanglesim {

/// Eigenvalues in ascending order; column j of `vectors` belongs to values[j].
struct EigenSystem {
  std::vector<double> values;
  CMatrix vectors;
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Throws Error if `m` is not square or not Hermitian within 1e-10 (scaled
/// by max(1, max|m_ij|)).
EigenSystem herm_eig(const CMatrix& m);

/// Rebuilds V f(diag) V^dagger.
CMatrix spectral_function(const EigenSystem& eig, Complex (*f)(double));

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-1e-8, 0) are clamped to zero; anything below throws.
CMatrix psd_sqrt(const CMatrix& rho);

/// exp(-i * scale * t * h) for Hermitian h.
CMatrix expm(const CMatrix& h, double t, double scale = 1.0);

/// Singular values in descending order, min(rows, cols) of them. Computed from
/// the Hermitian dilation [[0, m], [m^dagger, 0]] so small values keep
/// absolute accuracy instead of the square-root loss of the m^dagger m route.
std::vector<double> singular_values(const CMatrix& m);

/// exp(-i h t) with the eigendecomposition of h computed once.
class Propagator {
 public:
  explicit Propagator(const CMatrix& h);

  CMatrix at(double t) const;
  std::vector<Complex> apply(std::span<const Complex> psi, double t) const;
  const EigenSystem& eigensystem() const noexcept { return eig_; }

 private:
  EigenSystem eig_;
};

}  // namespace tanglesim
