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

#include "tanglesim/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tanglesim/error.hpp"
#include "tanglesim/linalg.hpp"

namespace tanglesim {
namespace {

// Splits every flat index of `full` into (index over `sub` labels in the
// order given, index over the remaining labels in layout order) and returns
// table[sub_index * rest_dim + rest_index] = flat index.
struct Split {
  std::size_t sub_dim = 1;
  std::size_t rest_dim = 1;
  std::vector<std::size_t> table;
};

Split split_layout(const SubsystemLayout& full, const std::vector<std::string>& sub) {
  std::vector<std::size_t> sub_pos;
  for (const auto& l : sub) sub_pos.push_back(full.index_of(l));
  std::vector<std::size_t> rest_pos;
  for (std::size_t i = 0; i < full.size(); ++i)
    if (std::find(sub_pos.begin(), sub_pos.end(), i) == sub_pos.end()) rest_pos.push_back(i);

  Split s;
  for (auto p : sub_pos) s.sub_dim *= full.parts()[p].dim;
  for (auto p : rest_pos) s.rest_dim *= full.parts()[p].dim;
  s.table.resize(full.total_dim());
  for (std::size_t flat = 0; flat < full.total_dim(); ++flat) {
    const auto d = full.digits(flat);
    std::size_t si = 0;
    for (auto p : sub_pos) si = si * full.parts()[p].dim + d[p];
    std::size_t ri = 0;
    for (auto p : rest_pos) ri = ri * full.parts()[p].dim + d[p];
    s.table[si * s.rest_dim + ri] = flat;
  }
  return s;
}

void require_labels(const SubsystemLayout& layout, const std::vector<std::string>& labels,
                    const char* what) {
  if (labels.empty()) throw Error(std::string(what) + ": empty label set");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    (void)layout.index_of(labels[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (labels[i] == labels[j])
        throw Error(std::string(what) + ": repeated label '" + labels[i] + "'");
  }
}

std::vector<std::string> in_layout_order(const SubsystemLayout& layout,
                                         const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : layout.labels())
    if (std::find(labels.begin(), labels.end(), l) != labels.end()) out.push_back(l);
  return out;
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes, SubsystemLayout layout)
    : amplitudes_(std::move(amplitudes)), layout_(std::move(layout)) {
  if (amplitudes_.size() != layout_.total_dim())
    throw Error("StateVector: " + std::to_string(amplitudes_.size()) +
                " amplitudes for a layout of dimension " + std::to_string(layout_.total_dim()));
}

StateVector StateVector::basis(SubsystemLayout layout, const std::vector<std::size_t>& levels) {
  if (levels.size() != layout.size()) throw Error("StateVector::basis: wrong number of levels");
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i] >= layout.parts()[i].dim)
      throw Error("StateVector::basis: level out of range for '" + layout.parts()[i].label + "'");
  std::vector<Complex> amps(layout.total_dim(), Complex{0.0, 0.0});
  amps[layout.flat_index(levels)] = 1.0;
  return StateVector(std::move(amps), std::move(layout));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

bool StateVector::is_normalized(double tol) const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::abs(s - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error("cannot normalize the zero vector");
  std::vector<Complex> amps = amplitudes_;
  for (auto& a : amps) a /= n;
  return StateVector(std::move(amps), layout_);
}

Complex inner(const StateVector& bra, const StateVector& ket) {
  if (!(bra.layout() == ket.layout())) throw Error("inner: layouts differ");
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < bra.dim(); ++i) acc += std::conj(bra[i]) * ket[i];
  return acc;
}

double overlap(const StateVector& a, const StateVector& b) { return std::abs(inner(a, b)); }

DensityMatrix::DensityMatrix(CMatrix matrix, SubsystemLayout layout)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
  if (!matrix_.is_square()) throw Error("DensityMatrix: matrix is not square");
  if (matrix_.rows() != layout_.total_dim())
    throw Error("DensityMatrix: matrix dimension does not match layout");
  if (!is_hermitian(matrix_, 1e-12)) throw Error("DensityMatrix: matrix is not Hermitian");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > 1e-10)
    throw Error("DensityMatrix: trace " + std::to_string(tr.real()) + " differs from 1");
}

double DensityMatrix::purity() const {
  double s = 0.0;
  for (const auto& z : matrix_.entries()) s += std::norm(z);
  return s;
}

double DensityMatrix::min_eigenvalue() const { return herm_eig(matrix_).values.front(); }

DensityMatrix density_from_pure(const StateVector& psi) {
  const double n2 = psi.norm() * psi.norm();
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-8)
    throw Error("density_from_pure: state norm " + std::to_string(std::sqrt(n2)) +
                " deviates from 1");
  const std::size_t d = psi.dim();
  CMatrix rho(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rho(i, j) = psi[i] * std::conj(psi[j]) / n2;
  return DensityMatrix(std::move(rho), psi.layout());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep) {
  require_labels(rho.layout(), keep, "partial_trace");
  const auto kept = in_layout_order(rho.layout(), keep);
  const Split s = split_layout(rho.layout(), kept);
  CMatrix out(s.sub_dim, s.sub_dim);
  const CMatrix& m = rho.matrix();
  for (std::size_t k1 = 0; k1 < s.sub_dim; ++k1)
    for (std::size_t k2 = 0; k2 < s.sub_dim; ++k2) {
      Complex acc{0.0, 0.0};
      for (std::size_t r = 0; r < s.rest_dim; ++r)
        acc += m(s.table[k1 * s.rest_dim + r], s.table[k2 * s.rest_dim + r]);
      out(k1, k2) = acc;
    }
  return DensityMatrix(std::move(out), rho.layout().restricted_to(kept));
}

CMatrix amplitude_matrix(const StateVector& psi, const std::vector<std::string>& rows) {
  require_labels(psi.layout(), rows, "amplitude_matrix");
  const Split s = split_layout(psi.layout(), rows);
  CMatrix m(s.sub_dim, s.rest_dim);
  for (std::size_t i = 0; i < s.sub_dim; ++i)
    for (std::size_t r = 0; r < s.rest_dim; ++r) m(i, r) = psi[s.table[i * s.rest_dim + r]];
  return m;
}

DensityMatrix reduced_density(const StateVector& psi, const std::vector<std::string>& keep) {
  require_labels(psi.layout(), keep, "reduced_density");
  const auto kept = in_layout_order(psi.layout(), keep);
  const CMatrix m = amplitude_matrix(psi, kept);
  const double n2 = psi.norm() * psi.norm();
  CMatrix rho(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t r = 0; r < m.cols(); ++r) acc += m(i, r) * std::conj(m(j, r));
      rho(i, j) = acc / n2;
    }
  return DensityMatrix(std::move(rho), psi.layout().restricted_to(kept));
}

StateVector reorder_subsystems(const StateVector& psi, const std::vector<std::string>& new_order) {
  const SubsystemLayout target = psi.layout().permuted(new_order);
  std::vector<std::size_t> source_pos;
  for (const auto& l : new_order) source_pos.push_back(psi.layout().index_of(l));
  std::vector<Complex> amps(psi.dim());
  std::vector<std::size_t> nd(new_order.size());
  for (std::size_t flat = 0; flat < psi.dim(); ++flat) {
    const auto d = psi.layout().digits(flat);
    for (std::size_t k = 0; k < nd.size(); ++k) nd[k] = d[source_pos[k]];
    amps[target.flat_index(nd)] = psi[flat];
  }
  return StateVector(std::move(amps), target);
}

DensityMatrix reorder_subsystems(const DensityMatrix& rho,
                                 const std::vector<std::string>& new_order) {
  const SubsystemLayout target = rho.layout().permuted(new_order);
  std::vector<std::size_t> source_pos;
  for (const auto& l : new_order) source_pos.push_back(rho.layout().index_of(l));
  std::vector<std::size_t> map(rho.dim());
  std::vector<std::size_t> nd(new_order.size());
  for (std::size_t flat = 0; flat < rho.dim(); ++flat) {
    const auto d = rho.layout().digits(flat);
    for (std::size_t k = 0; k < nd.size(); ++k) nd[k] = d[source_pos[k]];
    map[flat] = target.flat_index(nd);
  }
  CMatrix out(rho.dim(), rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j) out(map[i], map[j]) = rho.matrix()(i, j);
  return DensityMatrix(std::move(out), target);
}

StateVector pad_subsystem(const StateVector& psi, const std::string& label, std::size_t new_dim) {
  const std::size_t pos = psi.layout().index_of(label);
  if (new_dim < psi.layout().parts()[pos].dim)
    throw Error("pad_subsystem: cannot shrink '" + label + "'");
  auto parts = psi.layout().parts();
  parts[pos].dim = new_dim;
  SubsystemLayout target(parts);
  std::vector<Complex> amps(target.total_dim(), Complex{0.0, 0.0});
  for (std::size_t flat = 0; flat < psi.dim(); ++flat)
    amps[target.flat_index(psi.layout().digits(flat))] = psi[flat];
  return StateVector(std::move(amps), std::move(target));
}

CMatrix embed_operator(const CMatrix& op, const SubsystemLayout& op_layout,
                       const SubsystemLayout& full) {
  if (!op.is_square() || op.rows() != op_layout.total_dim())
    throw Error("embed_operator: operator does not match its layout");
  for (const auto& p : op_layout.parts())
    if (full.dim_of(p.label) != p.dim)
      throw Error("embed_operator: dimension mismatch on '" + p.label + "'");
  const Split s = split_layout(full, op_layout.labels());
  CMatrix out(full.total_dim(), full.total_dim());
  for (std::size_t r = 0; r < s.rest_dim; ++r)
    for (std::size_t a = 0; a < s.sub_dim; ++a)
      for (std::size_t b = 0; b < s.sub_dim; ++b)
        out(s.table[a * s.rest_dim + r], s.table[b * s.rest_dim + r]) = op(a, b);
  return out;
}

}  // namespace tanglesim
