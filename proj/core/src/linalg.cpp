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

#include "tanglesim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tanglesim/error.hpp"

namespace tanglesim {
namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

// One complex Jacobi rotation annihilating a(p, q). The rotation is
// J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] in the (p, q) plane, which first
// makes a(p, q) real and then applies the classical real rotation.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {  // a <- a J
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // a <- J^dagger a
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (std::size_t k = 0; k < n; ++k) {  // v <- v J
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

EigenSystem herm_eig(const CMatrix& m) {
  if (!m.is_square()) throw Error("herm_eig: matrix is not square");
  const double scale = std::max(1.0, m.max_abs());
  if (!is_hermitian(m, 1e-10 * scale)) throw Error("herm_eig: matrix is not Hermitian");

  const std::size_t n = m.rows();
  CMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex sym = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = sym;
      a(j, i) = std::conj(sym);
    }
  }
  CMatrix v = CMatrix::identity(n);

  const double frob = a.frobenius_norm();
  const double eps = std::numeric_limits<double>::epsilon();
  double previous = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= frob * eps * 1e-3 || off == 0.0) break;
    // Roundoff floor: stop once a sweep no longer shrinks an already tiny remainder.
    if (off <= frob * 1e-12 && off > 0.5 * previous) break;
    previous = off;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenSystem out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

CMatrix spectral_function(const EigenSystem& eig, Complex (*f)(double)) {
  const std::size_t n = eig.values.size();
  CMatrix out(n, n);
  std::vector<Complex> fv(n);
  for (std::size_t k = 0; k < n; ++k) fv[k] = f(eig.values[k]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k)
        acc += eig.vectors(i, k) * fv[k] * std::conj(eig.vectors(j, k));
      out(i, j) = acc;
    }
  return out;
}

CMatrix psd_sqrt(const CMatrix& rho) {
  const EigenSystem eig = herm_eig(rho);
  if (eig.values.front() < -1e-8)
    throw Error("psd_sqrt: eigenvalue " + std::to_string(eig.values.front()) +
                " is negative; matrix is not positive semidefinite");
  return spectral_function(eig, [](double x) { return Complex{std::sqrt(std::max(x, 0.0)), 0.0}; });
}

CMatrix expm(const CMatrix& h, double t, double scale) {
  return Propagator(h * Complex{scale, 0.0}).at(t);
}

std::vector<double> singular_values(const CMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  CMatrix dilation(r + c, r + c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      dilation(i, r + j) = m(i, j);
      dilation(r + j, i) = std::conj(m(i, j));
    }
  const EigenSystem eig = herm_eig(dilation);
  const std::size_t k = std::min(r, c);
  std::vector<double> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(std::max(0.0, eig.values[r + c - 1 - i]));
  return out;
}

Propagator::Propagator(const CMatrix& h) : eig_(herm_eig(h)) {}

CMatrix Propagator::at(double t) const {
  const std::size_t n = eig_.values.size();
  std::vector<Complex> phases(n);
  for (std::size_t k = 0; k < n; ++k)
    phases[k] = std::exp(Complex{0.0, -eig_.values[k] * t});
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k)
        acc += eig_.vectors(i, k) * phases[k] * std::conj(eig_.vectors(j, k));
      out(i, j) = acc;
    }
  return out;
}

std::vector<Complex> Propagator::apply(std::span<const Complex> psi, double t) const {
  const std::size_t n = eig_.values.size();
  if (psi.size() != n) throw Error("Propagator::apply: dimension mismatch");
  std::vector<Complex> coeff(n, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(eig_.vectors(i, k)) * psi[i];
    coeff[k] = acc * std::exp(Complex{0.0, -eig_.values[k] * t});
  }
  std::vector<Complex> out(n, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) acc += eig_.vectors(i, k) * coeff[k];
    out[i] = acc;
  }
  return out;
}

}  // namespace tanglesim
