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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "tanglesim/error.hpp"
#include "tanglesim/state.hpp"

namespace tanglesim {
namespace {

const SubsystemLayout kMixed{{"A", 2}, {"B", 3}, {"C", 2}};

StateVector random_state(const SubsystemLayout& layout, std::mt19937_64& rng) {
  const auto v = oracle::random_state(layout.total_dim(), rng);
  return StateVector(std::vector<Complex>(v.data(), v.data() + v.size()), layout);
}

double diff(const CMatrix& a, const oracle::CMat& b) {
  return (oracle::to_eigen(a) - b).cwiseAbs().maxCoeff();
}

TEST(StateVector, SizeMustMatchLayout) {
  EXPECT_THROW(StateVector(std::vector<Complex>(3), kMixed), Error);
  const auto b = StateVector::basis(kMixed, {1, 2, 0});
  EXPECT_EQ(b[kMixed.flat_index({1, 2, 0})], Complex(1.0, 0.0));
  EXPECT_TRUE(b.is_normalized());
}

TEST(StateVector, NormalizationAndOverlap) {
  const SubsystemLayout q{{"A", 2}};
  const StateVector v({3.0, Complex{0.0, 4.0}}, q);
  EXPECT_DOUBLE_EQ(v.norm(), 5.0);
  EXPECT_FALSE(v.is_normalized());
  const auto n = v.normalized();
  EXPECT_NEAR(n.norm(), 1.0, 1e-15);
  EXPECT_NEAR(overlap(n, n), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(inner(n, StateVector::basis(q, {1}))), 0.8, 1e-15);
  EXPECT_THROW(StateVector({0.0, 0.0}, q).normalized(), Error);
}

TEST(DensityMatrix, ValidatesInput) {
  const SubsystemLayout q{{"A", 2}};
  EXPECT_THROW(DensityMatrix(CMatrix{{1.0, 0.5}, {0.0, 0.0}}, q), Error);  // not Hermitian
  EXPECT_THROW(DensityMatrix(CMatrix{{0.6, 0.0}, {0.0, 0.6}}, q), Error);  // trace 1.2
  EXPECT_THROW(DensityMatrix(CMatrix::identity(3), q), Error);            // wrong dim
  const DensityMatrix mixed(CMatrix{{0.5, 0.0}, {0.0, 0.5}}, q);
  EXPECT_NEAR(mixed.purity(), 0.5, 1e-15);
  EXPECT_NEAR(mixed.min_eigenvalue(), 0.5, 1e-14);
}

TEST(DensityMatrix, FromPureRequiresNormalizedInput) {
  const SubsystemLayout q{{"A", 2}};
  EXPECT_THROW(density_from_pure(StateVector({1.0, 1.0}, q)), Error);
  const auto rho = density_from_pure(StateVector({0.6, 0.8}, q));
  EXPECT_NEAR(rho.purity(), 1.0, 1e-14);
}

TEST(PartialTrace, MatchesOracleOnRandomStates) {
  std::mt19937_64 rng(7);
  const std::vector<std::size_t> dims{2, 3, 2};
  const std::vector<std::pair<std::vector<std::string>, std::vector<std::size_t>>> cases = {
      {{"A"}, {0}}, {{"B"}, {1}}, {{"A", "C"}, {0, 2}}, {{"B", "C"}, {1, 2}}, {{"A", "B", "C"}, {0, 1, 2}}};
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = random_state(kMixed, rng);
    const auto ref = oracle::projector(oracle::to_eigen(psi.amplitudes()));
    const auto rho = density_from_pure(psi);
    for (const auto& [labels, positions] : cases) {
      const auto expected = oracle::partial_trace(ref, dims, positions);
      EXPECT_LT(diff(partial_trace(rho, labels).matrix(), expected), 1e-13);
      EXPECT_LT(diff(reduced_density(psi, labels).matrix(), expected), 1e-13);
    }
  }
}

TEST(PartialTrace, KeepsLayoutOrderAndComposes) {
  std::mt19937_64 rng(8);
  const auto rho = density_from_pure(random_state(kMixed, rng));
  const auto ca = partial_trace(rho, {"C", "A"});
  EXPECT_EQ(ca.layout().labels(), (std::vector<std::string>{"A", "C"}));
  const auto a1 = partial_trace(partial_trace(rho, {"A", "B"}), {"A"});
  const auto a2 = partial_trace(rho, {"A"});
  EXPECT_LT(max_abs_diff(a1.matrix(), a2.matrix()), 1e-14);
  EXPECT_THROW(partial_trace(rho, {"Z"}), Error);
}

TEST(Reorder, RoundTripAndAmplitudePlacement) {
  std::mt19937_64 rng(9);
  const auto psi = random_state(kMixed, rng);
  const auto r = reorder_subsystems(psi, {"C", "A", "B"});
  EXPECT_EQ(r.layout().labels(), (std::vector<std::string>{"C", "A", "B"}));
  EXPECT_EQ(r[r.layout().flat_index({1, 0, 2})], psi[kMixed.flat_index({0, 2, 1})]);
  const auto back = reorder_subsystems(r, {"A", "B", "C"});
  EXPECT_NEAR(overlap(back, psi), 1.0, 1e-14);
  EXPECT_EQ(back.layout(), kMixed);

  const auto rho = density_from_pure(psi);
  const auto rr = reorder_subsystems(rho, {"C", "A", "B"});
  EXPECT_LT(max_abs_diff(rr.matrix(), density_from_pure(r).matrix()), 1e-15);
}

TEST(Pad, AddsEmptyLevels) {
  const SubsystemLayout l{{"A", 2}, {"C", 2}};
  const StateVector psi({0.6, 0.0, 0.0, 0.8}, l);
  const auto p = pad_subsystem(psi, "C", 4);
  EXPECT_EQ(p.layout().dim_of("C"), 4u);
  EXPECT_EQ(p[p.layout().flat_index({1, 1})], Complex(0.8, 0.0));
  EXPECT_NEAR(p.norm(), 1.0, 1e-15);
  EXPECT_THROW(pad_subsystem(psi, "C", 1), Error);
}

TEST(AmplitudeMatrix, RowsFollowRequestedOrder) {
  std::mt19937_64 rng(10);
  const auto psi = random_state(kMixed, rng);
  const auto m = amplitude_matrix(psi, {"C", "A"});
  ASSERT_EQ(m.rows(), 4u);
  ASSERT_EQ(m.cols(), 3u);
  EXPECT_EQ(m(1 * 2 + 0, 2), psi[kMixed.flat_index({0, 2, 1})]);
  // m m^dagger is the reduced state on (C, A).
  const auto red = reorder_subsystems(reduced_density(psi, {"A", "C"}), {"C", "A"});
  EXPECT_LT(max_abs_diff(m * m.adjoint(), red.matrix()), 1e-14);
}

TEST(EmbedOperator, MatchesKroneckerOracle) {
  std::mt19937_64 rng(11);
  const auto op = oracle::random_hermitian(4, rng);
  const SubsystemLayout ac{{"A", 2}, {"C", 2}};
  const SubsystemLayout full{{"A", 2}, {"B", 3}, {"C", 2}};
  const CMatrix e = embed_operator(oracle::from_eigen(op), ac, full);
  // Oracle: act on (A, C, B) ordering then permute B into the middle.
  const oracle::CMat acb = oracle::kron(op, oracle::CMat::Identity(3, 3));
  for (std::size_t r = 0; r < 12; ++r)
    for (std::size_t c = 0; c < 12; ++c) {
      const auto dr = full.digits(r), dc = full.digits(c);
      const std::size_t rr = (dr[0] * 2 + dr[2]) * 3 + dr[1];
      const std::size_t cc = (dc[0] * 2 + dc[2]) * 3 + dc[1];
      EXPECT_LT(std::abs(e(r, c) - acb(rr, cc)), 1e-15);
    }
}

}  // namespace
}  // namespace tanglesim
