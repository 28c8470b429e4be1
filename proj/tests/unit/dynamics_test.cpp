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
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "tanglesim/dynamics.hpp"
#include "tanglesim/error.hpp"
#include "tanglesim/measures.hpp"

namespace tanglesim {
namespace {

const double kA = 1.0 / std::sqrt(10.0);
const double kB = 3.0 / std::sqrt(10.0);

std::pair<double, double> random_pair(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> th(0.05, std::numbers::pi / 2 - 0.05);
  const double t = th(rng);
  return {std::cos(t), std::sin(t)};
}

double fidelity(const oracle::CVec& a, std::span<const Complex> b) {
  return std::norm(a.dot(oracle::to_eigen(b)));
}

TEST(Dynamics, AnalyticStatesAreNormalized) {
  for (double t : {0.0, 0.3, 1.7, 5.0}) {
    EXPECT_NEAR(evolve_jc_vacuum(t, kA, kB).norm(), 1.0, 1e-14);
    EXPECT_NEAR(evolve_jc_one_photon(t, kA, kB).norm(), 1.0, 1e-14);
    for (auto br : {DoubleJcBranch::Psi, DoubleJcBranch::Phi})
      EXPECT_NEAR(evolve_double_jc(amplitude_pair(t, SingleMode{}), kA, kB, br).norm(), 1.0, 1e-14);
  }
  EXPECT_THROW(evolve_jc_vacuum(0.1, 0.5, 0.5), Error);
}

TEST(Dynamics, VacuumClosedFormsMatchMeasured) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 5; ++trial) {
    const auto [a, b] = trial == 0 ? std::pair{kA, kB} : random_pair(rng);
    for (double gt : uniform_grid(0.0, 2.0 * std::numbers::pi, 41)) {
      const auto psi = evolve_jc_vacuum(gt, a, b);
      const auto cf = closed_form_jc(Scenario::JCVacuum, gt, a, b);
      EXPECT_NEAR(pair_concurrence(psi, "A", "B"), cf.pairs.at("AB"), 1e-12);
      EXPECT_NEAR(pair_concurrence(psi, "A", "C"), cf.pairs.at("AC"), 1e-12);
      EXPECT_NEAR(pair_concurrence(psi, "B", "C"), cf.pairs.at("BC"), 1e-12);
      EXPECT_NEAR(concurrence_pure_bipartition(psi, {"A"}), cf.focus_rest, 1e-12);
    }
  }
}

TEST(Dynamics, VacuumAtQuarterPeriod) {
  const auto cf = closed_form_jc(Scenario::JCVacuum, std::numbers::pi / 2, kA, kB);
  EXPECT_NEAR(cf.pairs.at("AB"), 0.0, 1e-15);
  EXPECT_NEAR(cf.pairs.at("BC"), 0.6, 1e-15);
  EXPECT_NEAR(cf.residual, 0.0, 1e-15);
}

TEST(Dynamics, OnePhotonQubitQuantitiesMatchMeasured) {
  for (double gt : uniform_grid(0.0, 2.0 * std::numbers::pi, 41)) {
    const auto psi = evolve_jc_one_photon(gt, kA, kB);
    const auto cf = closed_form_jc(Scenario::JCOnePhoton, gt, kA, kB);
    EXPECT_NEAR(pair_concurrence(psi, "A", "B"), cf.pairs.at("AB"), 1e-12);
    EXPECT_NEAR(concurrence_pure_bipartition(psi, {"A"}), cf.focus_rest, 1e-12);
  }
}

TEST(Dynamics, DoubleJcClosedFormsMatchMeasured) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 5; ++trial) {
    const auto [a, b] = random_pair(rng);
    for (double z : uniform_grid(0.0, 1.0, 41)) {
      const auto amp = amplitude_pair_from_z(z, SingleMode{});
      for (auto [s, br] : {std::pair{Scenario::DoubleJCPsi, DoubleJcBranch::Psi},
                           std::pair{Scenario::DoubleJCPhi, DoubleJcBranch::Phi}}) {
        const auto psi = evolve_double_jc(amp, a, b, br);
        const auto cf = closed_form_double_jc(s, amp, a, b);
        for (const auto& [pair, value] : cf.pairs)
          EXPECT_NEAR(pair_concurrence(psi, pair.substr(0, 1), pair.substr(1, 1)), value, 1e-12)
              << pair << " z=" << z;
        EXPECT_NEAR(concurrence_pure_bipartition(psi, {"A"}), cf.focus_rest, 1e-12);
      }
    }
  }
}

TEST(Dynamics, ClosedFormsDependOnModuliOnly) {
  const Complex a = std::polar(0.429, 0.7);
  const Complex b = std::polar(std::sqrt(1 - 0.429 * 0.429), -1.1);
  const auto amp = amplitude_pair_from_z(0.5, SingleMode{});
  const auto phased = closed_form_double_jc(Scenario::DoubleJCPhi, amp, a, b);
  const auto real = closed_form_double_jc(Scenario::DoubleJCPhi, amp, std::abs(a), std::abs(b));
  EXPECT_EQ(phased.pairs, real.pairs);
  const auto psi = evolve_double_jc(amp, a, b, DoubleJcBranch::Phi);
  EXPECT_NEAR(pair_concurrence(psi, "A", "B"), real.pairs.at("AB"), 1e-12);
}

TEST(Dynamics, AnalyticStatesMatchOracleEvolution) {
  const std::size_t trunc = 4;
  const oracle::CMat jc = oracle::jc_coupling(1.0, trunc);  // on (atom, cavity)
  // Oracle ordering (A, C, B): H = H_AC (x) 1_B, then compare after mapping indices.
  const oracle::CMat h = oracle::kron(jc, oracle::CMat::Identity(2, 2));
  const SubsystemLayout abc{{"A", 2}, {"B", 2}, {"C", trunc}};
  auto to_acb = [&](const StateVector& psi) {
    oracle::CVec out(psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i) {
      const auto d = abc.digits(i);
      out((d[0] * trunc + d[2]) * 2 + d[1]) = psi[i];
    }
    return out;
  };
  for (std::size_t photons : {0u, 1u}) {
    const oracle::CVec psi0 = to_acb(jc_initial_state(kA, kB, photons, trunc));
    for (double t : {0.2, 1.1, 2.9, 7.4}) {
      const oracle::CVec numeric = oracle::evolve(h, psi0, t);
      const auto analytic = photons == 0 ? evolve_jc_vacuum(t, kA, kB) : evolve_jc_one_photon(t, kA, kB);
      const oracle::CVec a = to_acb(pad_subsystem(analytic, "C", trunc));
      EXPECT_GT(std::norm(numeric.dot(a)), 1.0 - 1e-12) << "photons " << photons << " t " << t;
    }
  }
}

TEST(Dynamics, LibraryHamiltoniansMatchAnalyticStates) {
  const Hamiltonian h3 = jc_three_body_hamiltonian(1.0, 3);
  const Hamiltonian h4 = double_jc_hamiltonian(1.0, 2);
  for (double t : {0.4, 2.2}) {
    const auto n3 = evolve_numeric(h3, jc_initial_state(kA, kB, 0, 3), t);
    EXPECT_GT(std::pow(overlap(n3, pad_subsystem(evolve_jc_vacuum(t, kA, kB), "C", 3)), 2),
              1.0 - 1e-12);
    for (auto br : {DoubleJcBranch::Psi, DoubleJcBranch::Phi}) {
      const auto n4 = evolve_numeric(h4, double_jc_initial_state(kA, kB, br, 2), t);
      const auto a4 = evolve_double_jc(amplitude_pair(t, SingleMode{}), kA, kB, br);
      EXPECT_GT(fidelity(oracle::to_eigen(n4.amplitudes()), a4.amplitudes()), 1.0 - 1e-12);
    }
  }
}

TEST(Dynamics, HamiltoniansConserveExcitations) {
  const Hamiltonian h3 = jc_three_body_hamiltonian(0.8, 4);
  const CMatrix n3 = excitation_operator(h3.layout, {"A", "B"}, {"C"});
  EXPECT_LT(commutator(h3.matrix, n3).max_abs(), 1e-14);
  const Hamiltonian h4 = double_jc_hamiltonian(0.8, 3);
  const CMatrix n4 = excitation_operator(h4.layout, {"A", "B"}, {"C", "D"});
  EXPECT_LT(commutator(h4.matrix, n4).max_abs(), 1e-14);
  EXPECT_TRUE(is_hermitian(h4.matrix, 0.0));
}

TEST(Dynamics, BuildHamiltonianVariants) {
  const auto single = build_hamiltonian(SingleMode{2.0}, 3);
  EXPECT_EQ(single.layout.dims(), (std::vector<std::size_t>{2, 3}));
  EXPECT_LT((oracle::to_eigen(single.matrix) - oracle::jc_coupling(2.0, 3)).cwiseAbs().maxCoeff(),
            1e-15);
  Comb c;
  c.modes = 7;
  c.g = 0.1;
  const auto comb = build_hamiltonian(c);
  EXPECT_EQ(comb.matrix.rows(), 9u);
  EXPECT_THROW(build_hamiltonian(Markovian{}), Error);
  EXPECT_THROW(build_hamiltonian(SingleMode{}, 1), Error);
  EXPECT_THROW(jc_initial_state(kA, kB, 2, 2), Error);
}

TEST(Dynamics, CombAmplitudesPreserveSumRule) {
  Comb c;
  c.modes = 31;
  c.g = 0.05;
  c.spacing = 0.04;
  const AmplitudeModel m(c);
  for (double t : {0.0, 5.0, 20.0}) {
    const auto amp = m.at(t);
    const auto psi = evolve_double_jc(amp, 0.429, std::sqrt(1 - 0.429 * 0.429), DoubleJcBranch::Psi);
    EXPECT_NEAR(psi.norm(), 1.0, 1e-10);
    EXPECT_NEAR(residual_excess(psi, "A", {"B", "C", "D"}).residual, 0.0, 1e-10);
  }
}

TEST(ScenarioSpec, ValidationNamesTheField) {
  ScenarioSpec s;
  s.time_grid = {0.0, 1.0};
  EXPECT_NO_THROW(s.validate());
  s.alpha = 0.5;
  try {
    s.validate();
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("alpha"), std::string::npos);
  }
  s = ScenarioSpec{};
  s.bath = Markovian{};
  EXPECT_THROW(s.validate(), Error);
  s = ScenarioSpec{};
  s.scenario = Scenario::DoubleJCPhi;
  s.grid_kind = GridKind::Z;
  s.time_grid = {0.0, 1.5};
  EXPECT_THROW(s.validate(), Error);
  EXPECT_EQ(parse_scenario("4"), Scenario::DoubleJCPhi);
  EXPECT_EQ(parse_scenario("jc-vacuum"), Scenario::JCVacuum);
  EXPECT_FALSE(parse_scenario("5").has_value());
}

TEST(Dynamics, DoubleJcRejectsUnphysicalAmplitudes) {
  AmplitudePair bad{Complex{0.9, 0.0}, Complex{0.9, 0.0}, std::nullopt};
  EXPECT_THROW(evolve_double_jc(bad, kA, kB, DoubleJcBranch::Psi), Error);
}

}  // namespace
}  // namespace tanglesim
