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

#include "oracle.hpp"
#include "tanglesim/bath.hpp"
#include "tanglesim/error.hpp"

namespace tanglesim {
namespace {

TEST(Bath, SingleModeAmplitudes) {
  const auto p = amplitude_pair(0.7, SingleMode{2.0});
  EXPECT_NEAR(p.xi.real(), std::cos(1.4), 1e-15);
  EXPECT_NEAR(p.chi.imag(), -std::sin(1.4), 1e-15);
  EXPECT_FALSE(p.bath_amplitudes.has_value());
}

TEST(Bath, MarkovianAmplitudes) {
  const auto p = amplitude_pair(3.0, Markovian{0.5});
  EXPECT_NEAR(p.xi.real(), std::exp(-0.75), 1e-15);
  EXPECT_NEAR(p.chi.real(), std::sqrt(1.0 - std::exp(-1.5)), 1e-15);
  EXPECT_NEAR(std::norm(p.xi) + std::norm(p.chi), 1.0, 1e-15);
}

TEST(Bath, CombWithOneResonantModeIsSingleMode) {
  Comb c;
  c.modes = 1;
  c.g = 1.3;
  const AmplitudeModel m(c);
  for (double t : {0.0, 0.4, 2.5}) {
    const auto p = m.at(t);
    EXPECT_NEAR(std::abs(p.xi - Complex{std::cos(1.3 * t), 0.0}), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(p.chi - Complex{0.0, -std::sin(1.3 * t)}), 0.0, 1e-12);
  }
}

TEST(Bath, CombConservesProbabilityAndMatchesOracle) {
  Comb c;
  c.modes = 9;
  c.g = 0.2;
  c.spacing = 0.3;
  const AmplitudeModel m(c);
  const oracle::CMat h = oracle::comb_sector(9, 0.2, 0.3);
  oracle::CVec psi0 = oracle::CVec::Zero(10);
  psi0(0) = 1.0;
  for (double t : {0.5, 3.0, 11.0}) {
    const auto p = m.at(t);
    EXPECT_NEAR(std::norm(p.xi) + std::norm(p.chi), 1.0, 1e-12);
    const oracle::CVec ref = oracle::evolve(h, psi0, t);
    EXPECT_LT(std::abs(p.xi - ref(0)), 1e-11);
    ASSERT_TRUE(p.bath_amplitudes.has_value());
    for (std::size_t k = 0; k < 9; ++k)
      EXPECT_LT(std::abs((*p.bath_amplitudes)[k] - ref(k + 1)), 1e-11);
  }
}

TEST(Bath, CombDetuningsAreCentred) {
  Comb c;
  c.modes = 5;
  c.spacing = 0.5;
  c.center_detuning = 0.1;
  EXPECT_DOUBLE_EQ(c.detuning(0), -0.9);
  EXPECT_DOUBLE_EQ(c.detuning(2), 0.1);
  c.g = 0.2;
  EXPECT_NEAR(c.golden_rule_rate(), 2.0 * std::numbers::pi * 0.04 / 0.5, 1e-15);
}

TEST(Bath, CombApproachesExponentialDecay) {
  const double gamma = 0.1, spacing = 0.05;
  Comb c;
  c.modes = 201;
  c.spacing = spacing;
  c.g = std::sqrt(gamma * spacing / (2.0 * std::numbers::pi));
  const AmplitudeModel m(c);
  for (double t = 0.0; t <= 30.0; t += 2.5) {
    const double expected = std::exp(-0.5 * gamma * t);
    EXPECT_LT(std::abs(std::abs(m.at(t).xi) - expected) / expected, 0.05) << "t=" << t;
  }
}

TEST(Bath, FromZConventions) {
  const auto s = amplitude_pair_from_z(0.6, SingleMode{});
  EXPECT_NEAR(std::abs(s.chi - Complex{0.0, -0.6}), 0.0, 1e-15);
  EXPECT_NEAR(s.xi.real(), 0.8, 1e-15);
  const auto m = amplitude_pair_from_z(0.6, Markovian{});
  EXPECT_NEAR(std::abs(m.chi - Complex{0.6, 0.0}), 0.0, 1e-15);
  EXPECT_THROW(amplitude_pair_from_z(1.2, SingleMode{}), Error);
  EXPECT_THROW(amplitude_pair_from_z(-0.1, SingleMode{}), Error);
}

TEST(Bath, ValidationErrors) {
  EXPECT_THROW(validate(Markovian{0.0}), Error);
  EXPECT_THROW(validate(SingleMode{-1.0}), Error);
  Comb c;
  c.modes = 0;
  EXPECT_THROW(validate(c), Error);
  c.modes = 3;
  c.spacing = 0.0;
  EXPECT_THROW(validate(c), Error);
  EXPECT_THROW(amplitude_pair(-1.0, SingleMode{}), Error);
  EXPECT_EQ(describe(SingleMode{2.0}).rfind("single", 0), 0u);
}

}  // namespace
}  // namespace tanglesim
