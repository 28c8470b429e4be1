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

// Acceptance checks. Run with --criterion N for one check or without
// arguments for all of them; each prints a single PASS/FAIL line.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "oracle.hpp"
#include "tanglesim/tanglesim.hpp"

namespace {

using namespace tanglesim;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kA2 = 1.0 / std::sqrt(10.0);
const double kB2 = 3.0 / std::sqrt(10.0);
const double kA4 = 0.429;
const double kB4 = std::sqrt(1.0 - 0.429 * 0.429);

struct Outcome {
  bool pass;
  std::string detail;
};

std::string format(const char* pattern, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

std::vector<std::pair<double, double>> amplitude_set(double a, double b, int extra,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> th(0.02, std::numbers::pi / 2 - 0.02);
  std::vector<std::pair<double, double>> out{{a, b}};
  for (int i = 0; i < extra; ++i) {
    const double t = th(rng);
    out.emplace_back(std::cos(t), std::sin(t));
  }
  return out;
}

AmplitudePair from_z(double z) { return amplitude_pair_from_z(z, SingleMode{}); }

Outcome window_endpoints() {
  // Quoted pair; the windows depend on |alpha / beta| only.
  const auto ad = esd_window_ad(0.429, 0.905);
  const auto ab = esd_window_ab(0.429, 0.905);
  if (!ad || !ab) return {false, "window missing"};
  const double dev = std::max({std::abs(ad->lo - 0.584), std::abs(ad->hi - 0.812),
                               std::abs(ab->lo - 0.689)});
  return {dev <= 2e-3, format("AD z in (%.5f, %.5f), AB z >= %.5f; max deviation %.2e (tol 2e-3)",
                              ad->lo, ad->hi, ab->lo, dev)};
}

Outcome vacuum_identities() {
  double worst = 0.0;
  for (auto [a, b] : amplitude_set(kA2, kB2, 20, 101)) {
    const double c0sq = 4 * a * a * b * b;
    for (double gt : uniform_grid(0.0, kTwoPi, 501)) {
      const auto cf = closed_form_jc(Scenario::JCVacuum, gt, a, b);
      const double ab = cf.pairs.at("AB"), bc = cf.pairs.at("BC");
      const auto psi = evolve_jc_vacuum(gt, a, b);
      const auto rep = residual_tangle(psi, "A", {"B", "C"});
      const double mab = rep.pair_concurrences.at("AB");
      const double mbc = pair_concurrence(psi, "B", "C");
      worst = std::max({worst, std::abs(ab * ab + bc * bc - c0sq), std::abs(cf.residual),
                        std::abs(mab * mab + mbc * mbc - c0sq), std::abs(rep.residual)});
    }
  }
  return {worst <= 1e-9, format("max deviation %.2e over 21 amplitude pairs x 501 points (tol 1e-9)", worst)};
}

Outcome psi_sum_rule() {
  double worst = 0.0;
  for (auto [a, b] : amplitude_set(kA4, kB4, 20, 103)) {
    for (double z : uniform_grid(0.0, 1.0, 501)) {
      const auto amp = from_z(z);
      const auto cf = closed_form_double_jc(Scenario::DoubleJCPsi, amp, a, b);
      const auto rep = residual_excess(evolve_double_jc(amp, a, b, DoubleJcBranch::Psi), "A", {"B", "C", "D"});
      worst = std::max({worst, std::abs(cf.residual), std::abs(rep.residual)});
    }
  }
  return {worst <= 1e-9, format("max |C^2_A(BCD) - sum of pair squares| %.2e (tol 1e-9)", worst)};
}

Outcome phi_decomposition() {
  double split = 0.0, min_e = 1.0, in_window = 0.0;
  int window_points = 0;
  for (auto [a, b] : amplitude_set(kA4, kB4, 20, 104)) {
    const double c0sq = 4 * a * a * b * b;
    const auto both = simultaneous_window(a, b);
    for (double z : uniform_grid(0.0, 1.0, 501)) {
      const auto amp = from_z(z);
      const double xi2 = std::norm(amp.xi);
      const auto cf = closed_form_double_jc(Scenario::DoubleJCPhi, amp, a, b);
      const auto rep = residual_excess(evolve_double_jc(amp, a, b, DoubleJcBranch::Phi), "A", {"B", "C", "D"});
      const double ac = cf.pairs.at("AC"), mac = rep.pair_concurrences.at("AC");
      split = std::max({split, std::abs(cf.focus_rest * cf.focus_rest - ac * ac - c0sq * xi2),
                        std::abs(rep.c_focus_rest * rep.c_focus_rest - mac * mac - c0sq * xi2)});
      min_e = std::min({min_e, cf.residual, rep.residual});
      if (both && both->contains(z)) {
        ++window_points;
        in_window = std::max({in_window, std::abs(cf.residual - c0sq * xi2),
                              std::abs(rep.residual - c0sq * xi2)});
      }
    }
  }
  const bool pass = split <= 1e-9 && min_e >= -1e-9 && in_window <= 1e-9 && window_points > 0;
  return {pass, format("split deviation %.2e, min E %.2e, in-window deviation %.2e over %g points",
                       split, min_e, in_window, window_points)};
}

Outcome analytic_vs_numeric_evolution() {
  std::mt19937_64 rng(105);
  std::uniform_real_distribution<double> time(0.0, 2.0 * kTwoPi);
  double worst = 0.0;

  // Oracle ordering (A, C, B) with H = H_AC (x) 1_B.
  auto abc_to_acb = [](const StateVector& psi) {
    const auto& l = psi.layout();
    const std::size_t dc = l.dim_of("C");
    oracle::CVec out(psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i) {
      const auto d = l.digits(i);
      out((d[0] * dc + d[2]) * 2 + d[1]) = psi[i];
    }
    return out;
  };
  for (std::size_t photons : {0u, 1u}) {
    const std::size_t trunc = photons + 3;
    const oracle::CMat h = oracle::kron(oracle::jc_coupling(1.0, trunc), oracle::CMat::Identity(2, 2));
    const oracle::CVec psi0 = abc_to_acb(jc_initial_state(kA2, kB2, photons, trunc));
    Eigen::SelfAdjointEigenSolver<oracle::CMat> es(h);
    for (int k = 0; k < 100; ++k) {
      const double t = time(rng);
      oracle::CVec phases(h.rows());
      for (Eigen::Index i = 0; i < h.rows(); ++i)
        phases(i) = std::exp(oracle::Complex(0.0, -t * es.eigenvalues()(i)));
      const oracle::CVec numeric =
          es.eigenvectors() * phases.asDiagonal() * (es.eigenvectors().adjoint() * psi0);
      const auto analytic = photons == 0 ? evolve_jc_vacuum(t, kA2, kB2) : evolve_jc_one_photon(t, kA2, kB2);
      const double f = std::norm(numeric.dot(abc_to_acb(pad_subsystem(analytic, "C", trunc))));
      worst = std::max(worst, 1.0 - f);
    }
  }

  // Two atoms, two single-mode cavities: oracle ordering (A, C, B, D).
  const oracle::CMat jc = oracle::jc_coupling(1.0, 2);
  const oracle::CMat id4 = oracle::CMat::Identity(4, 4);
  const oracle::CMat h4 = oracle::kron(jc, id4) + oracle::kron(id4, jc);
  auto abcd_to_acbd = [](const StateVector& psi) {
    oracle::CVec out(16);
    for (std::size_t i = 0; i < 16; ++i) {
      const auto d = psi.layout().digits(i);
      out(((d[0] * 2 + d[2]) * 2 + d[1]) * 2 + d[3]) = psi[i];
    }
    return out;
  };
  for (auto branch : {DoubleJcBranch::Psi, DoubleJcBranch::Phi}) {
    const oracle::CVec psi0 = abcd_to_acbd(double_jc_initial_state(kA4, kB4, branch, 2));
    for (int k = 0; k < 100; ++k) {
      const double t = time(rng);
      const oracle::CVec numeric = oracle::evolve(h4, psi0, t);
      const auto analytic = evolve_double_jc(amplitude_pair(t, SingleMode{}), kA4, kB4, branch);
      worst = std::max(worst, 1.0 - std::norm(numeric.dot(abcd_to_acbd(analytic))));
    }
  }
  return {worst <= 1e-9, format("min fidelity 1 - %.2e over 4 x 100 random times (tol 1e-9)", worst)};
}

Outcome death_implies_residual() {
  const double a = kA2, b = kB2;
  auto c_ab = [=](double gt) { return closed_form_jc(Scenario::JCOnePhoton, gt, a, b).pairs.at("AB"); };
  const auto gts = uniform_grid(0.0, kTwoPi, 2001);
  std::vector<double> values(gts.size());
  std::transform(gts.begin(), gts.end(), values.begin(), c_ab);
  const auto windows = detect_zero_intervals(gts, values, c_ab, "AB", GridKind::Time);

  auto tau = [=](double gt) {
    return residual_tangle(evolve_jc_one_photon(gt, a, b), "A", {"B", "C"}).residual;
  };
  double weakest = std::numeric_limits<double>::infinity();
  for (const auto& w : windows) {
    double best = -1.0;
    for (int k = 0; k <= 8; ++k) best = std::max(best, tau(w.lo + w.width() * k / 8.0));
    weakest = std::min(weakest, best);
  }
  double min_tau = std::numeric_limits<double>::infinity();
  for (double gt : uniform_grid(0.0, kTwoPi, 101)) min_tau = std::min(min_tau, tau(gt));
  for (double gt : gts) min_tau = std::min(min_tau, closed_form_jc(Scenario::JCOnePhoton, gt, a, b).residual);

  const bool pass = !windows.empty() && weakest >= 1e-3 && min_tau >= -1e-9;
  return {pass, format("%g AB windows, smallest in-window max tau %.4f (need >= 1e-3), global min tau %.2e",
                       static_cast<double>(windows.size()), windows.empty() ? 0.0 : weakest, min_tau)};
}

Outcome roof_vs_closed_form() {
  double worst = 0.0, at = 0.0;
  for (double gt : uniform_grid(0.0, kTwoPi, 25)) {
    const auto psi = evolve_jc_one_photon(gt, kA2, kB2);
    const double roof = roof_concurrence_rank2(reduced_density(psi, {"A", "C"}), {"A"}).value;
    const double cf = closed_form_jc(Scenario::JCOnePhoton, gt, kA2, kB2).pairs.at("AC");
    if (std::abs(roof - cf) > worst) {
      worst = std::abs(roof - cf);
      at = gt;
    }
  }
  return {worst <= 2e-3, format("max |roof - closed form| for C_AC %.4f at gt = %.4f (tol 2e-3)", worst, at)};
}

Outcome markovian_limit() {
  const double gamma = 0.1, spacing = 0.05;
  Comb comb;
  comb.modes = 201;
  comb.spacing = spacing;
  comb.g = std::sqrt(gamma * spacing / kTwoPi);
  const AmplitudeModel model(comb);
  double worst = 0.0;
  for (double t : uniform_grid(0.0, 3.0 / gamma, 61)) {
    const double expected = std::exp(-0.5 * gamma * t);
    worst = std::max(worst, std::abs(std::abs(model.at(t).xi) - expected) / expected);
  }
  return {worst <= 0.05, format("max relative error of |xi| %.4f for gamma t <= 3 (tol 0.05)", worst)};
}

Outcome property_suites() {
  std::mt19937_64 rng(109);
  int failures = 0;
  double mono = 0.0, lu = 0.0, ptr = 0.0, grp = 0.0;
  const SubsystemLayout abc{{"A", 2}, {"B", 2}, {"C", 2}};
  const SubsystemLayout ab{{"A", 2}, {"B", 2}};
  const SubsystemLayout mixed{{"A", 2}, {"B", 3}, {"C", 2}};
  std::uniform_real_distribution<double> time(-3.0, 3.0);
  for (int k = 0; k < 1000; ++k) {
    const auto v = oracle::random_state(8, rng);
    const double tau =
        residual_tangle(StateVector(std::vector<Complex>(v.data(), v.data() + 8), abc), "A", {"B", "C"}).residual;
    mono = std::min(mono, tau);
    failures += tau < -1e-9;

    const oracle::CMat rho = oracle::random_density(4, 1 + k % 4, rng);
    const oracle::CMat u = oracle::kron(oracle::random_unitary(2, rng), oracle::random_unitary(2, rng));
    oracle::CMat rotated = u * rho * u.adjoint();
    rotated = 0.5 * (rotated + rotated.adjoint()).eval();
    const double d = std::abs(concurrence_two_qubit(DensityMatrix(oracle::from_eigen(rho), ab)).concurrence -
                              concurrence_two_qubit(DensityMatrix(oracle::from_eigen(rotated), ab)).concurrence);
    lu = std::max(lu, d);
    failures += d > 1e-9;

    const auto w = oracle::random_state(12, rng);
    const StateVector psi(std::vector<Complex>(w.data(), w.data() + 12), mixed);
    const auto full = density_from_pure(psi);
    const oracle::CMat ref = oracle::partial_trace(oracle::projector(w), {2, 3, 2}, {0});
    const auto stepwise = partial_trace(partial_trace(full, {"A", "B"}), {"A"});
    const double pd = std::max((oracle::to_eigen(stepwise.matrix()) - ref).cwiseAbs().maxCoeff(),
                               (oracle::to_eigen(reduced_density(psi, {"A"}).matrix()) - ref).cwiseAbs().maxCoeff());
    ptr = std::max(ptr, pd);
    failures += pd > 1e-12;

    const CMatrix h = oracle::from_eigen(oracle::random_hermitian(2 + k % 5, rng));
    const double s = time(rng), t = time(rng);
    const double gd = max_abs_diff(expm(h, s) * expm(h, t), expm(h, s + t));
    grp = std::max(grp, gd);
    failures += gd > 1e-10;
  }
  return {failures == 0,
          format("failures %g; min tau %.1e, LU drift %.1e, partial-trace %.1e, group law %.1e",
                 failures, mono, lu, std::max(ptr, grp))};
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "window endpoints", window_endpoints},
    {2, "vacuum identities", vacuum_identities},
    {3, "psi sum rule", psi_sum_rule},
    {4, "phi decomposition", phi_decomposition},
    {5, "analytic vs numeric evolution", analytic_vs_numeric_evolution},
    {6, "sudden death implies residual tangle", death_implies_residual},
    {7, "roof vs closed-form C_AC", roof_vs_closed_form},
    {8, "Markovian limit of the mode comb", markovian_limit},
    {9, "randomised property suites", property_suites},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  bool ran = false;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    ran = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d [%s]: %s  %s  (%.2f s)\n", c.number, c.name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    all_pass = all_pass && o.pass;
  }
  if (!ran) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all_pass ? 0 : 1;
}
