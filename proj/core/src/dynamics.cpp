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

#include "tanglesim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tanglesim/error.hpp"
#include "tanglesim/linalg.hpp"

namespace tanglesim {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_normalized(Complex alpha, Complex beta) {
  const double n = std::norm(alpha) + std::norm(beta);
  if (std::abs(n - 1.0) > 1e-10)
    throw Error("alpha/beta: |alpha|^2 + |beta|^2 = " + std::to_string(n) + ", expected 1");
}

double g_of(const BathSpec& bath) {
  const auto* single = std::get_if<SingleMode>(&bath);
  if (single == nullptr) throw Error("bath: Jaynes-Cummings scenarios need a single-mode bath");
  return single->g;
}

CMatrix lowering(std::size_t dim) {
  CMatrix c(dim, dim);
  for (std::size_t n = 1; n < dim; ++n) c(n - 1, n) = std::sqrt(static_cast<double>(n));
  return c;
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::JCVacuum: return "jc-vacuum";
    case Scenario::JCOnePhoton: return "jc-one-photon";
    case Scenario::DoubleJCPsi: return "double-jc-psi";
    case Scenario::DoubleJCPhi: return "double-jc-phi";
  }
  return "unknown";
}

std::optional<Scenario> parse_scenario(const std::string& text) {
  if (text == "1" || text == "jc-vacuum") return Scenario::JCVacuum;
  if (text == "2" || text == "jc-one-photon") return Scenario::JCOnePhoton;
  if (text == "3" || text == "double-jc-psi") return Scenario::DoubleJCPsi;
  if (text == "4" || text == "double-jc-phi") return Scenario::DoubleJCPhi;
  return std::nullopt;
}

bool is_double_jc(Scenario s) {
  return s == Scenario::DoubleJCPsi || s == Scenario::DoubleJCPhi;
}

void ScenarioSpec::validate() const {
  require_normalized(alpha, beta);
  tanglesim::validate(bath);
  if (!is_double_jc(scenario)) {
    (void)g_of(bath);
    if (grid_kind != GridKind::Time) throw Error("grid: scenario " + to_string(scenario) +
                                                 " requires a gt time grid");
  }
  for (double x : time_grid) {
    if (!std::isfinite(x)) throw Error("grid: non-finite grid value");
    if (grid_kind == GridKind::Z && (x < 0.0 || x > 1.0))
      throw Error("grid: z values must lie in [0, 1]");
    if (grid_kind == GridKind::Time && x < 0.0) throw Error("grid: times must be >= 0");
  }
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  if (count < 2) throw Error("grid: need at least 2 points");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  out.back() = hi;
  return out;
}

StateVector evolve_jc_vacuum(double t, Complex alpha, Complex beta, double g) {
  require_normalized(alpha, beta);
  const double gt = g * t;
  SubsystemLayout layout{{"A", 2}, {"B", 2}, {"C", 2}};
  std::vector<Complex> amps(8, Complex{0.0, 0.0});
  amps[layout.flat_index({kUp, kDown, 0})] = beta * std::cos(gt);
  amps[layout.flat_index({kDown, kUp, 0})] = alpha;
  amps[layout.flat_index({kDown, kDown, 1})] = -kI * beta * std::sin(gt);
  return StateVector(std::move(amps), std::move(layout));
}

StateVector evolve_jc_one_photon(double t, Complex alpha, Complex beta, double g) {
  require_normalized(alpha, beta);
  const double gt = g * t;
  const double r2gt = std::numbers::sqrt2 * gt;
  SubsystemLayout layout{{"A", 2}, {"B", 2}, {"C", 3}};
  std::vector<Complex> amps(12, Complex{0.0, 0.0});
  amps[layout.flat_index({kUp, kDown, 1})] = beta * std::cos(r2gt);
  amps[layout.flat_index({kDown, kUp, 1})] = alpha * std::cos(gt);
  amps[layout.flat_index({kUp, kUp, 0})] = -kI * alpha * std::sin(gt);
  amps[layout.flat_index({kDown, kDown, 2})] = -kI * beta * std::sin(r2gt);
  return StateVector(std::move(amps), std::move(layout));
}

StateVector evolve_double_jc(const AmplitudePair& amp, Complex alpha, Complex beta,
                             DoubleJcBranch branch) {
  require_normalized(alpha, beta);
  if (std::abs(std::norm(amp.xi) + std::norm(amp.chi) - 1.0) > 1e-9)
    throw Error("amplitude pair: |xi|^2 + |chi|^2 deviates from 1");
  // Two-qubit factors over (atom, collective mode).
  const std::array<Complex, 4> gamma{amp.xi, 0.0, 0.0, amp.chi};  // xi|u0> + chi|d1>
  const std::array<Complex, 4> ground{0.0, 0.0, 1.0, 0.0};        // |d0>
  const auto& first = gamma;
  const auto& second = branch == DoubleJcBranch::Psi ? ground : gamma;

  std::vector<Complex> amps(16, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Complex excited_term = branch == DoubleJcBranch::Psi
                                       ? beta * first[i] * second[j] + alpha * ground[i] * gamma[j]
                                       : beta * first[i] * second[j] + alpha * ground[i] * ground[j];
      amps[i * 4 + j] = excited_term;
    }
  StateVector acbd(std::move(amps), SubsystemLayout{{"A", 2}, {"C", 2}, {"B", 2}, {"D", 2}});
  return reorder_subsystems(acbd, {"A", "B", "C", "D"});
}

StateVector evolve_double_jc(double x, GridKind kind, Complex alpha, Complex beta,
                             const BathSpec& bath, DoubleJcBranch branch) {
  const AmplitudePair amp =
      kind == GridKind::Z ? amplitude_pair_from_z(x, bath) : amplitude_pair(x, bath);
  return evolve_double_jc(amp, alpha, beta, branch);
}

StateVector evolve_scenario(const ScenarioSpec& spec, double x) {
  switch (spec.scenario) {
    case Scenario::JCVacuum: return evolve_jc_vacuum(x, spec.alpha, spec.beta, g_of(spec.bath));
    case Scenario::JCOnePhoton:
      return evolve_jc_one_photon(x, spec.alpha, spec.beta, g_of(spec.bath));
    case Scenario::DoubleJCPsi:
      return evolve_double_jc(x, spec.grid_kind, spec.alpha, spec.beta, spec.bath,
                              DoubleJcBranch::Psi);
    case Scenario::DoubleJCPhi:
      return evolve_double_jc(x, spec.grid_kind, spec.alpha, spec.beta, spec.bath,
                              DoubleJcBranch::Phi);
  }
  throw Error("unknown scenario");
}

ClosedForms closed_form_jc(Scenario s, double gt, Complex alpha, Complex beta) {
  const double a2 = std::norm(alpha);
  const double b2 = std::norm(beta);
  const double c0 = 2.0 * std::abs(alpha * beta);
  ClosedForms out;
  if (s == Scenario::JCVacuum) {
    const double c = std::cos(gt);
    const double sn = std::sin(gt);
    out.pairs["AB"] = c0 * std::abs(c);
    out.pairs["AC"] = b2 * std::abs(std::sin(2.0 * gt));
    out.pairs["BC"] = c0 * std::abs(sn);
    out.focus_rest = 2.0 * std::sqrt(b2 * c * c * (a2 + b2 * sn * sn));
  } else if (s == Scenario::JCOnePhoton) {
    const double r2gt = std::numbers::sqrt2 * gt;
    const double c1 = std::cos(gt), s1 = std::sin(gt);
    const double c2 = std::cos(r2gt), s2 = std::sin(r2gt);
    out.pairs["AB"] = c0 * std::max(0.0, std::abs(c1 * c2) - std::abs(s1 * s2));
    out.pairs["AC"] =
        std::abs(a2 * std::abs(std::sin(2.0 * gt)) - b2 * std::abs(std::sin(2.0 * r2gt)));
    out.focus_rest =
        2.0 * std::sqrt((a2 * s1 * s1 + b2 * c2 * c2) * (a2 * c1 * c1 + b2 * s2 * s2));
  } else {
    throw Error("closed_form_jc: not a Jaynes-Cummings scenario");
  }
  const double ab = out.pairs["AB"], ac = out.pairs["AC"];
  out.residual = out.focus_rest * out.focus_rest - ab * ab - ac * ac;
  return out;
}

ClosedForms closed_form_double_jc(Scenario s, const AmplitudePair& amp, Complex alpha,
                                  Complex beta) {
  const double a = std::abs(alpha);
  const double b = std::abs(beta);
  const double xi = std::abs(amp.xi);
  const double chi = std::abs(amp.chi);
  const double c0 = 2.0 * a * b;
  ClosedForms out;
  if (s == Scenario::DoubleJCPsi) {
    out.pairs["AB"] = c0 * xi * xi;
    out.pairs["AC"] = 2.0 * b * b * xi * chi;
    out.pairs["AD"] = c0 * xi * chi;
    out.pairs["BC"] = c0 * xi * chi;
    out.pairs["BD"] = 2.0 * a * a * xi * chi;
    out.pairs["CD"] = c0 * chi * chi;
    out.focus_rest = 2.0 * b * xi * std::sqrt(a * a + b * b * chi * chi);
  } else if (s == Scenario::DoubleJCPhi) {
    out.pairs["AB"] = 2.0 * b * xi * xi * std::max(0.0, a - b * chi * chi);
    out.pairs["AD"] = 2.0 * b * xi * chi * std::max(0.0, a - b * xi * chi);
    out.pairs["AC"] = 2.0 * b * b * xi * chi;
    out.focus_rest = 2.0 * b * xi * std::sqrt(b * b * chi * chi + a * a);
    const double ac = out.pairs["AC"];
    out.focus_rest_sq_split = ac * ac + c0 * c0 * xi * xi;
  } else {
    throw Error("closed_form_double_jc: not a double Jaynes-Cummings scenario");
  }
  const double ab = out.pairs["AB"], ac = out.pairs["AC"], ad = out.pairs["AD"];
  out.residual = out.focus_rest * out.focus_rest - (ab * ab + ac * ac + ad * ad);
  return out;
}

ClosedForms closed_form_concurrences(const ScenarioSpec& spec, double x) {
  spec.validate();
  if (!is_double_jc(spec.scenario))
    return closed_form_jc(spec.scenario, g_of(spec.bath) * x, spec.alpha, spec.beta);
  const AmplitudePair amp = spec.grid_kind == GridKind::Z ? amplitude_pair_from_z(x, spec.bath)
                                                         : amplitude_pair(x, spec.bath);
  return closed_form_double_jc(spec.scenario, amp, spec.alpha, spec.beta);
}

Hamiltonian build_hamiltonian(const BathSpec& bath, std::size_t cavity_truncation) {
  validate(bath);
  if (const auto* single = std::get_if<SingleMode>(&bath)) {
    if (cavity_truncation < 2) throw Error("build_hamiltonian: cavity truncation must be >= 2");
    CMatrix sigma_minus(2, 2);
    sigma_minus(kDown, kUp) = 1.0;
    const CMatrix c = lowering(cavity_truncation);
    CMatrix h = kron(sigma_minus, c.adjoint()) + kron(sigma_minus.adjoint(), c);
    h *= Complex{single->g, 0.0};
    return {std::move(h), SubsystemLayout{{"A", 2}, {"C", cavity_truncation}}};
  }
  if (const auto* comb = std::get_if<Comb>(&bath)) {
    // Frame rotating at the atomic frequency: ground and |up, vac> sit at 0,
    // |down, 1_k> at the mode detuning.
    const std::size_t n = comb->modes + 2;
    CMatrix h(n, n);
    for (std::size_t k = 0; k < comb->modes; ++k) {
      h(k + 2, k + 2) = comb->detuning(k);
      h(1, k + 2) = comb->g;
      h(k + 2, 1) = comb->g;
    }
    return {std::move(h), SubsystemLayout{{"AC", n}}};
  }
  throw Error("build_hamiltonian: the Markovian limit has no finite Hamiltonian");
}

Hamiltonian jc_three_body_hamiltonian(double g, std::size_t cavity_truncation) {
  const Hamiltonian ac = build_hamiltonian(SingleMode{g}, cavity_truncation);
  SubsystemLayout full{{"A", 2}, {"B", 2}, {"C", cavity_truncation}};
  return {embed_operator(ac.matrix, ac.layout, full), full};
}

Hamiltonian double_jc_hamiltonian(double g, std::size_t cavity_truncation) {
  const Hamiltonian local = build_hamiltonian(SingleMode{g}, cavity_truncation);
  SubsystemLayout full{{"A", 2}, {"B", 2}, {"C", cavity_truncation}, {"D", cavity_truncation}};
  SubsystemLayout bd{{"B", 2}, {"D", cavity_truncation}};
  CMatrix h = embed_operator(local.matrix, local.layout, full) +
              embed_operator(local.matrix, bd, full);
  return {std::move(h), full};
}

CMatrix excitation_operator(const SubsystemLayout& layout, const std::vector<std::string>& atoms,
                            const std::vector<std::string>& modes) {
  std::vector<std::size_t> atom_pos, mode_pos;
  for (const auto& l : atoms) atom_pos.push_back(layout.index_of(l));
  for (const auto& l : modes) mode_pos.push_back(layout.index_of(l));
  CMatrix n(layout.total_dim(), layout.total_dim());
  for (std::size_t flat = 0; flat < layout.total_dim(); ++flat) {
    const auto d = layout.digits(flat);
    double count = 0.0;
    for (auto p : atom_pos) count += d[p] == kUp ? 1.0 : 0.0;
    for (auto p : mode_pos) count += static_cast<double>(d[p]);
    n(flat, flat) = count;
  }
  return n;
}

StateVector jc_initial_state(Complex alpha, Complex beta, std::size_t photons,
                             std::size_t cavity_truncation) {
  require_normalized(alpha, beta);
  if (photons >= cavity_truncation)
    throw Error("cavity truncation " + std::to_string(cavity_truncation) + " cannot hold " +
                std::to_string(photons) + " photons");
  SubsystemLayout layout{{"A", 2}, {"B", 2}, {"C", cavity_truncation}};
  std::vector<Complex> amps(layout.total_dim(), Complex{0.0, 0.0});
  amps[layout.flat_index({kUp, kDown, photons})] = beta;
  amps[layout.flat_index({kDown, kUp, photons})] = alpha;
  return StateVector(std::move(amps), std::move(layout));
}

StateVector double_jc_initial_state(Complex alpha, Complex beta, DoubleJcBranch branch,
                                    std::size_t cavity_truncation) {
  require_normalized(alpha, beta);
  if (cavity_truncation < 2) throw Error("cavity truncation must be >= 2");
  SubsystemLayout layout{{"A", 2}, {"B", 2}, {"C", cavity_truncation}, {"D", cavity_truncation}};
  std::vector<Complex> amps(layout.total_dim(), Complex{0.0, 0.0});
  if (branch == DoubleJcBranch::Psi) {
    amps[layout.flat_index({kUp, kDown, 0, 0})] = beta;
    amps[layout.flat_index({kDown, kUp, 0, 0})] = alpha;
  } else {
    amps[layout.flat_index({kUp, kUp, 0, 0})] = beta;
    amps[layout.flat_index({kDown, kDown, 0, 0})] = alpha;
  }
  return StateVector(std::move(amps), std::move(layout));
}

StateVector evolve_numeric(const Hamiltonian& h, const StateVector& psi0, double t) {
  if (!(h.layout == psi0.layout())) throw Error("evolve_numeric: layouts differ");
  return StateVector(Propagator(h.matrix).apply(psi0.amplitudes(), t), psi0.layout());
}

}  // namespace tanglesim
