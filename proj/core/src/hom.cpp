// Copyright 2026 The bosonq Authors
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

#include "bosonq/hom.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "bosonq/errors.hpp"

namespace bosonq {

cplx GivensParams::zeta() const {
  return std::polar(1.0, gamma) * std::cos(0.5 * theta);
}

cplx GivensParams::xi() const {
  return -std::polar(1.0, phi) * std::sin(0.5 * theta);
}

QubitLayout hom_layout() { return QubitLayout{2, 2, 1}; }

QubitLayout hom_dip_layout() { return QubitLayout{2, 2, 2}; }

OpticalHamiltonian hom_hamiltonian() {
  OpticalHamiltonian h;
  h.phi = Eigen::MatrixXcd::Zero(2, 2);
  h.phi(0, 1) = 1.0;
  h.phi(1, 0) = 1.0;
  h.t = std::numbers::pi / 4.0;
  return h;
}

StateVector givens_gate(const StateVector& state, std::size_t qubit_a,
                        std::size_t qubit_b, const GivensParams& p) {
  if (qubit_a == qubit_b) {
    throw ContractViolationError("givens_gate requires two distinct qubits");
  }
  StateVector out = state;
  const std::uint64_t mask_a = out.qubit_mask(qubit_a);
  const std::uint64_t mask_b = out.qubit_mask(qubit_b);
  const double c = std::cos(0.5 * p.theta);
  const double s = std::sin(0.5 * p.theta);
  const cplx g00 = std::polar(c, p.gamma);
  const cplx g01 = -std::polar(s, p.phi);
  const cplx g10 = std::polar(s, -p.phi);
  const cplx g11 = std::polar(c, -p.gamma);
  for (std::uint64_t x = 0; x < out.size(); ++x) {
    // x runs over the |01> member of each pair (qubit_a clear, qubit_b set).
    if ((x & mask_a) != 0 || (x & mask_b) == 0) continue;
    const std::uint64_t y = (x | mask_a) & ~mask_b;
    const cplx lo = out.amp(x);
    const cplx hi = out.amp(y);
    out.amp(x) = g00 * lo + g01 * hi;
    out.amp(y) = g10 * lo + g11 * hi;
  }
  return out;
}

double coincidence_probability(const OutcomeTable& table) {
  for (const BosonOutcome& outcome : table.outcomes) {
    bool all_single = true;
    for (int count : outcome.occupation) {
      if (count != 1) {
        all_single = false;
        break;
      }
    }
    if (all_single) return outcome.probability;
  }
  return 0.0;
}

HomIdealResult run_hom_ideal() {
  const QubitLayout layout = hom_layout();
  const ParticleAssignment particles = {ParticleState{1, {cplx{1.0, 0.0}}},
                                        ParticleState{2, {cplx{1.0, 0.0}}}};
  const StateVector prepared = antisymmetrized_state(layout, particles);
  StateVector final_state = evolve_exact(prepared, hom_hamiltonian(), layout);
  OutcomeTable table = decode_outcomes(final_state, layout);
  return HomIdealResult{std::move(final_state), std::move(table)};
}

HomDipResult run_hom_dip(const GivensParams& p) {
  const QubitLayout layout = hom_dip_layout();
  ParticleAssignment particles;
  particles.push_back(ParticleState{1, {cplx{1.0, 0.0}, cplx{0.0, 0.0}}});
  particles.push_back(ParticleState{2, {p.zeta(), p.xi()}});
  const StateVector prepared = antisymmetrized_state(layout, particles);
  StateVector final_state = evolve_exact(prepared, hom_hamiltonian(), layout);
  const OutcomeTable table = decode_outcomes(final_state, layout);
  return HomDipResult{std::move(final_state), coincidence_probability(table)};
}

DipCurve sweep_dip(double theta_min, double theta_max, double step, double phi,
                   double gamma) {
  if (!(step > 0.0)) {
    throw ContractViolationError("sweep step must be positive");
  }
  DipCurve curve;
  const double limit = theta_max + step * 1e-6;
  for (int i = 0;; ++i) {
    const double theta = theta_min + static_cast<double>(i) * step;
    if (theta > limit) break;
    const HomDipResult point = run_hom_dip(GivensParams{theta, phi, gamma});
    curve.push_back(DipPoint{theta, point.coincidence});
  }
  return curve;
}

void write_dip_csv(std::ostream& out, const DipCurve& curve) {
  out << "theta,coincidence\n";
  char row[80];
  for (const DipPoint& point : curve) {
    std::snprintf(row, sizeof(row), "%.16f,%.16f\n", point.theta,
                  point.coincidence);
    out << row;
  }
}

}  // namespace bosonq
