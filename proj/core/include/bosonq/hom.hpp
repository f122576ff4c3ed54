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

#pragma once

#include <iosfwd>
#include <vector>

#include "bosonq/encoding.hpp"
#include "bosonq/evolve.hpp"
#include "bosonq/statevector.hpp"

namespace bosonq {

/// Angles of an excitation-preserving two-qubit rotation used to prepare a
/// one-particle internal superposition
///   zeta |s0> + xi |s1>,  zeta = e^{i gamma} cos(theta/2),
///                         xi   = -e^{i phi} sin(theta/2).
/// |zeta|^2 + |xi|^2 = 1 for any angles.
struct GivensParams {
  double theta = 0.0;
  double phi = 0.0;
  double gamma = 0.0;

  cplx zeta() const;
  cplx xi() const;
};

struct DipPoint {
  double theta = 0.0;
  double coincidence = 0.0;
};

using DipCurve = std::vector<DipPoint>;

struct HomIdealResult {
  StateVector final_state;
  OutcomeTable table;
};

struct HomDipResult {
  StateVector final_state;
  double coincidence = 0.0;
};

/// Two ideal bosons in two modes (S = 1, four qubits).
QubitLayout hom_layout();

/// Two partially distinguishable bosons: S = 2, eight qubits.
QubitLayout hom_dip_layout();

/// Balanced two-mode coupler: phi = [[0,1],[1,0]], t = pi/4, so that
/// u = (1/sqrt(2)) [[1, i], [i, 1]].
OpticalHamiltonian hom_hamiltonian();

/// Applies on the {|01>,|10>} subspace of (qubit_a, qubit_b) the block
///   [[e^{i gamma} cos(theta/2), -e^{i phi} sin(theta/2)],
///    [e^{-i phi} sin(theta/2),   e^{-i gamma} cos(theta/2)]]
/// and the identity on |00>, |11>.  Sends |10> (qubit_a excited) to
/// conj(zeta)|10> + xi|01>, so preparing (zeta, xi) from a particle sitting
/// in level s0 takes params (theta, phi, -gamma).
StateVector givens_gate(const StateVector& state, std::size_t qubit_a,
                        std::size_t qubit_b, const GivensParams& p);

/// Coincidence probability: exactly one excitation in each mode bundle.
double coincidence_probability(const OutcomeTable& table);

/// Prepares the encoded |1,1> state, applies the balanced coupler, decodes.
/// The bosons bunch: outcomes (2,0) and (0,2) carry probability 1/2 each.
HomIdealResult run_hom_ideal();

/// Same interferometer with particle 2 carrying internal state (zeta, xi)
/// against particle 1's fixed (1, 0).  Coincidence follows sin^2(theta/2)/2.
HomDipResult run_hom_dip(const GivensParams& p);

/// Evaluates run_hom_dip on the grid theta_min + i * step while the point
/// stays within theta_max (small slack admits the exact endpoint).
/// Throws ContractViolationError on a non-positive step.
DipCurve sweep_dip(double theta_min, double theta_max, double step, double phi,
                   double gamma);

/// Header "theta,coincidence", then one "%.16f,%.16f" row per point.
void write_dip_csv(std::ostream& out, const DipCurve& curve);

}  // namespace bosonq
