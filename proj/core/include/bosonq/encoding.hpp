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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bosonq/gates.hpp"
#include "bosonq/statevector.hpp"

namespace bosonq {

/// Register geometry for N bosons in M optical modes with S internal levels
/// per particle (polarization, arrival time, ...).
///
/// Each boson is represented by N antisymmetrization copies of a fermionic
/// mode register, flattened mode-major: qubit (i, mu, s) with 1-based mode i,
/// 1-based copy label mu, 0-based internal level s sits at index
///   (i - 1) * N * S + (mu - 1) * S + s.
struct QubitLayout {
  std::size_t n_modes = 0;      // M
  std::size_t n_particles = 0;  // N
  std::size_t n_internal = 1;   // S

  std::size_t n_qubits() const { return n_modes * n_particles * n_internal; }
  std::size_t qubit_index(std::size_t mode, std::size_t mu,
                          std::size_t s) const;
  /// Index bits covered by one mode's qubit bundle.
  std::uint64_t mode_mask(std::size_t mode) const;
  void validate() const;
};

/// One boson: which mode it occupies and its internal amplitude vector of
/// length S (must have unit norm).
struct ParticleState {
  std::size_t mode = 1;                 // 1-based
  std::vector<cplx> internal = {cplx{1.0, 0.0}};
};

using ParticleAssignment = std::vector<ParticleState>;

/// Detected photon-number pattern over modes (occupation sums to N) together
/// with its probability.
struct BosonOutcome {
  std::vector<int> occupation;
  double probability = 0.0;
};

/// Decoded measurement distribution.  Basis states whose total excitation
/// differs from N are aggregated into the leakage probability; a
/// number-conserving evolution leaves it at floating-point noise.
struct OutcomeTable {
  std::vector<BosonOutcome> outcomes;  // sorted by occupation
  double leakage = 0.0;
};

/// Builds the encoded N-boson state
///   (1/norm) sum_{perm} sgn(perm) prod_alpha a+_{mode_alpha, r_alpha}^{perm(alpha)} |vac>,
/// expanding each internal amplitude vector distributively and applying the
/// Jordan-Wigner creation operators to the vacuum in a fixed canonical order
/// (operators ordered by ascending particle index, rightmost applied first),
/// so every sign comes out of apply_ladder.  The result is normalized; for
/// bosons bunched into one mode this reproduces the conventional bunched-state
/// normalization.
StateVector antisymmetrized_state(const QubitLayout& layout,
                                  const ParticleAssignment& particles);

/// Short gate sequence mapping |0...0> to the two-particle encoded state with
/// the bosons in modes 1 and 2 (single internal level used).  Requires
/// layout.n_particles == 2 and layout.n_modes >= 2.
std::vector<Gate> antisymmetrize_circuit_n2(const QubitLayout& layout);

/// Counts excited qubits per mode bundle for every basis state and
/// accumulates probabilities per occupation pattern.
OutcomeTable decode_outcomes(const StateVector& state,
                             const QubitLayout& layout);

/// All occupation patterns of n_particles over n_modes, lexicographically
/// ascending.
std::vector<std::vector<int>> enumerate_occupations(std::size_t n_modes,
                                                    std::size_t n_particles);

/// Renders a basis index as a ket with one group of bits per mode, e.g.
/// "|10,01>".
std::string format_basis_state(std::uint64_t index, const QubitLayout& layout);

/// Renders an occupation pattern as "(2,0)".
std::string format_occupation(const std::vector<int>& occupation);

}  // namespace bosonq
