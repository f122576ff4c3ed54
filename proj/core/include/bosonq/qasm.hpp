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

#include <string>
#include <vector>

#include "bosonq/encoding.hpp"
#include "bosonq/evolve.hpp"
#include "bosonq/gates.hpp"
#include "bosonq/hom.hpp"

namespace bosonq {

/// A flat gate list plus register size, serializable as OpenQASM 2.0 text.
struct QasmCircuit {
  std::size_t n_qubits = 0;
  std::vector<Gate> gates;
  bool measure_all = true;

  /// OPENQASM 2.0 header, qreg/creg declarations, one instruction per line,
  /// and (when measure_all) a trailing bulk measurement.
  std::string to_string() const;
};

/// Hardware-gate realization of exp(i angle P) for a bare Pauli axis:
/// basis changes (H for X, S-dagger then H for Y), a CNOT parity ladder over
/// the support, Rz(-2 angle) on the last support qubit, then the inverses.
/// The identity axis yields no gates; its global phase is dropped.
/// Throws ContractViolationError unless the axis has coefficient 1 and
/// phase +1 or -1.
std::vector<Gate> lower_pauli_rotation(const PauliRotation& rotation);

/// Exact gate realization of givens_gate(qubit_a, qubit_b, p): an Rz phase
/// screen, the XX and YY half-rotations, and a closing phase screen.
std::vector<Gate> lower_givens(std::size_t qubit_a, std::size_t qubit_b,
                               const GivensParams& p);

/// Gates preparing antisymmetrized_state(layout, particles) from the vacuum,
/// exactly up to a global phase.  Supported shapes:
///   - a single particle (internal vector of any basis level, or any
///     superposition when S == 2),
///   - two particles in modes {1, 2} with per-particle internal vectors as
///     above,
///   - any N bunched into one mode with identical basis internal levels.
/// Anything else throws UnsupportedError.
std::vector<Gate> preparation_circuit(const QubitLayout& layout,
                                      const ParticleAssignment& particles);

/// Full experiment: preparation gates followed by the lowered rotation plan
/// of the Hamiltonian.  Re-simulating the gate list reproduces
/// evolve_exact(antisymmetrized_state(...), h) up to a global phase.
QasmCircuit experiment_circuit(const QubitLayout& layout,
                               const ParticleAssignment& particles,
                               const OpticalHamiltonian& h);

}  // namespace bosonq
