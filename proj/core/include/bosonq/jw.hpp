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

#include <complex>
#include <utility>
#include <vector>

#include "bosonq/pauli.hpp"

namespace bosonq {

enum class LadderKind { Create, Annihilate };

/// A fermionic creation or annihilation operator on one qubit of the
/// Jordan-Wigner register: Z x ... x Z on every earlier qubit, then the
/// raising or lowering projector |1><0| or |0><1| on the target.
struct LadderOperator {
  std::size_t qubit;
  LadderKind kind;
  std::size_t n_qubits;
};

/// Expands the operator into its two Pauli-string terms:
///   create:     1/2 Z...Z X  -  i/2 Z...Z Y
///   annihilate: 1/2 Z...Z X  +  i/2 Z...Z Y
std::pair<PauliString, PauliString> ladder_to_pauli_pair(
    const LadderOperator& op);

/// Applies the operator matrix-free.  The result is generally unnormalized;
/// creating on an occupied slot or annihilating an empty one yields the zero
/// vector.  The fermionic sign is the parity of occupied qubits before the
/// target.
StateVector apply_ladder(const StateVector& state, const LadderOperator& op);

/// Pauli strings of the Hermitian hopping bilinear
///   coeff * a+_j a_k  +  conj(coeff) * a+_k a_j        (qubits j != k).
/// A real coefficient g yields g/2 (X Z..Z X + Y Z..Z Y); an imaginary part
/// adds the X..Y / Y..X cross terms.  Zero-coefficient strings are dropped.
std::vector<PauliString> hopping_terms(std::size_t j, std::size_t k,
                                       std::complex<double> coeff,
                                       std::size_t n_qubits);

/// Pauli strings of the number operator a+_j a_j = 1/2 I - 1/2 Z_j.
std::vector<PauliString> number_term(std::size_t j, std::size_t n_qubits);

}  // namespace bosonq
