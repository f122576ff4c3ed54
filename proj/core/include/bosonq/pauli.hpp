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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bosonq/statevector.hpp"

namespace bosonq {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// A tensor product of single-qubit Pauli operators with a scalar prefactor.
///
/// The represented operator is coefficient * i^i_power * P_0 x P_1 x ... with
/// P_0 acting on qubit 0 (the most significant index bit).  The phase lives in
/// the group {+1, +i, -1, -i} and is tracked separately from the real
/// coefficient so products stay exact.
class PauliString {
 public:
  /// Identity string I...I with coefficient 1.
  explicit PauliString(std::size_t n_qubits);
  /// Parses letters like "XZXI"; letter 0 acts on qubit 0.
  explicit PauliString(std::string_view letters, int i_power = 0,
                       double coefficient = 1.0);
  /// Single non-identity letter on one qubit of an otherwise identity string.
  static PauliString single(std::size_t n_qubits, std::size_t qubit, Pauli p);

  std::size_t n_qubits() const { return letters_.size(); }
  Pauli letter(std::size_t qubit) const { return letters_.at(qubit); }
  void set_letter(std::size_t qubit, Pauli p);

  /// Phase exponent k of i^k, always in {0, 1, 2, 3}.
  int i_power() const { return i_power_; }
  cplx phase() const;
  double coefficient() const { return coefficient_; }

  /// Copy with the coefficient multiplied by a real factor.
  PauliString scaled(double factor) const;
  /// Copy with coefficient 1 and phase +1 (the bare tensor of letters).
  PauliString bare() const;

  /// Index bits flipped by this string (qubits carrying X or Y).
  std::uint64_t flip_mask() const;
  /// Index bits that contribute a sign (qubits carrying Y or Z).
  std::uint64_t sign_mask() const;
  std::size_t y_count() const;

  bool same_letters(const PauliString& other) const;
  bool operator==(const PauliString& other) const;

  /// Renders as sign, coefficient, optional "i", space, letters: "+0.5 XZXI".
  std::string str() const;

 private:
  std::vector<Pauli> letters_;
  int i_power_ = 0;
  double coefficient_ = 1.0;
};

/// Product a*b with exact phase bookkeeping.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

/// True iff the bare strings commute.  Two Pauli strings commute exactly when
/// the number of positions where both letters are non-identity and different
/// is even.  Coefficients and phases are irrelevant.
bool commutes(const PauliString& a, const PauliString& b);

/// Applies the full operator (coefficient and phase included) to a state.
StateVector apply_pauli(const StateVector& state, const PauliString& p);

/// Applies exp(i * angle * P) for a bare Pauli string P (coefficient 1, phase
/// +1 or -1), in a single amplitude sweep:
///   exp(i t P)|psi> = cos(t)|psi> + i sin(t) P|psi>.
StateVector apply_pauli_rotation(const StateVector& state, const PauliString& p,
                                 double angle);
void apply_pauli_rotation_in_place(StateVector& state, const PauliString& p,
                                   double angle);

}  // namespace bosonq
