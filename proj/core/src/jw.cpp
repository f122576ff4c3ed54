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

#include "bosonq/jw.hpp"

#include <bit>
#include <string>

namespace bosonq {

namespace {

void check_qubit(std::size_t qubit, std::size_t n_qubits) {
  if (qubit >= n_qubits) {
    throw SizeMismatchError("ladder qubit " + std::to_string(qubit) +
                            " out of range for " + std::to_string(n_qubits) +
                            "-qubit register");
  }
}

PauliString z_prefixed(std::size_t n_qubits, std::size_t qubit, Pauli tail,
                       int i_power, double coefficient) {
  std::string letters(n_qubits, 'I');
  for (std::size_t q = 0; q < qubit; ++q) letters[q] = 'Z';
  letters[qubit] = pauli_char(tail);
  return PauliString(letters, i_power, coefficient);
}

// Letters for a two-site hopping string: Z on every qubit strictly between
// lo and hi, the given letters at lo and hi, identity elsewhere.
PauliString bridge(std::size_t n_qubits, std::size_t lo, std::size_t hi,
                   Pauli at_lo, Pauli at_hi, double coefficient) {
  std::string letters(n_qubits, 'I');
  letters[lo] = pauli_char(at_lo);
  letters[hi] = pauli_char(at_hi);
  for (std::size_t q = lo + 1; q < hi; ++q) letters[q] = 'Z';
  return PauliString(letters, 0, coefficient);
}

}  // namespace

std::pair<PauliString, PauliString> ladder_to_pauli_pair(
    const LadderOperator& op) {
  check_qubit(op.qubit, op.n_qubits);
  // |1><0| = (X - iY)/2 and |0><1| = (X + iY)/2.
  const int y_power = (op.kind == LadderKind::Create) ? 3 : 1;
  return {z_prefixed(op.n_qubits, op.qubit, Pauli::X, 0, 0.5),
          z_prefixed(op.n_qubits, op.qubit, Pauli::Y, y_power, 0.5)};
}

StateVector apply_ladder(const StateVector& state, const LadderOperator& op) {
  check_qubit(op.qubit, op.n_qubits);
  if (state.n_qubits() != op.n_qubits) {
    throw SizeMismatchError("ladder register size does not match state");
  }
  const std::uint64_t target = state.qubit_mask(op.qubit);
  // All index bits above the target bit belong to earlier qubit labels.
  const std::uint64_t before = ~((target << 1) - 1);
  const bool create = (op.kind == LadderKind::Create);
  StateVector out = StateVector::zero(state.n_qubits());
  for (std::uint64_t x = 0; x < state.size(); ++x) {
    const cplx a = state.amp(x);
    if (a == cplx{0.0, 0.0}) continue;
    const bool occupied = (x & target) != 0;
    if (occupied == create) continue;  // maps this component to zero
    const bool negate = std::popcount(x & before) & 1;
    out.amp(x ^ target) = negate ? -a : a;
  }
  return out;
}

std::vector<PauliString> hopping_terms(std::size_t j, std::size_t k,
                                       std::complex<double> coeff,
                                       std::size_t n_qubits) {
  check_qubit(j, n_qubits);
  check_qubit(k, n_qubits);
  if (j == k) {
    throw ContractViolationError(
        "hopping requires two distinct qubits; use number_term for j == k");
  }
  std::size_t lo = j, hi = k;
  if (lo > hi) {
    std::swap(lo, hi);
    coeff = std::conj(coeff);  // the bilinear is Hermitian as a whole
  }
  const double re = coeff.real();
  const double im = coeff.imag();
  std::vector<PauliString> terms;
  if (re != 0.0) {
    terms.push_back(bridge(n_qubits, lo, hi, Pauli::X, Pauli::X, 0.5 * re));
    terms.push_back(bridge(n_qubits, lo, hi, Pauli::Y, Pauli::Y, 0.5 * re));
  }
  if (im != 0.0) {
    terms.push_back(bridge(n_qubits, lo, hi, Pauli::X, Pauli::Y, -0.5 * im));
    terms.push_back(bridge(n_qubits, lo, hi, Pauli::Y, Pauli::X, 0.5 * im));
  }
  return terms;
}

std::vector<PauliString> number_term(std::size_t j, std::size_t n_qubits) {
  check_qubit(j, n_qubits);
  std::vector<PauliString> terms;
  terms.push_back(PauliString(n_qubits).scaled(0.5));
  terms.push_back(PauliString::single(n_qubits, j, Pauli::Z).scaled(-0.5));
  return terms;
}

}  // namespace bosonq
