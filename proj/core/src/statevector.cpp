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

#include "bosonq/statevector.hpp"

#include <cmath>
#include <string>

namespace bosonq {

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_(std::uint64_t{1} << n_qubits, cplx{0.0, 0.0}) {
  if (n_qubits > kMaxQubits) {
    throw SizeMismatchError("register of " + std::to_string(n_qubits) +
                            " qubits exceeds the supported maximum of " +
                            std::to_string(kMaxQubits));
  }
}

StateVector::StateVector(std::size_t n_qubits, std::uint64_t fill_index)
    : StateVector(n_qubits) {
  if (fill_index >= size()) {
    throw SizeMismatchError("basis index out of range for register");
  }
  amps_[fill_index] = cplx{1.0, 0.0};
}

StateVector StateVector::zero(std::size_t n_qubits) {
  return StateVector(n_qubits);
}

StateVector StateVector::vacuum(std::size_t n_qubits) {
  return StateVector(n_qubits, 0);
}

StateVector StateVector::basis_state(std::size_t n_qubits,
                                     std::uint64_t index) {
  return StateVector(n_qubits, index);
}

std::uint64_t StateVector::qubit_mask(std::size_t qubit) const {
  if (qubit >= n_qubits_) {
    throw SizeMismatchError("qubit index " + std::to_string(qubit) +
                            " out of range for " + std::to_string(n_qubits_) +
                            "-qubit register");
  }
  return std::uint64_t{1} << (n_qubits_ - 1 - qubit);
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const cplx& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::normalize() {
  const double n = norm();
  if (n < 1e-300) {
    throw ContractViolationError("cannot normalize a null state vector");
  }
  const double inv = 1.0 / n;
  for (cplx& a : amps_) a *= inv;
}

cplx StateVector::inner(const StateVector& other) const {
  require_same_register(*this, other);
  cplx sum{0.0, 0.0};
  for (std::uint64_t i = 0; i < size(); ++i) {
    sum += std::conj(amps_[i]) * other.amps_[i];
  }
  return sum;
}

void StateVector::add_scaled(const StateVector& other, cplx scale) {
  require_same_register(*this, other);
  for (std::uint64_t i = 0; i < size(); ++i) {
    amps_[i] += scale * other.amps_[i];
  }
}

void StateVector::scale(cplx factor) {
  for (cplx& a : amps_) a *= factor;
}

void require_same_register(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw SizeMismatchError("state vectors live on different registers (" +
                            std::to_string(a.n_qubits()) + " vs " +
                            std::to_string(b.n_qubits()) + " qubits)");
  }
}

}  // namespace bosonq
