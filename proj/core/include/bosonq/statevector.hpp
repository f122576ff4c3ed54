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
#include <cstdint>
#include <span>
#include <vector>

#include "bosonq/errors.hpp"

namespace bosonq {

using cplx = std::complex<double>;

/// Dense 2^n amplitude vector over n qubits.
///
/// Qubit 0 is the leftmost label of a ket and occupies the *most significant*
/// bit of the amplitude index, so |10,01> on four qubits is index 0b1001 = 9
/// and kets can be read off directly as binary.
class StateVector {
 public:
  // 2^24 amplitudes = 256 MiB; anything larger is a caller bug at desk scale.
  static constexpr std::size_t kMaxQubits = 24;

  /// All amplitudes zero.  Useful as an accumulator; not a valid state.
  static StateVector zero(std::size_t n_qubits);
  /// |00...0>.
  static StateVector vacuum(std::size_t n_qubits);
  /// Computational basis state with the given index.
  static StateVector basis_state(std::size_t n_qubits, std::uint64_t index);

  std::size_t n_qubits() const { return n_qubits_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_qubits_; }

  cplx& amp(std::uint64_t index) { return amps_[index]; }
  const cplx& amp(std::uint64_t index) const { return amps_[index]; }
  std::span<cplx> amplitudes() { return amps_; }
  std::span<const cplx> amplitudes() const { return amps_; }

  /// Index bit mask of a qubit label (qubit 0 = most significant bit).
  std::uint64_t qubit_mask(std::size_t qubit) const;
  /// Value of a qubit within a basis index.
  bool qubit_bit(std::uint64_t index, std::size_t qubit) const {
    return (index & qubit_mask(qubit)) != 0;
  }

  double norm() const;
  /// Divides by the 2-norm.  Throws ContractViolationError on a null vector.
  void normalize();
  /// <this|other>.
  cplx inner(const StateVector& other) const;

  /// this += scale * other.
  void add_scaled(const StateVector& other, cplx scale);
  void scale(cplx factor);

 private:
  StateVector(std::size_t n_qubits, std::uint64_t fill_index);
  explicit StateVector(std::size_t n_qubits);

  std::size_t n_qubits_;
  std::vector<cplx> amps_;
};

/// Throws SizeMismatchError unless both vectors live on the same register.
void require_same_register(const StateVector& a, const StateVector& b);

}  // namespace bosonq
