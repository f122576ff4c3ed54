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

#include "bosonq/pauli.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace bosonq {

namespace {

constexpr cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Single-qubit products P_a * P_b = i^phase * P_c, indexed [a][b].
struct MulEntry {
  Pauli letter;
  int i_power;
};

constexpr MulEntry kMulTable[4][4] = {
    // I*I        I*X           I*Y           I*Z
    {{Pauli::I, 0}, {Pauli::X, 0}, {Pauli::Y, 0}, {Pauli::Z, 0}},
    // X*I        X*X           X*Y           X*Z
    {{Pauli::X, 0}, {Pauli::I, 0}, {Pauli::Z, 1}, {Pauli::Y, 3}},
    // Y*I        Y*X           Y*Y           Y*Z
    {{Pauli::Y, 0}, {Pauli::Z, 3}, {Pauli::I, 0}, {Pauli::X, 1}},
    // Z*I        Z*X           Z*Y           Z*Z
    {{Pauli::Z, 0}, {Pauli::Y, 1}, {Pauli::X, 3}, {Pauli::I, 0}},
};

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw ContractViolationError("corrupt Pauli letter");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw ContractViolationError(std::string("invalid Pauli letter '") + c +
                                   "'");
  }
}

PauliString::PauliString(std::size_t n_qubits)
    : letters_(n_qubits, Pauli::I) {}

PauliString::PauliString(std::string_view letters, int i_power,
                         double coefficient)
    : i_power_(((i_power % 4) + 4) % 4), coefficient_(coefficient) {
  letters_.reserve(letters.size());
  for (char c : letters) letters_.push_back(pauli_from_char(c));
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit,
                                Pauli p) {
  PauliString s(n_qubits);
  s.set_letter(qubit, p);
  return s;
}

void PauliString::set_letter(std::size_t qubit, Pauli p) {
  letters_.at(qubit) = p;
}

cplx PauliString::phase() const { return kIPowers[i_power_]; }

PauliString PauliString::scaled(double factor) const {
  PauliString s = *this;
  s.coefficient_ *= factor;
  return s;
}

PauliString PauliString::bare() const {
  PauliString s = *this;
  s.coefficient_ = 1.0;
  s.i_power_ = 0;
  return s;
}

std::uint64_t PauliString::flip_mask() const {
  std::uint64_t mask = 0;
  const std::size_t n = n_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    if (letters_[q] == Pauli::X || letters_[q] == Pauli::Y) {
      mask |= std::uint64_t{1} << (n - 1 - q);
    }
  }
  return mask;
}

std::uint64_t PauliString::sign_mask() const {
  std::uint64_t mask = 0;
  const std::size_t n = n_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    if (letters_[q] == Pauli::Y || letters_[q] == Pauli::Z) {
      mask |= std::uint64_t{1} << (n - 1 - q);
    }
  }
  return mask;
}

std::size_t PauliString::y_count() const {
  std::size_t count = 0;
  for (Pauli p : letters_) count += (p == Pauli::Y);
  return count;
}

bool PauliString::same_letters(const PauliString& other) const {
  return letters_ == other.letters_;
}

bool PauliString::operator==(const PauliString& other) const {
  return letters_ == other.letters_ && i_power_ == other.i_power_ &&
         coefficient_ == other.coefficient_;
}

std::string PauliString::str() const {
  // Fold i^2 into the sign so the scalar prints as one of +c, -c, +ci, -ci.
  double eff = coefficient_;
  if (i_power_ == 2 || i_power_ == 3) eff = -eff;
  std::ostringstream out;
  out << (std::signbit(eff) ? "-" : "+") << std::abs(eff);
  if (i_power_ % 2 == 1) out << "i";
  out << ' ';
  for (Pauli p : letters_) out << pauli_char(p);
  return out.str();
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw SizeMismatchError("cannot multiply Pauli strings of different size");
  }
  std::string letters(a.n_qubits(), 'I');
  int i_power = a.i_power() + b.i_power();
  for (std::size_t q = 0; q < a.n_qubits(); ++q) {
    const MulEntry& e = kMulTable[static_cast<int>(a.letter(q))]
                                 [static_cast<int>(b.letter(q))];
    letters[q] = pauli_char(e.letter);
    i_power += e.i_power;
  }
  return PauliString(letters, i_power, a.coefficient() * b.coefficient());
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw SizeMismatchError("cannot compare Pauli strings of different size");
  }
  std::size_t anticommuting = 0;
  for (std::size_t q = 0; q < a.n_qubits(); ++q) {
    const Pauli x = a.letter(q);
    const Pauli y = b.letter(q);
    if (x != Pauli::I && y != Pauli::I && x != y) ++anticommuting;
  }
  return anticommuting % 2 == 0;
}

StateVector apply_pauli(const StateVector& state, const PauliString& p) {
  if (state.n_qubits() != p.n_qubits()) {
    throw SizeMismatchError("Pauli string size does not match register");
  }
  const std::uint64_t flip = p.flip_mask();
  const std::uint64_t sign = p.sign_mask();
  // Per-index factor: coefficient * i^k * i^{#Y} * (-1)^{popcount(x & sign)}.
  const cplx base = p.coefficient() * p.phase() *
                    kIPowers[p.y_count() % 4];
  StateVector out = StateVector::zero(state.n_qubits());
  for (std::uint64_t x = 0; x < state.size(); ++x) {
    const cplx a = state.amp(x);
    if (a == cplx{0.0, 0.0}) continue;
    const bool negate = std::popcount(x & sign) & 1;
    out.amp(x ^ flip) = negate ? -base * a : base * a;
  }
  return out;
}

void apply_pauli_rotation_in_place(StateVector& state, const PauliString& p,
                                   double angle) {
  if (state.n_qubits() != p.n_qubits()) {
    throw SizeMismatchError("Pauli string size does not match register");
  }
  if (p.coefficient() != 1.0) {
    throw ContractViolationError(
        "rotation requires a Pauli string with coefficient 1; fold scale "
        "factors into the angle");
  }
  if (p.i_power() == 1 || p.i_power() == 3) {
    throw ContractViolationError(
        "rotation requires a Hermitian Pauli string (phase +1 or -1)");
  }
  const double overall = (p.i_power() == 2) ? -1.0 : 1.0;
  const std::uint64_t flip = p.flip_mask();
  const std::uint64_t sign = p.sign_mask();
  const cplx base = overall * kIPowers[p.y_count() % 4];
  const double c = std::cos(angle);
  const cplx is{0.0, std::sin(angle)};

  if (flip == 0) {
    // Diagonal string: pure phase factors per amplitude.
    for (std::uint64_t x = 0; x < state.size(); ++x) {
      const bool negate = std::popcount(x & sign) & 1;
      const cplx diag = negate ? -base : base;
      state.amp(x) *= c + is * diag;
    }
    return;
  }
  for (std::uint64_t x = 0; x < state.size(); ++x) {
    const std::uint64_t y = x ^ flip;
    if (y < x) continue;  // visit each pair once
    // f(z) is the factor with which P maps |z> to |z ^ flip>.
    const bool nx = std::popcount(x & sign) & 1;
    const bool ny = std::popcount(y & sign) & 1;
    const cplx fx = nx ? -base : base;
    const cplx fy = ny ? -base : base;
    const cplx ax = state.amp(x);
    const cplx ay = state.amp(y);
    state.amp(x) = c * ax + is * fy * ay;
    state.amp(y) = c * ay + is * fx * ax;
  }
}

StateVector apply_pauli_rotation(const StateVector& state, const PauliString& p,
                                 double angle) {
  StateVector out = state;
  apply_pauli_rotation_in_place(out, p, angle);
  return out;
}

}  // namespace bosonq
