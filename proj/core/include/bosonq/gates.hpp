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
#include <span>
#include <vector>

#include "bosonq/statevector.hpp"

namespace bosonq {

/// One gate from the small standard set used for state preparation and
/// OpenQASM lowering.  rz(t) is exp(-i t Z / 2) = diag(e^{-it/2}, e^{it/2}).
struct Gate {
  enum class Kind { H, X, Z, S, Sdg, Rz, Cx };

  Kind kind;
  std::size_t q0 = 0;      // target (single-qubit gates) or control (CX)
  std::size_t q1 = 0;      // CX target
  double angle = 0.0;      // Rz only

  static Gate h(std::size_t q) { return {Kind::H, q, 0, 0.0}; }
  static Gate x(std::size_t q) { return {Kind::X, q, 0, 0.0}; }
  static Gate z(std::size_t q) { return {Kind::Z, q, 0, 0.0}; }
  static Gate s(std::size_t q) { return {Kind::S, q, 0, 0.0}; }
  static Gate sdg(std::size_t q) { return {Kind::Sdg, q, 0, 0.0}; }
  static Gate rz(std::size_t q, double angle) { return {Kind::Rz, q, 0, angle}; }
  static Gate cx(std::size_t control, std::size_t target) {
    return {Kind::Cx, control, target, 0.0};
  }
};

void apply_gate(StateVector& state, const Gate& g);
void apply_gates(StateVector& state, std::span<const Gate> gates);

}  // namespace bosonq
