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

#include "bosonq/gates.hpp"

#include <cmath>
#include <utility>

namespace bosonq {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

}  // namespace

void apply_gate(StateVector& state, const Gate& g) {
  const std::uint64_t size = state.size();
  const std::uint64_t m0 = state.qubit_mask(g.q0);
  switch (g.kind) {
    case Gate::Kind::H: {
      for (std::uint64_t x = 0; x < size; ++x) {
        if (x & m0) continue;
        const cplx a = state.amp(x);
        const cplx b = state.amp(x | m0);
        state.amp(x) = (a + b) * kInvSqrt2;
        state.amp(x | m0) = (a - b) * kInvSqrt2;
      }
      return;
    }
    case Gate::Kind::X: {
      for (std::uint64_t x = 0; x < size; ++x) {
        if (x & m0) continue;
        std::swap(state.amp(x), state.amp(x | m0));
      }
      return;
    }
    case Gate::Kind::Z: {
      for (std::uint64_t x = 0; x < size; ++x) {
        if (x & m0) state.amp(x) = -state.amp(x);
      }
      return;
    }
    case Gate::Kind::S: {
      for (std::uint64_t x = 0; x < size; ++x) {
        if (x & m0) state.amp(x) *= cplx{0.0, 1.0};
      }
      return;
    }
    case Gate::Kind::Sdg: {
      for (std::uint64_t x = 0; x < size; ++x) {
        if (x & m0) state.amp(x) *= cplx{0.0, -1.0};
      }
      return;
    }
    case Gate::Kind::Rz: {
      const cplx lo = std::polar(1.0, -0.5 * g.angle);
      const cplx hi = std::polar(1.0, 0.5 * g.angle);
      for (std::uint64_t x = 0; x < size; ++x) {
        state.amp(x) *= (x & m0) ? hi : lo;
      }
      return;
    }
    case Gate::Kind::Cx: {
      const std::uint64_t mt = state.qubit_mask(g.q1);
      if (m0 == mt) {
        throw ContractViolationError("CX control equals target");
      }
      for (std::uint64_t x = 0; x < size; ++x) {
        if ((x & m0) && !(x & mt)) {
          std::swap(state.amp(x), state.amp(x | mt));
        }
      }
      return;
    }
  }
  throw ContractViolationError("corrupt gate kind");
}

void apply_gates(StateVector& state, std::span<const Gate> gates) {
  for (const Gate& g : gates) apply_gate(state, g);
}

}  // namespace bosonq
