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

#include "bosonq/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "bosonq/jw.hpp"

namespace bosonq {

namespace {

// Parity of a permutation given as a 0-based image vector.
int permutation_sign(const std::vector<std::size_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

void check_assignment(const QubitLayout& layout,
                      const ParticleAssignment& particles) {
  layout.validate();
  if (particles.size() != layout.n_particles) {
    throw SizeMismatchError(
        "assignment lists " + std::to_string(particles.size()) +
        " particles but the layout expects " +
        std::to_string(layout.n_particles));
  }
  for (std::size_t alpha = 0; alpha < particles.size(); ++alpha) {
    const ParticleState& p = particles[alpha];
    if (p.mode < 1 || p.mode > layout.n_modes) {
      throw ContractViolationError("particle " + std::to_string(alpha + 1) +
                                   " sits in mode " + std::to_string(p.mode) +
                                   ", outside 1.." +
                                   std::to_string(layout.n_modes));
    }
    if (p.internal.size() != layout.n_internal) {
      throw SizeMismatchError("particle " + std::to_string(alpha + 1) +
                              " carries " + std::to_string(p.internal.size()) +
                              " internal amplitudes, expected " +
                              std::to_string(layout.n_internal));
    }
    double norm2 = 0.0;
    for (const cplx& c : p.internal) norm2 += std::norm(c);
    if (std::abs(norm2 - 1.0) > 1e-12) {
      throw ContractViolationError(
          "internal state of particle " + std::to_string(alpha + 1) +
          " is not normalized (|r|^2 = " + std::to_string(norm2) + ")");
    }
  }
}

}  // namespace

std::size_t QubitLayout::qubit_index(std::size_t mode, std::size_t mu,
                                     std::size_t s) const {
  if (mode < 1 || mode > n_modes || mu < 1 || mu > n_particles ||
      s >= n_internal) {
    throw SizeMismatchError("qubit label (mode " + std::to_string(mode) +
                            ", copy " + std::to_string(mu) + ", level " +
                            std::to_string(s) + ") outside layout");
  }
  return (mode - 1) * n_particles * n_internal + (mu - 1) * n_internal + s;
}

std::uint64_t QubitLayout::mode_mask(std::size_t mode) const {
  const std::size_t bundle = n_particles * n_internal;
  const std::size_t first = qubit_index(mode, 1, 0);
  std::uint64_t mask = 0;
  for (std::size_t q = first; q < first + bundle; ++q) {
    mask |= std::uint64_t{1} << (n_qubits() - 1 - q);
  }
  return mask;
}

void QubitLayout::validate() const {
  if (n_modes == 0 || n_particles == 0 || n_internal == 0) {
    throw ContractViolationError("layout dimensions must all be positive");
  }
  if (n_qubits() > StateVector::kMaxQubits) {
    throw SizeMismatchError("layout needs " + std::to_string(n_qubits()) +
                            " qubits, above the supported maximum of " +
                            std::to_string(StateVector::kMaxQubits));
  }
}

StateVector antisymmetrized_state(const QubitLayout& layout,
                                  const ParticleAssignment& particles) {
  check_assignment(layout, particles);
  const std::size_t n = layout.n_qubits();
  const std::size_t N = layout.n_particles;
  const std::size_t S = layout.n_internal;

  StateVector acc = StateVector::zero(n);
  std::vector<std::size_t> perm(N);
  std::iota(perm.begin(), perm.end(), 0);  // perm[alpha] = copy label - 1

  do {
    const double sgn = permutation_sign(perm);
    // Expand the internal superposition of every particle.
    std::vector<std::size_t> levels(N, 0);
    while (true) {
      cplx coeff{1.0, 0.0};
      for (std::size_t alpha = 0; alpha < N; ++alpha) {
        coeff *= particles[alpha].internal[levels[alpha]];
      }
      if (coeff != cplx{0.0, 0.0}) {
        // Operator product ordered by ascending particle index; the
        // rightmost factor acts first, so apply alpha = N-1 down to 0.
        StateVector term = StateVector::vacuum(n);
        for (std::size_t alpha = N; alpha-- > 0;) {
          const std::size_t q = layout.qubit_index(
              particles[alpha].mode, perm[alpha] + 1, levels[alpha]);
          term = apply_ladder(term, {q, LadderKind::Create, n});
          if (term.norm() == 0.0) {
            throw CapacityError(
                "fermionic slot (mode " +
                std::to_string(particles[alpha].mode) + ", copy " +
                std::to_string(perm[alpha] + 1) + ", level " +
                std::to_string(levels[alpha]) + ") is already occupied");
          }
        }
        acc.add_scaled(term, sgn * coeff);
      }
      // Next level combination.
      std::size_t alpha = 0;
      while (alpha < N && ++levels[alpha] == S) {
        levels[alpha] = 0;
        ++alpha;
      }
      if (alpha == N) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (acc.norm() < 1e-12) {
    throw ContractViolationError("assignment antisymmetrizes to a null state");
  }
  acc.normalize();
  return acc;
}

std::vector<Gate> antisymmetrize_circuit_n2(const QubitLayout& layout) {
  layout.validate();
  if (layout.n_particles != 2) {
    throw UnsupportedError("the two-particle circuit requires N == 2");
  }
  if (layout.n_modes < 2) {
    throw UnsupportedError("the two-particle circuit requires at least 2 modes");
  }
  const std::size_t a1 = layout.qubit_index(1, 1, 0);
  const std::size_t a2 = layout.qubit_index(1, 2, 0);
  const std::size_t b1 = layout.qubit_index(2, 1, 0);
  const std::size_t b2 = layout.qubit_index(2, 2, 0);
  // Builds (|a1 b2> - |a2 b1>)/sqrt(2): superpose on a1, copy the branch
  // choice into the other three slots, then flip the sign of the a1=0 branch.
  return {
      Gate::h(a1),       Gate::cx(a1, b2), Gate::x(a2),
      Gate::cx(a1, a2),  Gate::x(b1),      Gate::cx(a1, b1),
      Gate::x(a1),       Gate::z(a1),      Gate::x(a1),
  };
}

OutcomeTable decode_outcomes(const StateVector& state,
                             const QubitLayout& layout) {
  layout.validate();
  if (state.n_qubits() != layout.n_qubits()) {
    throw SizeMismatchError("state register does not match layout");
  }
  std::vector<std::uint64_t> masks(layout.n_modes);
  for (std::size_t m = 0; m < layout.n_modes; ++m) {
    masks[m] = layout.mode_mask(m + 1);
  }
  std::map<std::vector<int>, double> table;
  // Seed every total-N pattern so the table is complete even where the state
  // carries no weight; oracle comparisons want the explicit zeros.
  for (const std::vector<int>& occupation :
       enumerate_occupations(layout.n_modes, layout.n_particles)) {
    table[occupation] = 0.0;
  }
  double leakage = 0.0;
  std::vector<int> occ(layout.n_modes);
  for (std::uint64_t x = 0; x < state.size(); ++x) {
    const double p = std::norm(state.amp(x));
    if (p == 0.0) continue;
    if (std::popcount(x) != static_cast<int>(layout.n_particles)) {
      leakage += p;
      continue;
    }
    for (std::size_t m = 0; m < layout.n_modes; ++m) {
      occ[m] = std::popcount(x & masks[m]);
    }
    table[occ] += p;
  }
  OutcomeTable out;
  out.leakage = leakage;
  out.outcomes.reserve(table.size());
  for (auto& [occupation, probability] : table) {
    out.outcomes.push_back({occupation, probability});
  }
  return out;
}

std::vector<std::vector<int>> enumerate_occupations(std::size_t n_modes,
                                                    std::size_t n_particles) {
  std::vector<std::vector<int>> all;
  std::vector<int> current(n_modes, 0);
  auto emit = [&](auto&& self, std::size_t mode, int remaining) -> void {
    if (mode + 1 == n_modes) {
      current[mode] = remaining;
      all.push_back(current);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      current[mode] = k;
      self(self, mode + 1, remaining - k);
    }
  };
  if (n_modes > 0) emit(emit, 0, static_cast<int>(n_particles));
  return all;
}

std::string format_basis_state(std::uint64_t index, const QubitLayout& layout) {
  const std::size_t bundle = layout.n_particles * layout.n_internal;
  std::string out = "|";
  for (std::size_t m = 0; m < layout.n_modes; ++m) {
    if (m > 0) out += ',';
    for (std::size_t b = 0; b < bundle; ++b) {
      const std::size_t q = m * bundle + b;
      const bool set = (index >> (layout.n_qubits() - 1 - q)) & 1;
      out += set ? '1' : '0';
    }
  }
  out += '>';
  return out;
}

std::string format_occupation(const std::vector<int>& occupation) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < occupation.size(); ++i) {
    if (i > 0) out << ',';
    out << occupation[i];
  }
  out << ')';
  return out.str();
}

}  // namespace bosonq
