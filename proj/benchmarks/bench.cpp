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

#include <benchmark/benchmark.h>

#include <complex>
#include <numbers>
#include <random>
#include <string>

#include "bosonq/evolve.hpp"
#include "bosonq/hom.hpp"
#include "bosonq/oracle.hpp"
#include "bosonq/pauli.hpp"

namespace {

using bosonq::cplx;

bosonq::StateVector random_state(std::mt19937_64& rng, std::size_t n) {
  bosonq::StateVector state = bosonq::StateVector::zero(n);
  std::normal_distribution<double> g(0.0, 1.0);
  for (std::uint64_t x = 0; x < state.size(); ++x) {
    state.amp(x) = cplx{g(rng), g(rng)};
  }
  state.normalize();
  return state;
}

// One matrix-free rotation sweep across the register, by register size.
void BM_pauli_rotation(benchmark::State& bench) {
  const auto n = static_cast<std::size_t>(bench.range(0));
  std::mt19937_64 rng(1);
  bosonq::StateVector state = random_state(rng, n);
  std::string letters(n, 'I');
  letters.front() = 'X';
  letters.back() = 'X';
  for (std::size_t q = 1; q + 1 < n; ++q) letters[q] = 'Z';
  const bosonq::PauliString axis(letters);
  for (auto _ : bench) {
    bosonq::apply_pauli_rotation_in_place(state, axis, 0.01);
    benchmark::DoNotOptimize(state.amp(0));
  }
  bench.SetComplexityN(static_cast<benchmark::IterationCount>(1) << n);
}

// Ryser permanent, exponential in the matrix dimension.
void BM_permanent(benchmark::State& bench) {
  const auto n = static_cast<Eigen::Index>(bench.range(0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) a(r, c) = cplx{u(rng), u(rng)};
  }
  for (auto _ : bench) {
    benchmark::DoNotOptimize(bosonq::permanent(a));
  }
}

// One point of the distinguishability dip: preparation, four rotations,
// decode, on the 8-qubit register.
void BM_dip_point(benchmark::State& bench) {
  const bosonq::GivensParams p{.theta = 1.0};
  for (auto _ : bench) {
    benchmark::DoNotOptimize(bosonq::run_hom_dip(p).coincidence);
  }
}

// Full evolution of a dense-coupling register on the mesh path.
void BM_evolve_mesh(benchmark::State& bench) {
  const bosonq::QubitLayout layout{.n_modes = 4, .n_particles = 2,
                                   .n_internal = 1};
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd phi(4, 4);
  for (Eigen::Index r = 0; r < 4; ++r) {
    phi(r, r) = cplx{u(rng), 0.0};
    for (Eigen::Index c = r + 1; c < 4; ++c) {
      phi(r, c) = cplx{u(rng), u(rng)};
      phi(c, r) = std::conj(phi(r, c));
    }
  }
  const bosonq::OpticalHamiltonian h{.phi = phi, .t = 0.8};
  const bosonq::StateVector in = bosonq::antisymmetrized_state(
      layout, {bosonq::ParticleState{.mode = 1},
               bosonq::ParticleState{.mode = 3}});
  for (auto _ : bench) {
    benchmark::DoNotOptimize(
        bosonq::evolve_exact(in, h, layout).amp(0));
  }
}

}  // namespace

BENCHMARK(BM_pauli_rotation)->DenseRange(8, 20, 4);
BENCHMARK(BM_permanent)->Arg(4)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_dip_point);
BENCHMARK(BM_evolve_mesh);

BENCHMARK_MAIN();
