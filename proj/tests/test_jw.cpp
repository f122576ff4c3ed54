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

#include <complex>
#include <random>

#include <doctest.h>

#include "bosonq/errors.hpp"
#include "bosonq/jw.hpp"
#include "oracles.hpp"

using namespace bosonq;
using namespace bosonq::testing;

namespace {

Eigen::MatrixXcd dense_terms(const std::vector<PauliString>& terms,
                             std::size_t n_qubits) {
  const auto dim = Eigen::Index(1) << n_qubits;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (const PauliString& t : terms) sum += dense_pauli(t);
  return sum;
}

}  // namespace

TEST_CASE("creation expands to 1/2 Z..Z X - i/2 Z..Z Y") {
  const auto [x_term, y_term] =
      ladder_to_pauli_pair({.qubit = 2, .kind = LadderKind::Create,
                            .n_qubits = 3});
  CHECK(x_term.str() == "+0.5 ZZX");
  CHECK(y_term.str() == "-0.5i ZZY");

  const auto [ax, ay] =
      ladder_to_pauli_pair({.qubit = 2, .kind = LadderKind::Annihilate,
                            .n_qubits = 3});
  CHECK(ax.str() == "+0.5 ZZX");
  CHECK(ay.str() == "+0.5i ZZY");
}

TEST_CASE("pauli pair sums to the dense ladder matrix") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t q = 0; q < n; ++q) {
      for (LadderKind kind : {LadderKind::Create, LadderKind::Annihilate}) {
        const LadderOperator op{.qubit = q, .kind = kind, .n_qubits = n};
        const auto [a, b] = ladder_to_pauli_pair(op);
        const Eigen::MatrixXcd sum = dense_pauli(a) + dense_pauli(b);
        CHECK(max_abs_diff(sum, dense_ladder(op)) < 1e-15);
      }
    }
  }
}

TEST_CASE("apply_ladder on two qubits carries the parity sign") {
  // Creating on qubit 1 behind an occupied qubit 0 picks up a minus sign.
  const StateVector ten = StateVector::basis_state(2, 0b10);
  const StateVector out = apply_ladder(
      ten, {.qubit = 1, .kind = LadderKind::Create, .n_qubits = 2});
  CHECK(std::abs(out.amp(0b11) - cplx{-1.0, 0.0}) < 1e-15);

  // No occupied qubit in front: plain +1.
  const StateVector vac = StateVector::vacuum(2);
  const StateVector up = apply_ladder(
      vac, {.qubit = 1, .kind = LadderKind::Create, .n_qubits = 2});
  CHECK(std::abs(up.amp(0b01) - cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("creating twice or annihilating vacuum gives the zero vector") {
  const StateVector one = StateVector::basis_state(2, 0b10);
  const StateVector dead = apply_ladder(
      one, {.qubit = 0, .kind = LadderKind::Create, .n_qubits = 2});
  CHECK(dead.norm() < 1e-15);

  const StateVector vac = StateVector::vacuum(2);
  const StateVector dead2 = apply_ladder(
      vac, {.qubit = 0, .kind = LadderKind::Annihilate, .n_qubits = 2});
  CHECK(dead2.norm() < 1e-15);
}

TEST_CASE("apply_ladder matches the dense operator on every basis state") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t q = 0; q < n; ++q) {
      for (LadderKind kind : {LadderKind::Create, LadderKind::Annihilate}) {
        const LadderOperator op{.qubit = q, .kind = kind, .n_qubits = n};
        const Eigen::MatrixXcd dense = dense_ladder(op);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
          const StateVector in = StateVector::basis_state(n, x);
          const Eigen::VectorXcd expected = dense * to_eigen(in);
          CHECK((expected - to_eigen(apply_ladder(in, op)))
                    .cwiseAbs()
                    .maxCoeff() < 1e-15);
        }
      }
    }
  }
}

TEST_CASE("canonical anticommutation relations hold densely") {
  // {a_p, a+_q} = delta_pq, {a_p, a_q} = {a+_p, a+_q} = 0, checked entrywise
  // on registers up to 5 qubits.
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto dim = Eigen::Index(1) << n;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        const Eigen::MatrixXcd ap = dense_ladder(
            {.qubit = p, .kind = LadderKind::Annihilate, .n_qubits = n});
        const Eigen::MatrixXcd aq = dense_ladder(
            {.qubit = q, .kind = LadderKind::Annihilate, .n_qubits = n});
        const Eigen::MatrixXcd cp = dense_ladder(
            {.qubit = p, .kind = LadderKind::Create, .n_qubits = n});
        const Eigen::MatrixXcd cq = dense_ladder(
            {.qubit = q, .kind = LadderKind::Create, .n_qubits = n});

        const Eigen::MatrixXcd mixed = ap * cq + cq * ap;
        const Eigen::MatrixXcd expected = (p == q) ? id : id * 0.0;
        CHECK(max_abs_diff(mixed, expected) < 1e-12);
        CHECK((ap * aq + aq * ap).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((cp * cq + cq * cp).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("real hopping expands to the X..X and Y..Y pair") {
  const auto terms = hopping_terms(0, 2, 1.0, 4);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].str() == "+0.5 XZXI");
  CHECK(terms[1].str() == "+0.5 YZYI");

  const auto adjacent = hopping_terms(0, 1, 1.0, 2);
  REQUIRE(adjacent.size() == 2);
  CHECK(adjacent[0].str() == "+0.5 XX");
  CHECK(adjacent[1].str() == "+0.5 YY");
}

TEST_CASE("imaginary hopping adds the X..Y and Y..X cross terms") {
  const auto terms = hopping_terms(0, 1, cplx{0.0, 1.0}, 2);
  REQUIRE(terms.size() == 2);
  // i a+_0 a_1 - i a+_1 a_0 = 1/2 (Y X - X Y).
  const Eigen::MatrixXcd sum = dense_terms(terms, 2);
  const Eigen::MatrixXcd expected =
      0.5 * (dense_pauli(PauliString("YX")) - dense_pauli(PauliString("XY")));
  CHECK(max_abs_diff(sum, expected) < 1e-15);
}

TEST_CASE("hopping strings equal the dense bilinear for random coefficients") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::size_t j = pick(rng);
    std::size_t k = pick(rng);
    if (j == k) k = (k + 1) % n;
    const cplx g{u(rng), u(rng)};

    const Eigen::MatrixXcd sum = dense_terms(hopping_terms(j, k, g, n), n);
    const Eigen::MatrixXcd bilinear =
        g * dense_ladder({j, LadderKind::Create, n}) *
                dense_ladder({k, LadderKind::Annihilate, n}) +
        std::conj(g) * dense_ladder({k, LadderKind::Create, n}) *
                dense_ladder({j, LadderKind::Annihilate, n});
    CHECK(max_abs_diff(sum, bilinear) < 1e-12);
    CHECK(max_abs_diff(sum, sum.adjoint()) < 1e-12);
  }
}

TEST_CASE("real-coefficient hopping strings commute pairwise") {
  const auto terms = hopping_terms(1, 3, 0.8, 5);
  for (const PauliString& a : terms) {
    for (const PauliString& b : terms) {
      CHECK(commutes(a, b));
    }
  }
}

TEST_CASE("number operator is 1/2 I - 1/2 Z on the target qubit") {
  const auto terms = number_term(1, 3);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].str() == "+0.5 III");
  CHECK(terms[1].str() == "-0.5 IZI");

  const Eigen::MatrixXcd sum = dense_terms(terms, 3);
  const Eigen::MatrixXcd expected =
      dense_ladder({1, LadderKind::Create, 3}) *
      dense_ladder({1, LadderKind::Annihilate, 3});
  CHECK(max_abs_diff(sum, expected) < 1e-15);
}

TEST_CASE("hopping rejects equal qubits and out-of-range indices") {
  CHECK_THROWS_AS(hopping_terms(1, 1, 1.0, 3), ContractViolationError);
  CHECK_THROWS_AS(hopping_terms(0, 3, 1.0, 3), SizeMismatchError);
  CHECK_THROWS_AS(
      apply_ladder(StateVector::vacuum(2),
                   {.qubit = 5, .kind = LadderKind::Create, .n_qubits = 2}),
      SizeMismatchError);
}
