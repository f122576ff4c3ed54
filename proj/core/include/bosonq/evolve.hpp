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

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "bosonq/encoding.hpp"
#include "bosonq/pauli.hpp"

namespace bosonq {

/// Number-conserving linear-optical Hamiltonian: an M x M Hermitian coupling
/// matrix phi and an interaction time t.  The single-particle scattering
/// matrix is u = exp(i t phi).
struct OpticalHamiltonian {
  Eigen::MatrixXcd phi;
  double t = 0.0;

  std::size_t n_modes() const { return static_cast<std::size_t>(phi.rows()); }
  /// Throws unless phi is square and Hermitian to 1e-12.
  void validate() const;
};

/// One two-mode mixing element of a mesh factorization.  The embedded 2 x 2
/// block on modes (lo, hi) is
///   diag(e^{i post_lo}, e^{i post_hi})
///   * [[cos θ, i sin θ], [i sin θ, cos θ]]
///   * diag(e^{i pre_lo}, e^{i pre_hi}),
/// i.e. phase screens around a balanced-coupler rotation.  Written this way
/// every factor lifts to a mutually commuting set of Pauli rotations.
struct BeamsplitterLayer {
  std::size_t mode_lo = 0;  // 0-based
  std::size_t mode_hi = 1;
  double theta = 0.0;
  double pre_lo = 0.0, pre_hi = 0.0;
  double post_lo = 0.0, post_hi = 0.0;

  Eigen::Matrix2cd block() const;
};

/// Triangular mesh factorization of an M x M unitary:
///   u = L_k ... L_2 L_1 D
/// where D = diag(e^{i input_phases}) acts first and the beamsplitter layers
/// follow in vector order.
struct MeshDecomposition {
  std::size_t n_modes = 0;
  std::vector<double> input_phases;
  std::vector<BeamsplitterLayer> layers;

  /// Multiplies the factors back together (tests and sanity checks).
  Eigen::MatrixXcd reconstruct() const;
};

/// u = exp(i t phi) via Hermitian eigendecomposition.
Eigen::MatrixXcd single_particle_unitary(const OpticalHamiltonian& h);

/// Pauli strings of the full register Hamiltonian t * sum over copies and
/// internal levels of sum_{jk} phi_jk a+_j a_k, with t folded into the
/// coefficients.  The register evolution operator is exp(i * sum of strings).
std::vector<PauliString> qubit_hamiltonian(const OpticalHamiltonian& h,
                                           const QubitLayout& layout);

/// Factorizes a unitary into input phases plus two-mode layers by Givens
/// elimination of the lower triangle.
MeshDecomposition decompose_mesh(const Eigen::MatrixXcd& u);

/// One exact rotation step: exp(i angle P) for a bare Pauli string P.
struct PauliRotation {
  PauliString axis;
  double angle;
};

enum class EvolvePath {
  Auto,              // CommutingStrings when all strings commute, else Mesh
  CommutingStrings,  // sequential rotations straight off qubit_hamiltonian
  Mesh,              // phase screens + two-mode blocks from decompose_mesh
};

bool strings_mutually_commute(std::span<const PauliString> strings);

/// Ordered rotation sequence whose product equals exp(i t H) exactly.
/// CommutingStrings throws ContractViolationError if the Hamiltonian strings
/// do not all commute (sequential rotations would not be exact).
std::vector<PauliRotation> rotation_plan(const OpticalHamiltonian& h,
                                         const QubitLayout& layout,
                                         EvolvePath path = EvolvePath::Auto);

/// Applies exp(i t H) to the state with zero Trotter error, using one
/// amplitude sweep per rotation in the plan.
StateVector evolve_exact(const StateVector& state, const OpticalHamiltonian& h,
                         const QubitLayout& layout,
                         EvolvePath path = EvolvePath::Auto);

}  // namespace bosonq
