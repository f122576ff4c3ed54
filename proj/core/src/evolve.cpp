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

#include "bosonq/evolve.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "bosonq/jw.hpp"

namespace bosonq {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kUnitaryTol = 1e-10;

std::string entry_str(const cplx& z) {
  std::ostringstream out;
  out << '(' << z.real() << ',' << z.imag() << ')';
  return out.str();
}

// Two-mode phase screens and the rotation angle reproducing a 2 x 2 unitary
// as diag(e^{ia}, e^{ib}) * [[cos θ, i sin θ],[i sin θ, cos θ]] *
// diag(e^{ic}, e^{id}) with c fixed to 0.
BeamsplitterLayer factor_block(std::size_t lo, std::size_t hi,
                               const Eigen::Matrix2cd& v) {
  constexpr double eps = 1e-14;
  BeamsplitterLayer layer;
  layer.mode_lo = lo;
  layer.mode_hi = hi;
  const double ca = std::abs(v(0, 0));
  const double sa = std::abs(v(1, 0));
  layer.theta = std::atan2(sa, ca);
  layer.pre_lo = 0.0;
  const bool has_cos = ca > eps;
  const bool has_sin = sa > eps;
  layer.post_lo =
      has_cos ? std::arg(v(0, 0)) : std::arg(v(0, 1)) - M_PI / 2.0;
  layer.post_hi = has_sin ? std::arg(v(1, 0)) - M_PI / 2.0 : std::arg(v(1, 1));
  layer.pre_hi =
      has_sin ? (has_cos ? std::arg(v(0, 1)) - M_PI / 2.0 - layer.post_lo : 0.0)
              : 0.0;
  return layer;
}

// Channel-local hopping rotations implementing the two-mode coupler
// [[cos θ, i sin θ],[i sin θ, cos θ]]: angle θ/2 on X Z..Z X and Y Z..Z Y.
void push_coupler(std::vector<PauliRotation>& plan, std::size_t q_lo,
                  std::size_t q_hi, double theta, std::size_t n) {
  if (theta == 0.0) return;
  for (const PauliString& s : hopping_terms(q_lo, q_hi, 1.0, n)) {
    plan.push_back({s.bare(), theta * s.coefficient()});
  }
}

// Phase e^{i phi n_q} on one register slot: global phase phi/2 plus a Z
// rotation of -phi/2.
void push_mode_phase(std::vector<PauliRotation>& plan, std::size_t q,
                     double phi, std::size_t n) {
  if (phi == 0.0) return;
  plan.push_back({PauliString(n), phi / 2.0});
  plan.push_back({PauliString::single(n, q, Pauli::Z), -phi / 2.0});
}

}  // namespace

void OpticalHamiltonian::validate() const {
  if (phi.rows() != phi.cols() || phi.rows() == 0) {
    throw SizeMismatchError("coupling matrix must be square and non-empty");
  }
  for (Eigen::Index j = 0; j < phi.rows(); ++j) {
    for (Eigen::Index k = j; k < phi.cols(); ++k) {
      const cplx a = phi(j, k);
      const cplx b = std::conj(phi(k, j));
      if (std::abs(a - b) > kHermitianTol) {
        throw ContractViolationError(
            "coupling matrix is not Hermitian: phi[" + std::to_string(j) +
            "][" + std::to_string(k) + "] = " + entry_str(a) +
            " but conj(phi[" + std::to_string(k) + "][" + std::to_string(j) +
            "]) = " + entry_str(b));
      }
    }
  }
}

Eigen::Matrix2cd BeamsplitterLayer::block() const {
  const cplx i{0.0, 1.0};
  Eigen::Matrix2cd rot;
  rot << std::cos(theta), i * std::sin(theta), i * std::sin(theta),
      std::cos(theta);
  Eigen::Matrix2cd pre = Eigen::Matrix2cd::Zero();
  pre(0, 0) = std::polar(1.0, pre_lo);
  pre(1, 1) = std::polar(1.0, pre_hi);
  Eigen::Matrix2cd post = Eigen::Matrix2cd::Zero();
  post(0, 0) = std::polar(1.0, post_lo);
  post(1, 1) = std::polar(1.0, post_hi);
  return post * rot * pre;
}

Eigen::MatrixXcd MeshDecomposition::reconstruct() const {
  const Eigen::Index m = static_cast<Eigen::Index>(n_modes);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    u(j, j) = std::polar(1.0, input_phases[static_cast<std::size_t>(j)]);
  }
  for (const BeamsplitterLayer& layer : layers) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Identity(m, m);
    const Eigen::Matrix2cd b = layer.block();
    const Eigen::Index lo = static_cast<Eigen::Index>(layer.mode_lo);
    const Eigen::Index hi = static_cast<Eigen::Index>(layer.mode_hi);
    e(lo, lo) = b(0, 0);
    e(lo, hi) = b(0, 1);
    e(hi, lo) = b(1, 0);
    e(hi, hi) = b(1, 1);
    u = e * u;
  }
  return u;
}

Eigen::MatrixXcd single_particle_unitary(const OpticalHamiltonian& h) {
  h.validate();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.phi);
  if (solver.info() != Eigen::Success) {
    throw ContractViolationError("eigendecomposition of coupling matrix failed");
  }
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index j = 0; j < lambda.size(); ++j) {
    phases(j) = std::polar(1.0, h.t * lambda(j));
  }
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

std::vector<PauliString> qubit_hamiltonian(const OpticalHamiltonian& h,
                                           const QubitLayout& layout) {
  h.validate();
  layout.validate();
  if (h.n_modes() != layout.n_modes) {
    throw SizeMismatchError("coupling matrix has " +
                            std::to_string(h.n_modes()) +
                            " modes but the layout has " +
                            std::to_string(layout.n_modes));
  }
  const std::size_t n = layout.n_qubits();
  std::vector<PauliString> strings;
  for (std::size_t mu = 1; mu <= layout.n_particles; ++mu) {
    for (std::size_t s = 0; s < layout.n_internal; ++s) {
      for (std::size_t j = 1; j <= layout.n_modes; ++j) {
        const double diag = h.t * h.phi(j - 1, j - 1).real();
        if (diag != 0.0) {
          for (const PauliString& term :
               number_term(layout.qubit_index(j, mu, s), n)) {
            strings.push_back(term.scaled(diag));
          }
        }
        for (std::size_t k = j + 1; k <= layout.n_modes; ++k) {
          const cplx g = h.t * h.phi(j - 1, k - 1);
          if (g == cplx{0.0, 0.0}) continue;
          const std::size_t qj = layout.qubit_index(j, mu, s);
          const std::size_t qk = layout.qubit_index(k, mu, s);
          for (const PauliString& term : hopping_terms(qj, qk, g, n)) {
            strings.push_back(term);
          }
        }
      }
    }
  }
  return strings;
}

MeshDecomposition decompose_mesh(const Eigen::MatrixXcd& u) {
  if (u.rows() != u.cols() || u.rows() == 0) {
    throw SizeMismatchError("mesh decomposition needs a square matrix");
  }
  const Eigen::Index m = u.rows();
  const double defect =
      (u * u.adjoint() - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
  if (defect > kUnitaryTol) {
    throw ContractViolationError(
        "matrix is not unitary (max |u u+ - 1| = " + std::to_string(defect) +
        ")");
  }

  MeshDecomposition mesh;
  mesh.n_modes = static_cast<std::size_t>(m);
  Eigen::MatrixXcd w = u;
  // Givens elimination of the lower triangle: G_last ... G_1 w = D, hence
  // u = G_1^+ ... G_last^+ D.  Layers are stored in application order, i.e.
  // reversed, after the diagonal.
  std::vector<BeamsplitterLayer> elim;
  for (Eigen::Index c = 0; c < m - 1; ++c) {
    for (Eigen::Index r = m - 1; r > c; --r) {
      const cplx x = w(r - 1, c);
      const cplx y = w(r, c);
      if (std::abs(y) < 1e-15) continue;
      const double norm = std::sqrt(std::norm(x) + std::norm(y));
      Eigen::Matrix2cd g;
      g << std::conj(x) / norm, std::conj(y) / norm, -y / norm, x / norm;
      w.block(r - 1, 0, 2, m) = g * w.block(r - 1, 0, 2, m);
      w(r, c) = 0.0;  // eliminated by construction
      elim.push_back(factor_block(static_cast<std::size_t>(r - 1),
                                  static_cast<std::size_t>(r),
                                  g.adjoint()));
    }
  }
  mesh.input_phases.resize(static_cast<std::size_t>(m));
  for (Eigen::Index j = 0; j < m; ++j) {
    mesh.input_phases[static_cast<std::size_t>(j)] = std::arg(w(j, j));
  }
  mesh.layers.assign(elim.rbegin(), elim.rend());
  return mesh;
}

bool strings_mutually_commute(std::span<const PauliString> strings) {
  for (std::size_t a = 0; a < strings.size(); ++a) {
    for (std::size_t b = a + 1; b < strings.size(); ++b) {
      if (!commutes(strings[a], strings[b])) return false;
    }
  }
  return true;
}

std::vector<PauliRotation> rotation_plan(const OpticalHamiltonian& h,
                                         const QubitLayout& layout,
                                         EvolvePath path) {
  std::vector<PauliString> strings = qubit_hamiltonian(h, layout);
  const bool all_commute = strings_mutually_commute(strings);
  if (path == EvolvePath::Auto) {
    path = all_commute ? EvolvePath::CommutingStrings : EvolvePath::Mesh;
  }

  std::vector<PauliRotation> plan;
  if (path == EvolvePath::CommutingStrings) {
    if (!all_commute) {
      throw ContractViolationError(
          "Hamiltonian strings do not all commute; sequential rotations "
          "would not be exact");
    }
    plan.reserve(strings.size());
    for (const PauliString& s : strings) {
      const double sign = (s.i_power() == 2) ? -1.0 : 1.0;
      plan.push_back({s.bare(), sign * s.coefficient()});
    }
    return plan;
  }

  // Mesh path: lift u = exp(i t phi) factor by factor.  The second-quantized
  // lift is a group homomorphism that fixes the vacuum, so composing the
  // lifted factors reproduces exp(i t H) exactly, global phase included.
  const std::size_t n = layout.n_qubits();
  const MeshDecomposition mesh = decompose_mesh(single_particle_unitary(h));
  for (std::size_t mu = 1; mu <= layout.n_particles; ++mu) {
    for (std::size_t s = 0; s < layout.n_internal; ++s) {
      for (std::size_t mode = 1; mode <= mesh.n_modes; ++mode) {
        push_mode_phase(plan, layout.qubit_index(mode, mu, s),
                        mesh.input_phases[mode - 1], n);
      }
      for (const BeamsplitterLayer& layer : mesh.layers) {
        const std::size_t q_lo =
            layout.qubit_index(layer.mode_lo + 1, mu, s);
        const std::size_t q_hi =
            layout.qubit_index(layer.mode_hi + 1, mu, s);
        push_mode_phase(plan, q_lo, layer.pre_lo, n);
        push_mode_phase(plan, q_hi, layer.pre_hi, n);
        push_coupler(plan, q_lo, q_hi, layer.theta, n);
        push_mode_phase(plan, q_lo, layer.post_lo, n);
        push_mode_phase(plan, q_hi, layer.post_hi, n);
      }
    }
  }
  return plan;
}

StateVector evolve_exact(const StateVector& state, const OpticalHamiltonian& h,
                         const QubitLayout& layout, EvolvePath path) {
  if (state.n_qubits() != layout.n_qubits()) {
    throw SizeMismatchError("state register does not match layout");
  }
  StateVector out = state;
  for (const PauliRotation& rot : rotation_plan(h, layout, path)) {
    apply_pauli_rotation_in_place(out, rot.axis, rot.angle);
  }
  return out;
}

}  // namespace bosonq
