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

#include "bosonq/qasm.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "bosonq/errors.hpp"

namespace bosonq {

namespace {

std::string format_angle(double angle) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", angle);
  return buf;
}

void emit_gate(std::ostringstream& out, const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::H:
      out << "h q[" << g.q0 << "];\n";
      break;
    case Gate::Kind::X:
      out << "x q[" << g.q0 << "];\n";
      break;
    case Gate::Kind::Z:
      out << "z q[" << g.q0 << "];\n";
      break;
    case Gate::Kind::S:
      out << "s q[" << g.q0 << "];\n";
      break;
    case Gate::Kind::Sdg:
      out << "sdg q[" << g.q0 << "];\n";
      break;
    case Gate::Kind::Rz:
      out << "rz(" << format_angle(g.angle) << ") q[" << g.q0 << "];\n";
      break;
    case Gate::Kind::Cx:
      out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
      break;
  }
}

}  // namespace

std::string QasmCircuit::to_string() const {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << n_qubits << "];\n";
  out << "creg c[" << n_qubits << "];\n";
  for (const Gate& g : gates) emit_gate(out, g);
  if (measure_all) out << "measure q -> c;\n";
  return out.str();
}

std::vector<Gate> lower_pauli_rotation(const PauliRotation& rotation) {
  const PauliString& axis = rotation.axis;
  if (axis.coefficient() != 1.0 ||
      (axis.i_power() != 0 && axis.i_power() != 2)) {
    throw ContractViolationError(
        "rotation axis must have coefficient 1 and phase +1 or -1, got " +
        axis.str());
  }
  double angle = rotation.angle;
  if (axis.i_power() == 2) angle = -angle;

  std::vector<std::size_t> support;
  for (std::size_t q = 0; q < axis.n_qubits(); ++q) {
    if (axis.letter(q) != Pauli::I) support.push_back(q);
  }
  if (support.empty()) return {};

  std::vector<Gate> pre;
  std::vector<Gate> post;
  for (std::size_t q : support) {
    switch (axis.letter(q)) {
      case Pauli::X:
        pre.push_back(Gate::h(q));
        post.push_back(Gate::h(q));
        break;
      case Pauli::Y:
        pre.push_back(Gate::sdg(q));
        pre.push_back(Gate::h(q));
        post.push_back(Gate::h(q));
        post.push_back(Gate::s(q));
        break;
      default:
        break;
    }
  }

  std::vector<Gate> gates = pre;
  for (std::size_t i = 0; i + 1 < support.size(); ++i) {
    gates.push_back(Gate::cx(support[i], support[i + 1]));
  }
  // rz(t) = exp(-i t Z / 2), so t = -2 angle realizes exp(i angle Z...Z) on
  // the accumulated parity.
  gates.push_back(Gate::rz(support.back(), -2.0 * angle));
  for (std::size_t i = support.size() - 1; i-- > 0;) {
    gates.push_back(Gate::cx(support[i], support[i + 1]));
  }
  // post is already in execution order (for a Y qubit: h then s undoes sdg, h).
  gates.insert(gates.end(), post.begin(), post.end());
  return gates;
}

std::vector<Gate> lower_givens(std::size_t qubit_a, std::size_t qubit_b,
                               const GivensParams& p) {
  if (qubit_a == qubit_b) {
    throw ContractViolationError("givens lowering requires distinct qubits");
  }
  // The block factors as D(alpha) R(tau) D(beta) on the {|01>,|10>} subspace,
  // with D(b) = diag(e^{ib}, e^{-ib}) realized by rz(-b), rz(b) (exactly:
  // these screens are identity on |00> and |11>), and
  // R(tau) = exp(i tau/2 (XX + YY)) split into two commuting rotations.
  const double tau = 0.5 * p.theta;
  const double alpha = 0.5 * (p.gamma + p.phi + std::numbers::pi / 2.0);
  const double beta = 0.5 * (p.gamma - p.phi - std::numbers::pi / 2.0);

  const std::size_t n = std::max(qubit_a, qubit_b) + 1;
  PauliString xx(n);
  xx.set_letter(qubit_a, Pauli::X);
  xx.set_letter(qubit_b, Pauli::X);
  PauliString yy(n);
  yy.set_letter(qubit_a, Pauli::Y);
  yy.set_letter(qubit_b, Pauli::Y);

  std::vector<Gate> gates;
  gates.push_back(Gate::rz(qubit_a, -beta));
  gates.push_back(Gate::rz(qubit_b, beta));
  for (const Gate& g : lower_pauli_rotation({xx, 0.5 * tau})) {
    gates.push_back(g);
  }
  for (const Gate& g : lower_pauli_rotation({yy, 0.5 * tau})) {
    gates.push_back(g);
  }
  gates.push_back(Gate::rz(qubit_a, -alpha));
  gates.push_back(Gate::rz(qubit_b, alpha));
  return gates;
}

namespace {

constexpr double kAmpTol = 1e-12;

/// Level index when the internal vector is a basis state (single unit entry,
/// arbitrary phase), -1 otherwise.
int basis_level(const std::vector<cplx>& internal) {
  int level = -1;
  for (std::size_t s = 0; s < internal.size(); ++s) {
    if (std::abs(internal[s]) > kAmpTol) {
      if (level >= 0) return -1;
      level = static_cast<int>(s);
    }
  }
  return level;
}

/// Params sending the qubit pair state |10> to a|10> + b|01>.
GivensParams params_for_amplitudes(cplx a, cplx b) {
  GivensParams p;
  p.theta = 2.0 * std::atan2(std::abs(b), std::abs(a));
  p.gamma = std::abs(a) > kAmpTol ? -std::arg(a) : 0.0;
  p.phi = std::abs(b) > kAmpTol ? std::arg(-b) : 0.0;
  return p;
}

/// Rotations mapping one particle's excitation from level 0 of every copy of
/// its mode bundle to the requested internal vector.
void push_internal_rotations(std::vector<Gate>& gates,
                             const QubitLayout& layout,
                             const ParticleState& particle) {
  const int level = basis_level(particle.internal);
  if (level == 0) return;
  for (std::size_t mu = 1; mu <= layout.n_particles; ++mu) {
    const std::size_t q0 = layout.qubit_index(particle.mode, mu, 0);
    if (level > 0) {
      const std::size_t qk =
          layout.qubit_index(particle.mode, mu, static_cast<std::size_t>(level));
      for (const Gate& g :
           lower_givens(q0, qk, params_for_amplitudes(0.0, 1.0))) {
        gates.push_back(g);
      }
      continue;
    }
    if (layout.n_internal != 2) {
      throw UnsupportedError(
          "gate preparation of internal superpositions needs 2 internal "
          "states or a basis vector");
    }
    const std::size_t q1 = layout.qubit_index(particle.mode, mu, 1);
    for (const Gate& g : lower_givens(
             q0, q1,
             params_for_amplitudes(particle.internal[0], particle.internal[1]))) {
      gates.push_back(g);
    }
  }
}

bool all_bunched_identical_basis(const ParticleAssignment& particles) {
  const int level = basis_level(particles.front().internal);
  if (level < 0) return false;
  for (const ParticleState& p : particles) {
    if (p.mode != particles.front().mode) return false;
    if (basis_level(p.internal) != level) return false;
  }
  return true;
}

}  // namespace

std::vector<Gate> preparation_circuit(const QubitLayout& layout,
                                      const ParticleAssignment& particles) {
  layout.validate();
  if (particles.size() != layout.n_particles) {
    throw SizeMismatchError("assignment must list exactly one state per "
                            "particle of the layout");
  }
  for (std::size_t alpha = 0; alpha < particles.size(); ++alpha) {
    const ParticleState& p = particles[alpha];
    if (p.internal.size() != layout.n_internal) {
      throw SizeMismatchError("particle " + std::to_string(alpha + 1) +
                              " internal vector length does not match the "
                              "layout");
    }
    double norm_sq = 0.0;
    for (cplx amp : p.internal) norm_sq += std::norm(amp);
    if (std::abs(norm_sq - 1.0) > 1e-12) {
      throw ContractViolationError("particle " + std::to_string(alpha + 1) +
                                   " internal vector is not normalized");
    }
  }

  if (layout.n_particles == 1) {
    const ParticleState& p = particles.front();
    std::vector<Gate> gates = {Gate::x(layout.qubit_index(p.mode, 1, 0))};
    push_internal_rotations(gates, layout, p);
    return gates;
  }

  if (all_bunched_identical_basis(particles)) {
    const std::size_t mode = particles.front().mode;
    const auto level =
        static_cast<std::size_t>(basis_level(particles.front().internal));
    std::vector<Gate> gates;
    for (std::size_t mu = 1; mu <= layout.n_particles; ++mu) {
      gates.push_back(Gate::x(layout.qubit_index(mode, mu, level)));
    }
    return gates;
  }

  if (layout.n_particles == 2) {
    const bool straight = particles[0].mode == 1 && particles[1].mode == 2;
    const bool swapped = particles[0].mode == 2 && particles[1].mode == 1;
    if (straight || swapped) {
      // The base entangler fills level 0 of modes 1 and 2; listing the
      // particles in either order encodes the same vector.
      std::vector<Gate> gates = antisymmetrize_circuit_n2(layout);
      push_internal_rotations(gates, layout,
                              swapped ? particles[1] : particles[0]);
      push_internal_rotations(gates, layout,
                              swapped ? particles[0] : particles[1]);
      return gates;
    }
  }

  throw UnsupportedError(
      "gate preparation supports one particle, two particles in modes 1 and "
      "2, or all particles bunched in one mode with identical basis internal "
      "levels");
}

QasmCircuit experiment_circuit(const QubitLayout& layout,
                               const ParticleAssignment& particles,
                               const OpticalHamiltonian& h) {
  QasmCircuit circuit;
  circuit.n_qubits = layout.n_qubits();
  circuit.gates = preparation_circuit(layout, particles);
  for (const PauliRotation& rotation : rotation_plan(h, layout)) {
    for (const Gate& g : lower_pauli_rotation(rotation)) {
      circuit.gates.push_back(g);
    }
  }
  return circuit;
}

}  // namespace bosonq
