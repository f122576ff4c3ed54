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

#include "bosonq/experiment.hpp"

#include <cmath>
#include <utility>

#include <json.hpp>

#include "bosonq/errors.hpp"
#include "bosonq/oracle.hpp"

namespace bosonq {

namespace {

using nlohmann::ordered_json;

const ordered_json& require_field(const ordered_json& obj,
                                  const std::string& key,
                                  const std::string& where) {
  if (!obj.is_object()) {
    throw ContractViolationError("\"" + where + "\" must be a JSON object");
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ContractViolationError("missing \"" + where + "." + key + "\"");
  }
  return *it;
}

double expect_number(const ordered_json& j, const std::string& where) {
  if (!j.is_number()) {
    throw ContractViolationError("\"" + where + "\" must be a number");
  }
  return j.get<double>();
}

std::size_t expect_positive_int(const ordered_json& j,
                                const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    throw ContractViolationError("\"" + where +
                                 "\" must be a positive integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

/// Accepts [re, im] or a bare number (treated as real).
cplx expect_complex(const ordered_json& j, const std::string& where) {
  if (j.is_number()) return cplx{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return cplx{j[0].get<double>(), j[1].get<double>()};
  }
  throw ContractViolationError("\"" + where +
                               "\" must be a number or an [re, im] pair");
}

QubitLayout parse_layout(const ordered_json& j) {
  QubitLayout layout;
  layout.n_modes = expect_positive_int(require_field(j, "modes", "layout"),
                                       "layout.modes");
  layout.n_particles = expect_positive_int(
      require_field(j, "particles", "layout"), "layout.particles");
  layout.n_internal = 1;
  if (j.contains("internal_states")) {
    layout.n_internal =
        expect_positive_int(j.at("internal_states"), "layout.internal_states");
  }
  return layout;
}

ParticleAssignment parse_particles(const ordered_json& j,
                                   const QubitLayout& layout) {
  if (!j.is_array()) {
    throw ContractViolationError("\"particles\" must be an array");
  }
  if (j.size() != layout.n_particles) {
    throw SizeMismatchError(
        "\"particles\" has " + std::to_string(j.size()) +
        " entries but layout.particles is " +
        std::to_string(layout.n_particles));
  }
  ParticleAssignment particles;
  for (std::size_t alpha = 0; alpha < j.size(); ++alpha) {
    const std::string where = "particles[" + std::to_string(alpha) + "]";
    const ordered_json& pj = j[alpha];
    ParticleState p;
    p.mode = expect_positive_int(require_field(pj, "mode", where),
                                 where + ".mode");
    if (p.mode > layout.n_modes) {
      throw ContractViolationError("\"" + where + ".mode\" is " +
                                   std::to_string(p.mode) +
                                   " but the layout has " +
                                   std::to_string(layout.n_modes) + " modes");
    }
    if (pj.contains("internal")) {
      const ordered_json& ij = pj.at("internal");
      if (!ij.is_array() || ij.size() != layout.n_internal) {
        throw SizeMismatchError("\"" + where + ".internal\" must be an array "
                                "of layout.internal_states amplitudes");
      }
      p.internal.clear();
      for (std::size_t s = 0; s < ij.size(); ++s) {
        p.internal.push_back(expect_complex(
            ij[s], where + ".internal[" + std::to_string(s) + "]"));
      }
    } else {
      p.internal.assign(layout.n_internal, cplx{0.0, 0.0});
      p.internal[0] = cplx{1.0, 0.0};
    }
    particles.push_back(std::move(p));
  }
  return particles;
}

OpticalHamiltonian parse_hamiltonian(const ordered_json& j,
                                     const QubitLayout& layout) {
  OpticalHamiltonian h;
  const ordered_json& phi = require_field(j, "phi", "hamiltonian");
  if (!phi.is_array() || phi.size() != layout.n_modes) {
    throw SizeMismatchError(
        "\"hamiltonian.phi\" must have layout.modes rows, expected " +
        std::to_string(layout.n_modes));
  }
  const auto m = static_cast<Eigen::Index>(layout.n_modes);
  h.phi = Eigen::MatrixXcd::Zero(m, m);
  for (std::size_t r = 0; r < layout.n_modes; ++r) {
    const ordered_json& row = phi[r];
    if (!row.is_array() || row.size() != layout.n_modes) {
      throw SizeMismatchError("\"hamiltonian.phi[" + std::to_string(r) +
                              "]\" must have layout.modes entries");
    }
    for (std::size_t c = 0; c < layout.n_modes; ++c) {
      h.phi(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          expect_complex(row[c], "hamiltonian.phi[" + std::to_string(r) +
                                     "][" + std::to_string(c) + "]");
    }
  }
  h.t = expect_number(require_field(j, "t", "hamiltonian"), "hamiltonian.t");
  return h;
}

ExperimentOutputs parse_outputs(const ordered_json& j) {
  ExperimentOutputs outputs;
  if (j.contains("outcomes")) {
    if (!j.at("outcomes").is_boolean()) {
      throw ContractViolationError("\"outputs.outcomes\" must be a boolean");
    }
    outputs.outcomes = j.at("outcomes").get<bool>();
  }
  if (j.contains("amplitudes")) {
    if (!j.at("amplitudes").is_boolean()) {
      throw ContractViolationError("\"outputs.amplitudes\" must be a boolean");
    }
    outputs.amplitudes = j.at("amplitudes").get<bool>();
  }
  if (j.contains("qasm")) {
    if (!j.at("qasm").is_string()) {
      throw ContractViolationError(
          "\"outputs.qasm\" must be a file path string");
    }
    outputs.qasm_path = j.at("qasm").get<std::string>();
  }
  return outputs;
}

}  // namespace

ExperimentSpec parse_experiment(const std::string& json_text) {
  ordered_json root;
  try {
    root = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  ExperimentSpec spec;
  spec.layout = parse_layout(require_field(root, "layout", "spec"));
  spec.layout.validate();
  spec.particles =
      parse_particles(require_field(root, "particles", "spec"), spec.layout);
  spec.hamiltonian = parse_hamiltonian(
      require_field(root, "hamiltonian", "spec"), spec.layout);
  spec.hamiltonian.validate();
  if (root.contains("outputs")) {
    spec.outputs = parse_outputs(root.at("outputs"));
  }
  return spec;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  spec.layout.validate();
  spec.hamiltonian.validate();
  const StateVector prepared =
      antisymmetrized_state(spec.layout, spec.particles);
  StateVector final_state =
      evolve_exact(prepared, spec.hamiltonian, spec.layout);
  OutcomeTable table = decode_outcomes(final_state, spec.layout);
  return ExperimentResult{std::move(final_state), std::move(table)};
}

std::string result_to_json(const ExperimentSpec& spec,
                           const ExperimentResult& result) {
  ordered_json root;
  root["layout"] = {{"modes", spec.layout.n_modes},
                    {"particles", spec.layout.n_particles},
                    {"internal_states", spec.layout.n_internal}};

  const bool with_oracle = spec.layout.n_internal == 1;
  double max_deviation = 0.0;
  Eigen::MatrixXcd u;
  std::vector<int> input_occupation;
  if (with_oracle) {
    u = single_particle_unitary(spec.hamiltonian);
    input_occupation.assign(spec.layout.n_modes, 0);
    for (const ParticleState& p : spec.particles) {
      input_occupation[p.mode - 1] += 1;
    }
  }

  if (spec.outputs.outcomes) {
    ordered_json outcomes = ordered_json::array();
    for (const BosonOutcome& outcome : result.table.outcomes) {
      ordered_json entry;
      entry["occupation"] = outcome.occupation;
      entry["probability"] = outcome.probability;
      if (with_oracle) {
        const double reference = scatter_probability(
            ScatteringInstance{u, input_occupation, outcome.occupation});
        entry["oracle"] = reference;
        max_deviation =
            std::max(max_deviation, std::abs(outcome.probability - reference));
      }
      outcomes.push_back(std::move(entry));
    }
    root["outcomes"] = std::move(outcomes);
    root["leakage"] = result.table.leakage;
    if (with_oracle) root["max_abs_deviation"] = max_deviation;
  }

  if (spec.outputs.amplitudes) {
    ordered_json amps = ordered_json::array();
    for (std::uint64_t index = 0; index < result.final_state.size(); ++index) {
      const cplx amp = result.final_state.amp(index);
      if (std::abs(amp) <= 1e-12) continue;
      ordered_json entry;
      entry["index"] = index;
      entry["ket"] = format_basis_state(index, spec.layout);
      entry["re"] = amp.real();
      entry["im"] = amp.imag();
      amps.push_back(std::move(entry));
    }
    root["amplitudes"] = std::move(amps);
  }

  return root.dump(2) + "\n";
}

}  // namespace bosonq
