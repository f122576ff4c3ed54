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

#include <string>

#include "bosonq/encoding.hpp"
#include "bosonq/evolve.hpp"
#include "bosonq/statevector.hpp"

namespace bosonq {

/// Which result sections an experiment emits.
struct ExperimentOutputs {
  bool outcomes = true;
  bool amplitudes = false;
  std::string qasm_path;  // empty: no export
};

/// A full scattering experiment parsed from the JSON format (see the README
/// for the schema): register layout, initial particle assignment, Hamiltonian
/// and requested outputs.
struct ExperimentSpec {
  QubitLayout layout;
  ParticleAssignment particles;
  OpticalHamiltonian hamiltonian;
  ExperimentOutputs outputs;
};

struct ExperimentResult {
  StateVector final_state;
  OutcomeTable table;
};

/// Parses and validates the JSON text.  Malformed JSON throws ParseError with
/// the parser's line/column message; a schema or physics violation throws the
/// matching library error naming the offending entry.
ExperimentSpec parse_experiment(const std::string& json_text);

/// Prepares the antisymmetrized initial state, evolves it exactly and decodes
/// the outcome table.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Serializes the outcome table (plus amplitudes when requested) as a JSON
/// object.  For single-internal-state layouts every outcome also carries the
/// independent |permanent|^2 scattering probability and the object reports
/// the maximum absolute deviation between the two.
std::string result_to_json(const ExperimentSpec& spec,
                           const ExperimentResult& result);

}  // namespace bosonq
