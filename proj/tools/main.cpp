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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bosonq/errors.hpp"
#include "bosonq/experiment.hpp"
#include "bosonq/hom.hpp"
#include "bosonq/oracle.hpp"
#include "bosonq/qasm.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bosonq::Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bosonq::Error("cannot write file: " + path);
  out << text;
}

std::string format_probability(double p) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16f", p);
  return buf;
}

void run_hom_command() {
  const bosonq::HomIdealResult result = bosonq::run_hom_ideal();
  std::cout << "outcome probability\n";
  for (const bosonq::BosonOutcome& outcome : result.table.outcomes) {
    std::cout << bosonq::format_occupation(outcome.occupation) << " "
              << format_probability(outcome.probability) << "\n";
  }
  std::cout << "leakage " << format_probability(result.table.leakage) << "\n";
}

void run_dip_command(double theta_min, double theta_max, double step,
                     double phi, double gamma, const std::string& out_path) {
  const bosonq::DipCurve curve =
      bosonq::sweep_dip(theta_min, theta_max, step, phi, gamma);
  std::ostringstream csv;
  bosonq::write_dip_csv(csv, curve);
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    write_file(out_path, csv.str());
  }
}

void run_scatter_command(const std::string& spec_path,
                         const std::string& qasm_override) {
  bosonq::ExperimentSpec spec = bosonq::parse_experiment(read_file(spec_path));
  if (!qasm_override.empty()) spec.outputs.qasm_path = qasm_override;
  const bosonq::ExperimentResult result = bosonq::run_experiment(spec);
  std::cout << bosonq::result_to_json(spec, result);
  if (!spec.outputs.qasm_path.empty()) {
    const bosonq::QasmCircuit circuit = bosonq::experiment_circuit(
        spec.layout, spec.particles, spec.hamiltonian);
    write_file(spec.outputs.qasm_path, circuit.to_string());
  }
}

Eigen::MatrixXcd parse_json_matrix(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw bosonq::ParseError(e.what());
  }
  if (!root.is_array() || root.empty()) {
    throw bosonq::ParseError("matrix JSON must be a non-empty array of rows");
  }
  const std::size_t rows = root.size();
  const std::size_t cols = root[0].is_array() ? root[0].size() : 0;
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(rows),
                     static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const nlohmann::json& row = root[r];
    if (!row.is_array() || row.size() != cols) {
      throw bosonq::ParseError("matrix rows must be arrays of equal length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const nlohmann::json& cell = row[c];
      bosonq::cplx value;
      if (cell.is_number()) {
        value = bosonq::cplx{cell.get<double>(), 0.0};
      } else if (cell.is_array() && cell.size() == 2 && cell[0].is_number() &&
                 cell[1].is_number()) {
        value = bosonq::cplx{cell[0].get<double>(), cell[1].get<double>()};
      } else {
        throw bosonq::ParseError(
            "matrix entries must be numbers or [re, im] pairs");
      }
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = value;
    }
  }
  return a;
}

Eigen::MatrixXcd parse_text_matrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<double> row;
    double value = 0.0;
    while (fields >> value) row.push_back(value);
    if (!fields.eof()) {
      throw bosonq::ParseError("matrix text must contain only numbers");
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw bosonq::ParseError("matrix file is empty");
  const std::size_t cols = rows[0].size();
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(rows.size()),
                     static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw bosonq::ParseError("matrix rows must have equal length");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          bosonq::cplx{rows[r][c], 0.0};
    }
  }
  return a;
}

std::string format_complex(bosonq::cplx z) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%.15g%c%.15gi", z.real(),
                z.imag() < 0.0 ? '-' : '+', std::abs(z.imag()));
  return buf;
}

void run_permanent_command(const std::string& matrix_path) {
  const std::string text = read_file(matrix_path);
  const bool json = matrix_path.size() >= 5 &&
                    matrix_path.rfind(".json") == matrix_path.size() - 5;
  const Eigen::MatrixXcd a =
      json ? parse_json_matrix(text) : parse_text_matrix(text);
  std::cout << format_complex(bosonq::permanent(a)) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boson interference simulator on an encoded qubit register"};
  app.require_subcommand(1);

  app.add_subcommand("hom",
                     "Run the two-photon bunching experiment and print the "
                     "outcome table");

  double theta_min = -std::numbers::pi;
  double theta_max = std::numbers::pi;
  double step = std::numbers::pi / 100.0;
  double phi = 0.0;
  double gamma = 0.0;
  std::string out_path;
  CLI::App* dip = app.add_subcommand(
      "dip", "Sweep the two-photon coincidence dip and emit CSV");
  dip->add_option("--theta-min", theta_min, "Sweep start (radians)");
  dip->add_option("--theta-max", theta_max, "Sweep end (radians)");
  dip->add_option("--step", step, "Grid spacing (radians)");
  dip->add_option("--phi", phi, "Internal-state phase phi");
  dip->add_option("--gamma", gamma, "Internal-state phase gamma");
  dip->add_option("--out", out_path, "CSV output path (default: stdout)");

  std::string spec_path;
  std::string qasm_path;
  CLI::App* scatter = app.add_subcommand(
      "scatter", "Run a JSON experiment and print decoded outcomes with "
                 "permanent-oracle columns");
  scatter->add_option("spec", spec_path, "Experiment JSON path")->required();
  scatter->add_option("--qasm", qasm_path,
                      "Also export the circuit as OpenQASM 2.0 to this path");

  std::string matrix_path;
  CLI::App* perm = app.add_subcommand(
      "permanent", "Print the permanent of a matrix file (.json nested "
                   "arrays, otherwise whitespace-separated real text)");
  perm->add_option("matrix", matrix_path, "Matrix file path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("hom")) {
      run_hom_command();
    } else if (app.got_subcommand(dip)) {
      run_dip_command(theta_min, theta_max, step, phi, gamma, out_path);
    } else if (app.got_subcommand(scatter)) {
      run_scatter_command(spec_path, qasm_path);
    } else if (app.got_subcommand(perm)) {
      run_permanent_command(matrix_path);
    }
  } catch (const bosonq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bosonq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
