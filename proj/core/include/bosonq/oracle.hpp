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
#include <complex>
#include <vector>

namespace bosonq {

/// Matrix permanent by Ryser's inclusion-exclusion formula with Gray-code
/// subset enumeration, O(2^n * n).  perm of the empty matrix is 1.
std::complex<double> permanent(const Eigen::MatrixXcd& a);

/// One single-channel scattering event: photons enter with the input
/// occupation, pass the single-particle unitary u, and are counted with the
/// output occupation.
struct ScatteringInstance {
  Eigen::MatrixXcd u;
  std::vector<int> input_occupation;
  std::vector<int> output_occupation;
};

/// Transition probability
///   P = |perm(u_sub)|^2 / (prod_i in_i! * prod_j out_j!)
/// where u_sub repeats column i of u in_i times and row j out_j times.
double scatter_probability(const ScatteringInstance& instance);

}  // namespace bosonq
