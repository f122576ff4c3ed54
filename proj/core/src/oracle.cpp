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

#include "bosonq/oracle.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "bosonq/errors.hpp"

namespace bosonq {

std::complex<double> permanent(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) {
    throw SizeMismatchError("permanent requires a square matrix, got " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
  }
  const int n = static_cast<int>(a.rows());
  if (n == 0) return {1.0, 0.0};
  if (n > 30) {
    throw CapacityError("permanent limited to 30x30, got n = " +
                        std::to_string(n));
  }

  // Ryser with binary-reflected Gray code over column subsets: each step
  // flips one column in or out of the running row sums.
  std::vector<std::complex<double>> sums(static_cast<std::size_t>(n), 0.0);
  std::complex<double> total = 0.0;
  std::uint64_t prev = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < end; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t changed = gray ^ prev;
    const int col = std::countr_zero(changed);
    const double step = (gray & changed) != 0 ? 1.0 : -1.0;
    for (int row = 0; row < n; ++row) {
      sums[static_cast<std::size_t>(row)] += step * a(row, col);
    }
    std::complex<double> product = 1.0;
    for (int row = 0; row < n; ++row) {
      product *= sums[static_cast<std::size_t>(row)];
    }
    const double sign = (std::popcount(gray) & 1) != 0 ? -1.0 : 1.0;
    total += sign * product;
    prev = gray;
  }
  const double overall = (n & 1) != 0 ? -1.0 : 1.0;
  return overall * total;
}

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<int> occupation_to_indices(const std::vector<int>& occupation) {
  std::vector<int> indices;
  for (std::size_t mode = 0; mode < occupation.size(); ++mode) {
    if (occupation[mode] < 0) {
      throw ContractViolationError("occupation count for mode " +
                                   std::to_string(mode + 1) +
                                   " is negative");
    }
    for (int c = 0; c < occupation[mode]; ++c) {
      indices.push_back(static_cast<int>(mode));
    }
  }
  return indices;
}

}  // namespace

double scatter_probability(const ScatteringInstance& instance) {
  const auto m = static_cast<std::size_t>(instance.u.rows());
  if (instance.u.cols() != instance.u.rows()) {
    throw SizeMismatchError("scattering unitary must be square");
  }
  if (instance.input_occupation.size() != m ||
      instance.output_occupation.size() != m) {
    throw SizeMismatchError(
        "occupation lists must have one entry per mode of the unitary");
  }
  const std::vector<int> cols = occupation_to_indices(instance.input_occupation);
  const std::vector<int> rows =
      occupation_to_indices(instance.output_occupation);
  if (cols.size() != rows.size()) {
    throw SizeMismatchError("input has " + std::to_string(cols.size()) +
                            " particles but output has " +
                            std::to_string(rows.size()));
  }
  const int n = static_cast<int>(cols.size());
  Eigen::MatrixXcd sub(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      sub(r, c) = instance.u(rows[static_cast<std::size_t>(r)],
                             cols[static_cast<std::size_t>(c)]);
    }
  }
  double norm = 1.0;
  for (int occ : instance.input_occupation) norm *= factorial(occ);
  for (int occ : instance.output_occupation) norm *= factorial(occ);
  return std::norm(permanent(sub)) / norm;
}

}  // namespace bosonq
