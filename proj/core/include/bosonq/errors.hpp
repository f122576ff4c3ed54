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

#include <stdexcept>
#include <string>

namespace bosonq {

/// Base class for all errors raised by the library.  The CLI maps these to
/// exit code 3 so callers can distinguish bad physics input from bad JSON.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension disagreement between containers that must line up.
struct SizeMismatchError : Error {
  using Error::Error;
};

/// A documented precondition was violated (non-unit coefficient,
/// non-Hermitian matrix, non-normalized amplitude vector, ...).
struct ContractViolationError : Error {
  using Error::Error;
};

/// A fermionic register slot would be doubly occupied.
struct CapacityError : Error {
  using Error::Error;
};

/// The request is well-formed but outside what this build implements.
struct UnsupportedError : Error {
  using Error::Error;
};

/// Syntactically invalid input text (malformed JSON and friends).  The CLI
/// maps this one to exit code 2.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace bosonq
