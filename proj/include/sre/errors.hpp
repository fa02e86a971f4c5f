// Copyright 2026 The sre-purity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace sre {

/// A requested register is larger than the configured simulation guard.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Operands act on a different number of qubits, or qubit indices are invalid.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal numerical identity failed (e.g. an expectation value that
/// should be real came back with a large imaginary part).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sre
