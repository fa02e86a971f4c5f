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

// Symplectic Pauli-string algebra.
//
// A PauliString stores the operator  i^phase_exp * X^x_bits * Z^z_bits,
// where bit b of a mask acts on bit b of the computational basis index (so,
// in an n-qubit register, on qubit n - 1 - b). Y is represented as i*X*Z,
// which makes the Hermitian string with k Y-factors carry phase_exp = k mod 4.
//
// Canonical index: j = x_bits | (z_bits << n). For n = 1 this orders the
// basis as I, X, Z, Y. Index 0 is always the identity. Every exported
// quantity is a sum over the full set, so the order never affects results.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sre/state.hpp"

namespace sre {

/// Largest register for single-string operations.
inline constexpr int kMaxPauliQubits = 12;
/// Absolute tolerance for exact-path comparisons.
inline constexpr double kExactTolerance = 1e-12;

class PauliString {
 public:
  PauliString(int num_qubits, uint64_t x_bits, uint64_t z_bits, int phase_exp = 0);

  static PauliString identity(int num_qubits) { return {num_qubits, 0, 0, 0}; }

  /// Hermitian string with canonical index `index` in [0, 4^n).
  static PauliString from_index(int num_qubits, uint64_t index);

  /// Parses e.g. "XZI", "+YY", "-iX". The first letter acts on qubit 0.
  /// '_' is accepted for identity.
  static PauliString from_label(std::string_view label);

  int num_qubits() const { return num_qubits_; }
  uint64_t x_bits() const { return x_; }
  uint64_t z_bits() const { return z_; }
  int phase_exp() const { return phase_; }

  /// Canonical index of the phase-free string.
  uint64_t index() const { return x_ | (z_ << num_qubits_); }

  /// k such that this == i^k * (canonical Hermitian string with same masks).
  int hermitian_phase() const;
  bool is_hermitian() const { return (hermitian_phase() & 1) == 0; }

  /// i^phase_exp as a complex number.
  cplx phase() const;

  /// Same masks, phase reset to the Hermitian representative.
  PauliString canonical() const { return from_index(num_qubits_, index()); }

  /// Label such as "+XYZ" or "-iZ".
  std::string str() const;
  /// Letters only, e.g. "XYZ".
  std::string letters() const;

  Eigen::MatrixXcd to_dense() const;

  /// this^{(x) copies}: the string repeated on `copies` consecutive blocks.
  PauliString repeated(int copies) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int num_qubits_;
  uint64_t x_;
  uint64_t z_;
  int phase_;
};

/// All 4^n Hermitian strings in canonical order.
std::vector<PauliString> enumerate_paulis(int num_qubits);

/// a * b with exact phase.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

bool commutes(const PauliString& a, const PauliString& b);

StateVector apply_pauli(const PauliString& p, const StateVector& psi);

/// <psi|P|psi> for any phase (complex in general).
cplx expectation(const PauliString& p, const StateVector& psi);

/// <psi|P|psi> for a Hermitian string. Throws std::invalid_argument for a
/// non-Hermitian phase and ConsistencyError if the imaginary residual
/// exceeds kExactTolerance.
double expval(const PauliString& p, const StateVector& psi);

/// Raw expectations <psi| X^x Z^z |psi> for every (x, z), indexed by the
/// canonical index x | (z << n). Computed with one Walsh-Hadamard transform
/// per x mask: O(d^2 log d) instead of O(d^3).
std::vector<cplx> raw_expectation_table(const StateVector& psi);

/// <psi|P_j|psi> for every canonical Hermitian string, via the table above.
std::vector<double> pauli_expectations(const StateVector& psi);

}  // namespace sre
