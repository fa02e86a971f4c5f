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

// Dense state-vector and density-matrix arithmetic.
//
// Qubit labelling: in an N-qubit register, qubit q is bit (N - 1 - q) of the
// computational basis index, i.e. qubit 0 is the most significant. With this
// convention tensor(a, b) is the Kronecker product and places a's qubits
// first. Registers built by the estimator use the layout
//
//   [ ancilla (2n qubits) | copy B_1 (n) | copy B_2 (n) | ... | copy B_alpha ]
//
// so the ancilla occupies the most significant positions.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace sre {

using cplx = std::complex<double>;

/// Largest register handled by pure-state paths.
inline constexpr int kMaxStateQubits = 20;
/// Largest register handled by dense density-matrix paths (dimension 4096).
inline constexpr int kMaxDensityQubits = 12;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kDensityTolerance = 1e-10;

/// Throws SizeError if `num_qubits` exceeds `limit` (or is not positive).
void check_qubit_count(int num_qubits, int limit, const char* what);

class DensityMatrix;

/// Normalized pure state on n qubits.
class StateVector {
 public:
  /// Takes ownership of `amps`. Requires 2^n entries and unit norm
  /// within kNormTolerance.
  StateVector(int num_qubits, Eigen::VectorXcd amps);

  /// Normalizes `amps` first. Rejects the zero vector.
  static StateVector normalized(int num_qubits, Eigen::VectorXcd amps);
  static StateVector basis(int num_qubits, uint64_t index);
  static StateVector zeros(int num_qubits) { return basis(num_qubits, 0); }

  int num_qubits() const { return num_qubits_; }
  uint64_t dim() const { return static_cast<uint64_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  cplx operator[](uint64_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

  DensityMatrix projector() const;

 private:
  int num_qubits_;
  Eigen::VectorXcd amps_;
};

/// Hermitian, trace-one operator on n qubits.
///
/// Construction checks Hermiticity and trace. Positivity is not checked on
/// construction (it needs a full eigendecomposition); see is_positive().
class DensityMatrix {
 public:
  DensityMatrix(int num_qubits, Eigen::MatrixXcd entries);

  static DensityMatrix maximally_mixed(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  uint64_t dim() const { return static_cast<uint64_t>(entries_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  cplx operator()(uint64_t r, uint64_t c) const {
    return entries_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  /// Eigenvalues in ascending order.
  std::vector<double> eigenvalues() const;
  bool is_positive(double tol = 1e-9) const;

 private:
  int num_qubits_;
  Eigen::MatrixXcd entries_;
};

/// Two complementary qubit groups of an n-qubit register.
class BipartiteSplit {
 public:
  /// `subsystem_a` in register order; side B is the sorted complement.
  BipartiteSplit(int num_qubits, std::vector<int> subsystem_a);

  int num_qubits() const { return num_qubits_; }
  const std::vector<int>& a() const { return a_; }
  const std::vector<int>& b() const { return b_; }

 private:
  int num_qubits_;
  std::vector<int> a_;
  std::vector<int> b_;
};

/// Schmidt coefficients (squared), nonincreasing; min(d_A, d_B) entries.
struct SchmidtSpectrum {
  std::vector<double> lambdas;
};

StateVector tensor(const StateVector& a, const StateVector& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// psi^{(x) alpha}.
StateVector tensor_power(const StateVector& psi, int alpha);

/// Reduced state on `keep` (output qubit order follows `keep`).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Reduced state of a pure state on `keep`, without forming |psi><psi|.
DensityMatrix reduced_state(const StateVector& psi, std::span<const int> keep);

/// tr[rho^2].
double purity(const DensityMatrix& rho);

/// tr[rho sigma] for density matrices of equal size.
double overlap(const DensityMatrix& rho, const DensityMatrix& sigma);

/// |<a|b>|^2.
double overlap(const StateVector& a, const StateVector& b);

SchmidtSpectrum schmidt_spectrum(const StateVector& psi, const BipartiteSplit& split);

/// (1 - beta)^{-1} ln sum_i lambda_i^beta. beta == 1 is rejected.
double renyi_entanglement(const SchmidtSpectrum& spectrum, double beta);

/// Applies H to each qubit in `targets`.
StateVector hadamard_layer(const StateVector& psi, std::span<const int> targets);

/// Applies a dense 2^k x 2^k operator to the k listed qubits (first listed
/// qubit is the operator's most significant). The result is renormalized
/// only if `op` is unitary; callers pass unitaries.
StateVector apply_operator(const StateVector& psi, const Eigen::MatrixXcd& op,
                           std::span<const int> qubits);

/// Qubit assignment for the controlled-Pauli-power unitary: an ancilla of 2n
/// qubits (first listed is the most significant bit of the ancilla value j)
/// and alpha target blocks of n qubits each.
struct RegisterLayout {
  std::vector<int> ancilla;
  std::vector<std::vector<int>> blocks;

  /// Ancilla on qubits [0, 2n), block b on [2n + b n, 2n + (b + 1) n).
  static RegisterLayout standard(int n, int alpha);
  int block_qubits() const { return static_cast<int>(ancilla.size()) / 2; }
  int total_qubits() const;
};

/// sum_j |j><j|_A (x) P_j^{(x) alpha}, with P_j the canonically indexed
/// Hermitian Pauli string. Applied as a phased permutation of amplitudes.
StateVector controlled_pauli_power(const StateVector& psi, const RegisterLayout& layout);

}  // namespace sre
