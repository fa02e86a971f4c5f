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

#include "sre/channel.hpp"

#include <stdexcept>
#include <string>

#include "sre/pauli.hpp"

namespace sre {

namespace {

void check_alpha(int alpha, const char* what) {
  if (alpha < 1) throw std::invalid_argument(std::string(what) + ": alpha must be >= 1");
}

cplx int_pow(cplx base, int exponent) {
  cplx out = 1.0;
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

}  // namespace

std::string_view to_string(PreparationMethod method) {
  switch (method) {
    case PreparationMethod::kExactMixture:
      return "exact";
    case PreparationMethod::kCoherent:
      return "coherent";
    case PreparationMethod::kIncoherent:
      return "incoherent";
  }
  return "?";
}

std::optional<PreparationMethod> parse_method(std::string_view text) {
  if (text == "exact" || text == "exact_mixture") return PreparationMethod::kExactMixture;
  if (text == "coherent") return PreparationMethod::kCoherent;
  if (text == "incoherent") return PreparationMethod::kIncoherent;
  return std::nullopt;
}

std::string_view to_string(Marginal marginal) {
  return marginal == Marginal::kCopies ? "copies" : "ancilla";
}

std::optional<Marginal> parse_marginal(std::string_view text) {
  if (text == "copies" || text == "btilde") return Marginal::kCopies;
  if (text == "ancilla") return Marginal::kAncilla;
  return std::nullopt;
}

DensityMatrix exact_channel_output(const StateVector& psi, int alpha) {
  check_alpha(alpha, "exact_channel_output");
  const int n = psi.num_qubits();
  check_qubit_count(n * alpha, kMaxDensityQubits, "exact_channel_output");
  const uint64_t strings = uint64_t{1} << (2 * n);
  const auto dim = static_cast<Eigen::Index>(uint64_t{1} << (n * alpha));
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (uint64_t j = 0; j < strings; ++j) {
    const StateVector term = tensor_power(apply_pauli(PauliString::from_index(n, j), psi), alpha);
    acc.noalias() += term.amplitudes() * term.amplitudes().adjoint();
  }
  acc /= static_cast<double>(strings);
  acc = 0.5 * (acc + acc.adjoint()).eval();
  return DensityMatrix(n * alpha, std::move(acc));
}

std::vector<int> ancilla_register_qubits(int n) {
  std::vector<int> q(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) q[i] = i;
  return q;
}

std::vector<int> copy_register_qubits(int n, int alpha) {
  std::vector<int> q(static_cast<std::size_t>(n * alpha));
  for (int i = 0; i < n * alpha; ++i) q[i] = 2 * n + i;
  return q;
}

StateVector coherent_prepare(const StateVector& psi, int alpha) {
  check_alpha(alpha, "coherent_prepare");
  const int n = psi.num_qubits();
  check_qubit_count((2 + alpha) * n, kMaxStateQubits, "coherent_prepare");
  StateVector reg = tensor(StateVector::zeros(2 * n), tensor_power(psi, alpha));
  reg = hadamard_layer(reg, ancilla_register_qubits(n));
  return controlled_pauli_power(reg, RegisterLayout::standard(n, alpha));
}

DensityMatrix ancilla_marginal(const StateVector& psi, int alpha) {
  check_alpha(alpha, "ancilla_marginal");
  const int n = psi.num_qubits();
  check_qubit_count(2 * n, kMaxDensityQubits, "ancilla_marginal");
  const auto raw = raw_expectation_table(psi);
  const auto paulis = enumerate_paulis(n);
  const auto strings = static_cast<Eigen::Index>(paulis.size());
  const double norm = 1.0 / static_cast<double>(paulis.size());
  Eigen::MatrixXcd m(strings, strings);
  for (Eigen::Index i = 0; i < strings; ++i) {
    for (Eigen::Index j = 0; j < strings; ++j) {
      const PauliString prod = pauli_mul(paulis[j], paulis[i]);
      const cplx trace = prod.phase() * raw[prod.index()];
      m(i, j) = norm * int_pow(trace, alpha);
    }
  }
  return DensityMatrix(2 * n, std::move(m));
}

IncoherentSampler::IncoherentSampler(const StateVector& psi, int alpha) : psi_(psi), alpha_(alpha) {
  check_alpha(alpha, "IncoherentSampler");
  check_qubit_count(psi.num_qubits(), kMaxPauliQubits, "IncoherentSampler");
  check_qubit_count(psi.num_qubits() * alpha, kMaxStateQubits, "IncoherentSampler");
}

StateVector IncoherentSampler::draw(Rng& rng) const { return branch(rng.below(branch_count())); }

StateVector IncoherentSampler::branch(uint64_t j) const {
  return tensor_power(apply_pauli(PauliString::from_index(psi_.num_qubits(), j), psi_), alpha_);
}

StateVector incoherent_sample(const StateVector& psi, int alpha, Rng& rng) {
  return IncoherentSampler(psi, alpha).draw(rng);
}

}  // namespace sre
