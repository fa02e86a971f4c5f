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

// Preparation of the Pauli-averaged multi-copy state
//
//   E(psi, alpha) = d^{-2} sum_j (P_j |psi><psi| P_j)^{(x) alpha},
//
// whose purity is A_alpha(psi) / d. Three routes produce it: the exact
// mixture, the coherent ancilla circuit (ancilla in uniform superposition,
// then the controlled Pauli power), and incoherent sampling of a uniformly
// random string applied to all copies.

#pragma once

#include <optional>
#include <string_view>

#include "sre/rng.hpp"
#include "sre/state.hpp"

namespace sre {

enum class PreparationMethod { kExactMixture, kCoherent, kIncoherent };

std::string_view to_string(PreparationMethod method);
/// Accepts "exact", "exact_mixture", "coherent", "incoherent".
std::optional<PreparationMethod> parse_method(std::string_view text);

/// Which half of the coherent register the purity is read from.
enum class Marginal { kCopies, kAncilla };

std::string_view to_string(Marginal marginal);
/// Accepts "copies" (alias "btilde") and "ancilla".
std::optional<Marginal> parse_marginal(std::string_view text);

/// Exact channel output on alpha n qubits. Accumulates one pure term at a
/// time; never stores the d^2 terms.
DensityMatrix exact_channel_output(const StateVector& psi, int alpha);

/// The 2n + alpha n qubit state  cU (H^{(x) 2n} (x) I) |0>^{2n} |psi>^{alpha}
/// in the standard layout (ancilla first).
StateVector coherent_prepare(const StateVector& psi, int alpha);

/// Reduced state of the ancilla register, built from the closed form
/// d^{-2} sum_{i,j} tr[P_j P_i |psi><psi|]^alpha |i><j|.
DensityMatrix ancilla_marginal(const StateVector& psi, int alpha);

/// Copy-register qubits of coherent_prepare's output.
std::vector<int> copy_register_qubits(int n, int alpha);
/// Ancilla-register qubits of coherent_prepare's output.
std::vector<int> ancilla_register_qubits(int n);

/// Draws P_j^{(x) alpha} |psi>^{(x) alpha} for uniform j. The drawn index is
/// not exposed: a sample is indistinguishable from a draw of the mixture.
class IncoherentSampler {
 public:
  IncoherentSampler(const StateVector& psi, int alpha);

  int num_qubits() const { return psi_.num_qubits() * alpha_; }
  int alpha() const { return alpha_; }
  uint64_t branch_count() const { return uint64_t{1} << (2 * psi_.num_qubits()); }

  StateVector draw(Rng& rng) const;

  /// The branch for string j. Used for exhaustive averages only.
  StateVector branch(uint64_t j) const;

 private:
  StateVector psi_;
  int alpha_;
};

StateVector incoherent_sample(const StateVector& psi, int alpha, Rng& rng);

}  // namespace sre
