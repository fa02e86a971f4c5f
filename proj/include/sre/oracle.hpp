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

// Exact stabilizer Renyi entropies.
//
//   A_alpha(psi) = d^{-1} sum_j <psi|P_j|psi>^{2 alpha}
//   M_alpha(psi) = (1 - alpha)^{-1} ln A_alpha(psi)      (alpha >= 2)
//
// These are the noise-free reference values every estimator is checked
// against.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sre/state.hpp"

namespace sre {

inline constexpr double kStabilizerTolerance = 1e-8;

/// {d^{-1} <psi|P_j|psi>^2} in canonical Pauli order (see pauli.hpp).
struct CharacteristicDistribution {
  int num_qubits = 0;
  std::vector<double> probs;

  /// Letters of the string at canonical index j, e.g. "XZ".
  std::string label(std::size_t j) const;
  double total() const;
};

CharacteristicDistribution characteristic_distribution(const StateVector& psi);

double a_alpha_exact(const StateVector& psi, int alpha);
double m_alpha_exact(const StateVector& psi, int alpha);

/// (1 - alpha)^{-1} ln a. Requires a > 0 and alpha >= 2.
double m_from_a(double a, int alpha);

/// A_alpha of theta_state(theta): (1 + cos^{2 alpha} theta + sin^{2 alpha} theta) / 2.
double closed_form_a(double theta, int alpha);

/// True iff exactly d entries of the characteristic distribution are within
/// `tol` of 1/d and the remaining d^2 - d are within `tol` of 0.
bool is_stabilizer(const StateVector& psi, double tol = kStabilizerTolerance);

struct SreValue {
  int alpha = 0;
  double a_alpha = 0.0;
  std::optional<double> m_alpha;  // undefined for alpha == 1
};

SreValue sre_value(const StateVector& psi, int alpha);

}  // namespace sre
