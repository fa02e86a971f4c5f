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

// Test-state factories and a minimal Clifford gate set.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "sre/rng.hpp"
#include "sre/state.hpp"

namespace sre {

enum class GateKind { kH, kS, kCnot };

struct Gate {
  GateKind kind;
  int q0;
  int q1 = -1;  // CNOT target

  std::string str() const;
};

using Circuit = std::vector<Gate>;

StateVector apply_gate(const StateVector& psi, const Gate& gate);
StateVector apply_circuit(const StateVector& psi, const Circuit& circuit);

/// `depth` gates drawn uniformly from {H, S, CNOT} on uniformly chosen
/// qubits (only H and S when n == 1).
Circuit random_clifford_circuit(int num_qubits, int depth, Rng& rng);

/// Default depth used for randomized Clifford tests: 3 n^2.
inline int default_clifford_depth(int num_qubits) { return 3 * num_qubits * num_qubits; }

/// (|0> + e^{i theta}|1>) / sqrt(2).
StateVector theta_state(double theta);

/// Normalized vector of independent standard complex Gaussians.
StateVector haar_random_state(int num_qubits, Rng& rng);

/// |0>, |1>, |+>, |->, |+i>, |-i>.
std::array<StateVector, 6> single_qubit_stabilizer_states();

}  // namespace sre
