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

#include "sre/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sre/errors.hpp"

namespace sre {

std::string Gate::str() const {
  switch (kind) {
    case GateKind::kH:
      return "H " + std::to_string(q0);
    case GateKind::kS:
      return "S " + std::to_string(q0);
    case GateKind::kCnot:
      return "CNOT " + std::to_string(q0) + " " + std::to_string(q1);
  }
  return "?";
}

StateVector apply_gate(const StateVector& psi, const Gate& gate) {
  const int n = psi.num_qubits();
  auto check = [n](int q) {
    if (q < 0 || q >= n) throw DimensionError("apply_gate: qubit " + std::to_string(q) + " out of range");
  };
  check(gate.q0);
  if (gate.kind == GateKind::kH) {
    const int targets[] = {gate.q0};
    return hadamard_layer(psi, targets);
  }
  Eigen::VectorXcd amps = psi.amplitudes();
  const uint64_t m0 = uint64_t{1} << (n - 1 - gate.q0);
  if (gate.kind == GateKind::kS) {
    for (uint64_t i = 0; i < psi.dim(); ++i) {
      if (i & m0) amps[static_cast<Eigen::Index>(i)] *= cplx(0.0, 1.0);
    }
    return StateVector(n, std::move(amps));
  }
  check(gate.q1);
  if (gate.q1 == gate.q0) throw DimensionError("apply_gate: CNOT control equals target");
  const uint64_t m1 = uint64_t{1} << (n - 1 - gate.q1);
  for (uint64_t i = 0; i < psi.dim(); ++i) {
    if ((i & m0) && !(i & m1)) std::swap(amps[static_cast<Eigen::Index>(i)], amps[static_cast<Eigen::Index>(i | m1)]);
  }
  return StateVector(n, std::move(amps));
}

StateVector apply_circuit(const StateVector& psi, const Circuit& circuit) {
  StateVector out = psi;
  for (const auto& g : circuit) out = apply_gate(out, g);
  return out;
}

Circuit random_clifford_circuit(int num_qubits, int depth, Rng& rng) {
  check_qubit_count(num_qubits, kMaxStateQubits, "random_clifford_circuit");
  const uint64_t kinds = num_qubits > 1 ? 3 : 2;
  Circuit circuit;
  circuit.reserve(static_cast<std::size_t>(depth));
  for (int k = 0; k < depth; ++k) {
    const auto kind = static_cast<GateKind>(rng.below(kinds));
    const int q0 = static_cast<int>(rng.below(static_cast<uint64_t>(num_qubits)));
    if (kind != GateKind::kCnot) {
      circuit.push_back({kind, q0});
      continue;
    }
    int q1 = static_cast<int>(rng.below(static_cast<uint64_t>(num_qubits - 1)));
    if (q1 >= q0) ++q1;
    circuit.push_back({kind, q0, q1});
  }
  return circuit;
}

StateVector theta_state(double theta) {
  Eigen::VectorXcd amps(2);
  const double h = std::numbers::sqrt2 / 2.0;
  amps << h, h * std::polar(1.0, theta);
  return StateVector(1, std::move(amps));
}

StateVector haar_random_state(int num_qubits, Rng& rng) {
  check_qubit_count(num_qubits, kMaxStateQubits, "haar_random_state");
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(uint64_t{1} << num_qubits));
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    amps[i] = cplx(re, im);
  }
  return StateVector::normalized(num_qubits, std::move(amps));
}

std::array<StateVector, 6> single_qubit_stabilizer_states() {
  const double h = std::numbers::sqrt2 / 2.0;
  auto make = [](cplx a, cplx b) {
    Eigen::VectorXcd v(2);
    v << a, b;
    return StateVector(1, std::move(v));
  };
  return {make(1, 0), make(0, 1), make(h, h), make(h, -h), make(h, cplx(0, h)), make(h, cplx(0, -h))};
}

}  // namespace sre
