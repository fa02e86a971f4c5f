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


#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "sre/gates.hpp"
#include "sre/oracle.hpp"
#include "sre/pauli.hpp"
#include "test_util.hpp"

namespace sre {
namespace {

constexpr double kPi = std::numbers::pi;

// Independent A_alpha: dense <psi|P|psi> from letter matrices.
double brute_a(const StateVector& psi, int alpha) {
  double sum = 0.0;
  const auto& v = psi.amplitudes();
  for (const auto& p : enumerate_paulis(psi.num_qubits())) {
    const double e = (v.adjoint() * testing::dense_pauli(p.letters()) * v)(0, 0).real();
    sum += std::pow(e, 2 * alpha);
  }
  return sum / static_cast<double>(psi.dim());
}

double prob_of(const CharacteristicDistribution& dist, const std::string& label) {
  for (std::size_t j = 0; j < dist.probs.size(); ++j)
    if (dist.label(j) == label) return dist.probs[j];
  ADD_FAILURE() << "no label " << label;
  return -1.0;
}

TEST(CharacteristicDistribution, Examples) {
  const auto zero = characteristic_distribution(StateVector::basis(1, 0));
  EXPECT_NEAR(prob_of(zero, "I"), 0.5, 1e-15);
  EXPECT_NEAR(prob_of(zero, "X"), 0.0, 1e-15);
  EXPECT_NEAR(prob_of(zero, "Y"), 0.0, 1e-15);
  EXPECT_NEAR(prob_of(zero, "Z"), 0.5, 1e-15);

  const auto t = characteristic_distribution(theta_state(kPi / 4));
  EXPECT_NEAR(prob_of(t, "I"), 0.5, 1e-15);
  EXPECT_NEAR(prob_of(t, "X"), 0.25, 1e-15);
  EXPECT_NEAR(prob_of(t, "Y"), 0.25, 1e-15);
  EXPECT_NEAR(prob_of(t, "Z"), 0.0, 1e-15);
}

TEST(CharacteristicDistribution, NormalizedOnHaarStates) {
  for (int n : {1, 2, 3}) {
    for (uint64_t s = 0; s < 100; ++s) {
      const auto dist = characteristic_distribution(testing::haar(n, 1000 * n + s));
      EXPECT_NEAR(dist.total(), 1.0, 1e-10);
      for (double p : dist.probs) EXPECT_GE(p, 0.0);
    }
  }
}

TEST(AAlpha, Examples) {
  const auto psi = testing::haar(2, 31);
  EXPECT_NEAR(a_alpha_exact(psi, 1), 1.0, 1e-12);
  for (int alpha : {1, 2, 3, 7}) EXPECT_NEAR(a_alpha_exact(StateVector::basis(1, 0), alpha), 1.0, 1e-15);
  EXPECT_NEAR(a_alpha_exact(theta_state(kPi / 4), 2), 0.75, 1e-15);
  EXPECT_NEAR(brute_a(theta_state(kPi / 4), 2), 0.75, 1e-15);
  EXPECT_THROW(a_alpha_exact(psi, 0), std::invalid_argument);
}

TEST(AAlpha, MatchesDenseBruteForce) {
  for (int n : {1, 2, 3}) {
    for (int alpha : {1, 2, 3}) {
      const auto psi = testing::haar(n, 40 + n);
      EXPECT_NEAR(a_alpha_exact(psi, alpha), brute_a(psi, alpha), 1e-12);
    }
  }
}

TEST(MAlpha, Examples) {
  EXPECT_NEAR(m_alpha_exact(theta_state(0.0), 2), 0.0, 1e-12);
  EXPECT_NEAR(m_alpha_exact(theta_state(kPi / 4), 2), std::log(4.0 / 3.0), 1e-12);
  EXPECT_NEAR(m_from_a(1.0, 2), 0.0, 0.0);
  EXPECT_NEAR(m_from_a(0.75, 2), 0.28768207245178, 1e-12);
  EXPECT_NEAR(m_from_a(0.75, 3), 0.14384103622589, 1e-12);
  EXPECT_THROW(m_from_a(0.0, 2), std::invalid_argument);
  EXPECT_THROW(m_from_a(-0.1, 2), std::invalid_argument);
  EXPECT_THROW(m_alpha_exact(theta_state(0.3), 1), std::invalid_argument);
}

TEST(MAlpha, Additivity) {
  for (uint64_t s = 0; s < 20; ++s) {
    const auto a = testing::haar(1, 50 + s), b = testing::haar(2, 80 + s);
    for (int alpha : {2, 3})
      EXPECT_NEAR(m_alpha_exact(tensor(a, b), alpha), m_alpha_exact(a, alpha) + m_alpha_exact(b, alpha), 1e-10);
  }
}

TEST(MAlpha, FaithfulOnStabilizers) {
  for (const auto& s : single_qubit_stabilizer_states()) {
    EXPECT_TRUE(is_stabilizer(s));
    for (int alpha : {2, 3, 5}) EXPECT_LT(std::abs(m_alpha_exact(s, alpha)), 1e-12);
  }
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const auto psi = apply_circuit(StateVector::zeros(n), random_clifford_circuit(n, default_clifford_depth(n), rng));
    EXPECT_TRUE(is_stabilizer(psi));
    EXPECT_LT(std::abs(m_alpha_exact(psi, 2)), 1e-12);
  }
  for (double theta : {0.3, 1.0, kPi / 4, 2.0}) {
    EXPECT_FALSE(is_stabilizer(theta_state(theta)));
    EXPECT_GT(m_alpha_exact(theta_state(theta), 2), 1e-6);
  }
}

TEST(MAlpha, CliffordInvariance) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 2;
    const auto psi = testing::haar(n, 300 + trial);
    const auto c = random_clifford_circuit(n, default_clifford_depth(n), rng);
    const auto moved = apply_circuit(psi, c);
    for (int alpha : {2, 3}) EXPECT_NEAR(m_alpha_exact(moved, alpha), m_alpha_exact(psi, alpha), 1e-10);
  }
}

TEST(ClosedForm, MatchesOracleOnGrid) {
  for (int k = 0; k < 32; ++k) {
    const double theta = 2 * kPi * k / 32;
    for (int alpha : {1, 2, 3, 5, 7})
      EXPECT_NEAR(closed_form_a(theta, alpha), a_alpha_exact(theta_state(theta), alpha), 1e-12);
  }
  EXPECT_NEAR(closed_form_a(0.0, 4), 1.0, 0.0);
  EXPECT_NEAR(closed_form_a(kPi / 2, 4), 1.0, 1e-15);
  EXPECT_NEAR(closed_form_a(kPi / 4, 2), 0.75, 1e-15);
}

TEST(SreValue, UndefinedMAtAlphaOne) {
  const auto v = sre_value(theta_state(0.4), 1);
  EXPECT_NEAR(v.a_alpha, 1.0, 1e-12);
  EXPECT_FALSE(v.m_alpha.has_value());
  EXPECT_TRUE(sre_value(theta_state(0.4), 2).m_alpha.has_value());
}

TEST(Gates, CliffordCircuitsAreUnitaryAndDeterministic) {
  Rng r1(5), r2(5);
  const auto c1 = random_clifford_circuit(3, 27, r1);
  const auto c2 = random_clifford_circuit(3, 27, r2);
  ASSERT_EQ(c1.size(), c2.size());
  for (std::size_t i = 0; i < c1.size(); ++i) EXPECT_EQ(c1[i].str(), c2[i].str());
  const auto out = apply_circuit(testing::haar(3, 6), c1);
  EXPECT_NEAR(out.amplitudes().norm(), 1.0, 1e-12);
}

TEST(Gates, SingleGatesMatchDense) {
  const auto psi = testing::haar(2, 9);
  const auto& v = psi.amplitudes();
  const auto id = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd s(2, 2);
  s << 1, 0, 0, std::complex<double>(0, 1);
  Eigen::MatrixXcd cnot = Eigen::MatrixXcd::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;  // control qubit 0
  EXPECT_LT((apply_gate(psi, {GateKind::kH, 1}).amplitudes() - testing::kron(id, testing::hadamard2()) * v).norm(), 1e-12);
  EXPECT_LT((apply_gate(psi, {GateKind::kS, 0}).amplitudes() - testing::kron(s, id) * v).norm(), 1e-12);
  EXPECT_LT((apply_gate(psi, {GateKind::kCnot, 0, 1}).amplitudes() - cnot * v).norm(), 1e-12);
}

}  // namespace
}  // namespace sre
