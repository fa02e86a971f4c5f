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

#include "sre/channel.hpp"
#include "sre/errors.hpp"
#include "sre/oracle.hpp"
#include "sre/pauli.hpp"
#include "test_util.hpp"

namespace sre {
namespace {

using testing::kron;
using testing::local_product;
using testing::max_abs;
using testing::MatrixXcd;
using testing::pauli2;
using testing::projector2;

const MatrixXcd kId = MatrixXcd::Identity(2, 2);

// The preparation circuit for n = 1, alpha = 2 written gate by gate, with
// wire order: copy 1, copy 2, ancilla a, ancilla b. Each controlled
// gate is P (x) P on the copies, conditioned on (a, b):
//   X on (1, 1), Y on (0, 1), Z on (1, 0).
Eigen::VectorXcd gate_level_circuit(const StateVector& psi) {
  Eigen::VectorXcd state = kron(kron(psi.amplitudes(), psi.amplitudes()),
                                StateVector::zeros(2).amplitudes());
  state = local_product({kId, kId, testing::hadamard2(), testing::hadamard2()}) * state;
  const struct {
    char letter;
    int a, b;
  } gates[] = {{'X', 1, 1}, {'Y', 0, 1}, {'Z', 1, 0}};
  for (const auto& g : gates) {
    const MatrixXcd p = pauli2(g.letter);
    const MatrixXcd on = local_product({p, p, projector2(g.a), projector2(g.b)});
    const MatrixXcd off = MatrixXcd::Identity(16, 16) -
                          local_product({kId, kId, projector2(g.a), projector2(g.b)});
    state = (on + off) * state;
  }
  return state;
}

// This wiring labels ancilla patterns differently from the canonical index
// (I=00, X=01, Z=10, Y=11 as (z, x)). CNOT from b onto a maps one to the
// other; then move the ancilla pair in front of the copies.
Eigen::VectorXcd gate_level_to_standard_layout(const Eigen::VectorXcd& wires) {
  Eigen::VectorXcd out(16);
  for (int s = 0; s < 16; ++s) {
    const int c1 = (s >> 3) & 1, c2 = (s >> 2) & 1, a = (s >> 1) & 1, b = s & 1;
    const int z = a ^ b, x = b;
    out[(z << 3) | (x << 2) | (c1 << 1) | c2] = wires[s];
  }
  return out;
}

TEST(Coherent, MatchesGateLevelCircuit) {
  for (const auto& psi : {StateVector::basis(1, 0), theta_state(std::numbers::pi / 4), testing::haar(1, 3)}) {
    const Eigen::VectorXcd wires = gate_level_circuit(psi);
    const StateVector ours = coherent_prepare(psi, 2);
    EXPECT_LT((gate_level_to_standard_layout(wires) - ours.amplitudes()).norm(), 1e-12);
    // The copies' marginal does not depend on the ancilla labels at all.
    const DensityMatrix gate_copies = reduced_state(StateVector(4, wires), std::vector<int>{0, 1});
    EXPECT_LT(max_abs(gate_copies.matrix() - reduced_state(ours, copy_register_qubits(1, 2)).matrix()), 1e-12);
  }
}

MatrixXcd mixture_oracle(const StateVector& psi, int alpha) {
  const int n = psi.num_qubits();
  const double d = static_cast<double>(psi.dim());
  MatrixXcd sum;
  for (const auto& p : enumerate_paulis(n)) {
    const Eigen::VectorXcd v = testing::dense_pauli(p.letters()) * psi.amplitudes();
    Eigen::VectorXcd power = v;
    for (int c = 1; c < alpha; ++c) power = kron(power, v);
    const MatrixXcd term = testing::outer(power);
    sum = sum.size() ? MatrixXcd(sum + term) : term;
  }
  return sum / (d * d);
}

TEST(ExactChannel, Examples) {
  const auto psi = testing::haar(2, 5);
  EXPECT_LT(max_abs(exact_channel_output(psi, 1).matrix() - DensityMatrix::maximally_mixed(2).matrix()), 1e-12);
  MatrixXcd expect = MatrixXcd::Zero(4, 4);
  expect(0, 0) = expect(3, 3) = 0.5;
  EXPECT_LT(max_abs(exact_channel_output(StateVector::basis(1, 0), 2).matrix() - expect), 1e-15);
  EXPECT_THROW(exact_channel_output(testing::haar(4, 1), 4), SizeError);
}

TEST(ExactChannel, MatchesDenseMixtureAndEncodesA) {
  for (int n : {1, 2}) {
    for (int alpha : {1, 2, 3}) {
      for (uint64_t s = 0; s < 5; ++s) {
        const auto psi = testing::haar(n, 70 + 10 * n + s);
        const auto rho = exact_channel_output(psi, alpha);
        EXPECT_LT(max_abs(rho.matrix() - mixture_oracle(psi, alpha)), 1e-12);
        EXPECT_NEAR(static_cast<double>(psi.dim()) * purity(rho), a_alpha_exact(psi, alpha), 1e-10);
        EXPECT_TRUE(rho.is_positive());
      }
    }
  }
}

TEST(ExactChannel, LocalTwirlAndCopyReduction) {
  const auto psi = testing::haar(2, 77);
  const auto rho = exact_channel_output(psi, 3);
  for (int block = 0; block < 3; ++block) {
    const std::vector<int> keep = {2 * block, 2 * block + 1};
    EXPECT_LT(max_abs(partial_trace(rho, keep).matrix() - DensityMatrix::maximally_mixed(2).matrix()), 1e-10);
  }
  EXPECT_LT(max_abs(partial_trace(rho, std::vector<int>{0, 1, 4, 5}).matrix() -
                    exact_channel_output(psi, 2).matrix()),
            1e-10);
}

TEST(Coherent, CopiesMarginalEqualsMixture) {
  for (int n : {1, 2}) {
    for (int alpha : {1, 2, 3}) {
      const auto psi = testing::haar(n, 90 + 3 * n + alpha);
      const auto prepared = coherent_prepare(psi, alpha);
      EXPECT_EQ(prepared.num_qubits(), (2 + alpha) * n);
      EXPECT_NEAR(prepared.amplitudes().norm(), 1.0, 1e-12);
      const auto copies = reduced_state(prepared, copy_register_qubits(n, alpha));
      EXPECT_LT(max_abs(copies.matrix() - exact_channel_output(psi, alpha).matrix()), 1e-10);
      const auto anc = reduced_state(prepared, ancilla_register_qubits(n));
      EXPECT_NEAR(purity(anc), purity(copies), 1e-10);
    }
  }
  EXPECT_THROW(coherent_prepare(testing::haar(3, 1), 5), SizeError);
}

TEST(AncillaMarginal, ClosedFormMatchesPartialTrace) {
  for (int n : {1, 2}) {
    for (int alpha : {1, 2, 3}) {
      const auto psi = testing::haar(n, 110 + 3 * n + alpha);
      const auto closed = ancilla_marginal(psi, alpha);
      const auto traced = reduced_state(coherent_prepare(psi, alpha), ancilla_register_qubits(n));
      EXPECT_LT(max_abs(closed.matrix() - traced.matrix()), 1e-10);
      EXPECT_NEAR(static_cast<double>(psi.dim()) * purity(closed), a_alpha_exact(psi, alpha), 1e-10);
    }
  }
  EXPECT_NEAR(purity(ancilla_marginal(testing::haar(2, 1), 1)), 0.25, 1e-12);
}

TEST(AncillaMarginal, EntriesFollowProductTraces) {
  // Entry (i, j) = d^-2 tr[P_j P_i psi]^alpha, evaluated with dense matrices.
  const auto psi = testing::haar(1, 8);
  const int alpha = 3;
  const auto rho = ancilla_marginal(psi, alpha);
  const auto all = enumerate_paulis(1);
  const MatrixXcd proj = testing::outer(psi.amplitudes());
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const MatrixXcd pj = testing::dense_pauli(all[j].letters());
      const MatrixXcd pi = testing::dense_pauli(all[i].letters());
      const std::complex<double> t = (pj * pi * proj).trace();
      EXPECT_LT(std::abs(rho(i, j) - std::pow(t, alpha) / 4.0), 1e-12) << i << "," << j;
    }
  }
}

TEST(Incoherent, SamplesArePureBranches) {
  const auto psi = testing::haar(1, 4);
  const IncoherentSampler sampler(psi, 2);
  EXPECT_LT((sampler.branch(0).amplitudes() - tensor_power(psi, 2).amplitudes()).norm(), 1e-15);
  Rng rng(1);
  for (int k = 0; k < 20; ++k) {
    const auto s = incoherent_sample(psi, 2, rng);
    EXPECT_EQ(s.num_qubits(), 2);
    EXPECT_NEAR(purity(s.projector()), 1.0, 1e-12);
  }
}

TEST(Incoherent, ExhaustiveAverageIsMixture) {
  for (int n : {1, 2}) {
    const auto psi = testing::haar(n, 130 + n);
    const IncoherentSampler sampler(psi, 2);
    MatrixXcd avg = MatrixXcd::Zero(1 << (2 * n), 1 << (2 * n));
    for (uint64_t j = 0; j < sampler.branch_count(); ++j) avg += testing::outer(sampler.branch(j).amplitudes());
    avg /= static_cast<double>(sampler.branch_count());
    EXPECT_LT(max_abs(avg - exact_channel_output(psi, 2).matrix()), 1e-12);
  }
}

TEST(Incoherent, DrawsAreUniform) {
  // Distinguish the four branches of |0>, alpha = 1 by their amplitudes.
  const auto psi = testing::haar(1, 99);
  const IncoherentSampler sampler(psi, 1);
  Rng rng(123);
  int counts[4] = {0, 0, 0, 0};
  const int draws = 40000;
  for (int k = 0; k < draws; ++k) {
    const auto s = sampler.draw(rng);
    for (uint64_t j = 0; j < 4; ++j) {
      if ((s.amplitudes() - sampler.branch(j).amplitudes()).norm() < 1e-12) {
        ++counts[j];
        break;
      }
    }
  }
  for (int c : counts) EXPECT_NEAR(c, draws / 4, 5 * std::sqrt(draws * 0.25 * 0.75));
}

TEST(Method, ParseAndPrint) {
  EXPECT_EQ(parse_method("exact"), PreparationMethod::kExactMixture);
  EXPECT_EQ(parse_method("exact_mixture"), PreparationMethod::kExactMixture);
  EXPECT_EQ(parse_method("coherent"), PreparationMethod::kCoherent);
  EXPECT_EQ(parse_method("incoherent"), PreparationMethod::kIncoherent);
  EXPECT_FALSE(parse_method("nope").has_value());
  EXPECT_EQ(parse_marginal("btilde"), Marginal::kCopies);
  EXPECT_EQ(parse_marginal("ancilla"), Marginal::kAncilla);
  EXPECT_EQ(to_string(PreparationMethod::kIncoherent), "incoherent");
}

}  // namespace
}  // namespace sre
