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


#include <array>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "sre/oracle.hpp"
#include "sre/purity.hpp"
#include "test_util.hpp"

namespace sre {
namespace {

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

DensityMatrix mixed_qubit(double p) {
  // p |0><0| + (1 - p) |+><+|
  return DensityMatrix(1, p * StateVector::basis(1, 0).projector().matrix() +
                              (1 - p) * theta_state(0.0).projector().matrix());
}

TEST(Budget, Examples) {
  const auto b = copies_required(2, 2, 0.05, 0.1);
  EXPECT_EQ(b.copies_of_psi, 32000u);
  EXPECT_EQ(b.swap_shots, 8000u);
  EXPECT_DOUBLE_EQ(b.tau, 0.025);
  EXPECT_EQ(copies_required(1, 2, 1.0, 1.0).copies_of_psi, 4u);
  EXPECT_EQ(copies_required(1, 2, 1.0, 1.0).swap_shots, 2u);
  for (int alpha = 1; alpha <= 7; ++alpha)
    EXPECT_EQ(copies_required(alpha, 2, 0.05, 0.1).copies_of_psi, 16000u * alpha);
  // Rounding up of shots: 3 * 4 / (0.3^2 * 0.5) = 266.67 -> 267 copies -> 45 shots.
  const auto odd = copies_required(3, 2, 0.3, 0.5);
  EXPECT_EQ(odd.copies_of_psi, 267u);
  EXPECT_EQ(odd.swap_shots, 45u);
}

TEST(Budget, RejectsOutOfRange) {
  EXPECT_THROW(copies_required(2, 2, 0.0, 0.1), std::invalid_argument);
  EXPECT_THROW(copies_required(2, 2, 1.5, 0.1), std::invalid_argument);
  EXPECT_THROW(copies_required(2, 2, 0.1, 0.0), std::invalid_argument);
  EXPECT_THROW(copies_required(2, 2, 0.1, -1.0), std::invalid_argument);
  EXPECT_THROW(copies_required(0, 2, 0.1, 0.1), std::invalid_argument);
}

TEST(Budget, CeilCount) {
  EXPECT_EQ(ceil_count(32000.000000001), 32000u);
  EXPECT_EQ(ceil_count(31999.99999999), 32000u);
  EXPECT_EQ(ceil_count(32000.5), 32001u);
  EXPECT_EQ(ceil_count(0.2), 1u);
}

TEST(SwapTest, ZeroProbabilityExamples) {
  const auto pure = testing::haar(2, 1);
  Rng rng(0);
  EXPECT_DOUBLE_EQ(MixedStateSource(pure.projector()).zero_probability(rng, ShotMode::kBernoulli), 1.0);
  EXPECT_NEAR(MixedStateSource(DensityMatrix::maximally_mixed(1)).zero_probability(rng, ShotMode::kBernoulli), 0.75, 1e-15);
  const std::array<int, 1> l{0}, r{1};
  EXPECT_NEAR(swap_test_zero_probability(tensor(StateVector::basis(1, 0), StateVector::basis(1, 1)), l, r), 0.5, 1e-15);
  EXPECT_NEAR(swap_test_zero_probability(tensor(pure, pure), std::array{0, 1}, std::array{2, 3}), 1.0, 1e-12);
  const auto a = testing::haar(2, 2), b = testing::haar(2, 3);
  EXPECT_NEAR(swap_test_zero_probability(tensor(a, b), std::array{0, 1}, std::array{2, 3}),
              0.5 * (1 + overlap(a, b)), 1e-12);
  // Swapping interleaved groups gives the same law.
  EXPECT_NEAR(swap_test_zero_probability(tensor(a, b), std::array{1, 0}, std::array{3, 2}),
              0.5 * (1 + overlap(a, b)), 1e-12);
}

TEST(SwapTest, CircuitModeMatchesBernoulliLaw) {
  Rng rng(4);
  for (double p : {0.0, 0.3, 0.9}) {
    const MixedStateSource source(mixed_qubit(p));
    EXPECT_NEAR(source.zero_probability(rng, ShotMode::kCircuit),
                source.zero_probability(rng, ShotMode::kBernoulli), 1e-12);
  }
  const MixedStateSource mixed2(DensityMatrix::maximally_mixed(2));
  EXPECT_NEAR(mixed2.zero_probability(rng, ShotMode::kCircuit), 0.5 * (1 + 0.25), 1e-12);
}

TEST(SwapTest, ShotsFollowLaw) {
  const MixedStateSource source(DensityMatrix::maximally_mixed(1));
  Rng rng(9);
  int zeros = 0;
  const int shots = 20000;
  for (int k = 0; k < shots; ++k) zeros += swap_test_shot(source, rng) == 0;
  EXPECT_NEAR(zeros / static_cast<double>(shots), 0.75, 5 * std::sqrt(0.75 * 0.25 / shots));
  const MixedStateSource pure(testing::haar(1, 1).projector());
  for (int k = 0; k < 100; ++k) EXPECT_EQ(swap_test_shot(pure, rng), 0);
}

TEST(EstimatePurity, Examples) {
  Rng rng(1);
  const MixedStateSource pure(testing::haar(2, 7).projector());
  for (uint64_t shots : {17u, 100000u}) {
    const auto est = estimate_purity(pure, shots, rng);
    EXPECT_EQ(est.gamma_hat, 1.0);
    EXPECT_EQ(est.std_error, 0.0);
  }
  // One shot has no sample variance; the bound for +-1 outcomes is used.
  const auto one = estimate_purity(pure, 1, rng);
  EXPECT_EQ(one.gamma_hat, 1.0);
  EXPECT_EQ(one.std_error, 1.0);
  Rng rng2(2024);
  const auto half = estimate_purity(MixedStateSource(DensityMatrix::maximally_mixed(1)), 100000, rng2);
  EXPECT_NEAR(half.gamma_hat, 0.5, 0.01);
  EXPECT_THROW(estimate_purity(pure, 0, rng), std::invalid_argument);
}

TEST(EstimatePurity, DeterministicAcrossChunking) {
  const MixedStateSource source(mixed_qubit(0.4));
  Rng a(77), b(77);
  const auto ea = estimate_purity(source, 3 * kShotChunk + 5, a);
  const auto eb = estimate_purity(source, 3 * kShotChunk + 5, b);
  EXPECT_EQ(ea.zeros, eb.zeros);
  EXPECT_EQ(ea.gamma_hat, eb.gamma_hat);
  EXPECT_GE(ea.gamma_hat, -1.0);
  EXPECT_LE(ea.gamma_hat, 1.0);
}

TEST(EstimatePurity, Unbiased) {
  const DensityMatrix rho = mixed_qubit(0.3);
  const double truth = purity(rho);
  const MixedStateSource source(rho);
  Rng rng(5);
  const int reps = 10000;
  const uint64_t shots = 50;
  double sum = 0, sum_sq = 0;
  for (int r = 0; r < reps; ++r) {
    const double g = estimate_purity(source, shots, rng).gamma_hat;
    sum += g;
    sum_sq += g * g;
  }
  const double mean = sum / reps;
  const double se = std::sqrt((sum_sq / reps - mean * mean) / reps);
  EXPECT_LT(std::abs(mean - truth), 3 * se);
}

TEST(EstimatePurity, StderrScalesAsInverseRootShots) {
  const MixedStateSource source(mixed_qubit(0.5));
  const std::vector<double> shots = {1e2, 1e3, 1e4, 1e5};
  std::vector<double> spread;
  for (double s : shots) {
    // Empirical spread over repetitions, not the plug-in formula.
    Rng rng(static_cast<uint64_t>(s));
    const int reps = 400;
    double sum = 0, sum_sq = 0;
    for (int r = 0; r < reps; ++r) {
      const double g = estimate_purity(source, static_cast<uint64_t>(s), rng).gamma_hat;
      sum += g;
      sum_sq += g * g;
    }
    const double mean = sum / reps;
    spread.push_back(std::sqrt(sum_sq / reps - mean * mean));
  }
  EXPECT_NEAR(loglog_slope(shots, spread), -0.5, 0.05);
}

TEST(SampledSource, ExactPurityAndEstimate) {
  const auto psi = testing::haar(1, 55);
  const SampledStateSource source(IncoherentSampler(psi, 2));
  EXPECT_NEAR(source.exact_purity(), a_alpha_exact(psi, 2) / 2.0, 1e-12);
  Rng rng(8);
  const auto est = estimate_purity(source, 100000, rng);
  EXPECT_LT(std::abs(est.gamma_hat - source.exact_purity()), 4 * est.std_error);
  Rng c1(3), c2(3);
  EXPECT_NEAR(source.zero_probability(c1, ShotMode::kCircuit),
              source.zero_probability(c2, ShotMode::kBernoulli), 1e-12);
}

}  // namespace
}  // namespace sre
