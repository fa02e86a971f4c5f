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

#include "sre/errors.hpp"
#include "sre/oracle.hpp"
#include "sre/pipeline.hpp"
#include "test_util.hpp"

namespace sre {
namespace {

constexpr double kPi = std::numbers::pi;

EstimationRequest request(StateVector psi, int alpha, PreparationMethod method, uint64_t seed) {
  EstimationRequest r{.state = std::move(psi)};
  r.alpha = alpha;
  r.method = method;
  r.seed = seed;
  return r;
}

TEST(Pipeline, StabilizerInput) {
  for (auto method : {PreparationMethod::kExactMixture, PreparationMethod::kCoherent, PreparationMethod::kIncoherent}) {
    const auto rep = run_estimation(request(StateVector::basis(1, 0), 2, method, 1));
    EXPECT_LE(std::abs(rep.a_hat - 1.0), 0.05) << to_string(method);
    ASSERT_TRUE(rep.m_hat.has_value());
    EXPECT_LE(std::abs(*rep.m_hat), 0.06);
  }
}

TEST(Pipeline, ReportInvariants) {
  const auto rep = run_estimation(request(theta_state(0.4), 3, PreparationMethod::kCoherent, 9));
  EXPECT_EQ(rep.a_hat, 2.0 * rep.gamma_hat);
  EXPECT_EQ(rep.copies_used, 6 * rep.shots_used);
  EXPECT_EQ(rep.shots_used, rep.budget.swap_shots);
  EXPECT_EQ(rep.budget.copies_of_psi, 48000u);
  EXPECT_EQ(rep.seed, 9u);
  EXPECT_EQ(rep.marginal, Marginal::kCopies);
}

TEST(Pipeline, FullBudgetWithinEpsilon) {
  int within = 0;
  const int seeds = 100;
  for (int s = 0; s < seeds; ++s) {
    const auto rep = run_estimation(request(theta_state(kPi / 4), 2, PreparationMethod::kCoherent, s));
    within += std::abs(rep.a_hat - 0.75) <= 0.05;
  }
  EXPECT_GE(within, 90);
}

TEST(Pipeline, ExactModeReproducesOracle) {
  for (int n : {1, 2}) {
    const auto psi = testing::haar(n, 600 + n);
    for (int alpha : {1, 2, 3}) {
      for (auto method : {PreparationMethod::kExactMixture, PreparationMethod::kCoherent,
                          PreparationMethod::kIncoherent}) {
        auto req = request(psi, alpha, method, 0);
        req.exact = true;
        const auto rep = run_estimation(req);
        EXPECT_NEAR(rep.a_hat, a_alpha_exact(psi, alpha), 1e-10) << to_string(method) << " " << alpha;
        EXPECT_EQ(rep.shots_used, 0u);
        if (alpha >= 2) EXPECT_NEAR(*rep.m_hat, m_alpha_exact(psi, alpha), 1e-9);
        else EXPECT_FALSE(rep.m_hat.has_value());
      }
      auto req = request(psi, alpha, PreparationMethod::kCoherent, 0);
      req.exact = true;
      req.marginal = Marginal::kAncilla;
      EXPECT_NEAR(run_estimation(req).a_hat, a_alpha_exact(psi, alpha), 1e-10);
    }
  }
}

TEST(Pipeline, Deterministic) {
  for (auto method : {PreparationMethod::kCoherent, PreparationMethod::kIncoherent}) {
    const auto req = request(testing::haar(1, 3), 2, method, 42);
    const auto a = run_estimation(req);
    const auto b = run_estimation(req);
    EXPECT_EQ(a.gamma_hat, b.gamma_hat);
    EXPECT_EQ(a.gamma_stderr, b.gamma_stderr);
    EXPECT_EQ(a.shots_used, b.shots_used);
  }
}

TEST(Pipeline, CoherentAndIncoherentAgree) {
  const auto psi = testing::haar(1, 21);
  auto coh = request(psi, 2, PreparationMethod::kCoherent, 1);
  auto inc = request(psi, 2, PreparationMethod::kIncoherent, 2);
  coh.shots = inc.shots = 100000;
  const auto a = run_estimation(coh);
  const auto b = run_estimation(inc);
  const double combined = std::hypot(a.a_stderr, b.a_stderr);
  EXPECT_LT(std::abs(a.a_hat - b.a_hat), 3 * combined);
}

TEST(Pipeline, AncillaMarginalEstimatesSameQuantity) {
  const auto psi = testing::haar(1, 22);
  auto req = request(psi, 2, PreparationMethod::kCoherent, 5);
  req.marginal = Marginal::kAncilla;
  req.shots = 100000;
  const auto rep = run_estimation(req);
  EXPECT_EQ(rep.marginal, Marginal::kAncilla);
  EXPECT_LT(std::abs(rep.a_hat - a_alpha_exact(psi, 2)), 4 * rep.a_stderr);
}

TEST(Pipeline, NonPositiveEstimateLeavesMUndefined) {
  // One shot gives gamma in {-1, +1}; find a seed that reads 1.
  for (uint64_t seed = 0; seed < 200; ++seed) {
    auto req = request(testing::haar(2, 1), 2, PreparationMethod::kCoherent, seed);
    req.shots = 1;
    const auto rep = run_estimation(req);
    if (rep.a_hat <= 0.0) {
      EXPECT_FALSE(rep.m_hat.has_value());
      EXPECT_EQ(rep.a_hat, -4.0);
      return;
    }
  }
  FAIL() << "no negative single-shot estimate in 200 seeds";
}

TEST(Pipeline, FullCircuitModeSharesTheLaw) {
  const auto psi = testing::haar(1, 31);
  auto req = request(psi, 2, PreparationMethod::kCoherent, 0);
  const auto source = make_source(req);
  Rng rng(0);
  EXPECT_NEAR(source->zero_probability(rng, ShotMode::kCircuit),
              source->zero_probability(rng, ShotMode::kBernoulli), 1e-12);
  req.shot_mode = ShotMode::kCircuit;
  req.shots = 50000;
  const auto rep = run_estimation(req);
  EXPECT_LT(std::abs(rep.a_hat - a_alpha_exact(psi, 2)), 4 * rep.a_stderr);
}

TEST(Pipeline, Validation) {
  auto bad = request(theta_state(0.1), 0, PreparationMethod::kCoherent, 0);
  EXPECT_THROW(run_estimation(bad), std::invalid_argument);
  auto eps = request(theta_state(0.1), 2, PreparationMethod::kCoherent, 0);
  eps.epsilon = 0.0;
  EXPECT_THROW(run_estimation(eps), std::invalid_argument);
  auto shots = request(theta_state(0.1), 2, PreparationMethod::kCoherent, 0);
  shots.shots = 0;
  EXPECT_THROW(run_estimation(shots), std::invalid_argument);
  EXPECT_THROW(run_estimation(request(testing::haar(3, 1), 5, PreparationMethod::kCoherent, 0)), SizeError);
}

}  // namespace
}  // namespace sre
