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

// Swap-test purity estimation and copy budgets.
//
// One swap-test shot consumes two independent preparations rho, sigma and
// returns a bit with P(0) = (1 + tr[rho sigma]) / 2. Mapping 0 -> +1 and
// 1 -> -1, the shot mean is an unbiased estimator of tr[rho sigma], which is
// the purity when both preparations come from the same source.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "sre/channel.hpp"
#include "sre/rng.hpp"
#include "sre/state.hpp"

namespace sre {

/// Copy budget for an additive error `epsilon` on A_alpha with failure
/// probability `delta`:
///   copies_of_psi = ceil(alpha d^2 / (epsilon^2 delta))
///   swap_shots    = ceil(copies_of_psi / (2 alpha))
///   tau           = epsilon / d   (additive error on the purity)
struct ShotBudget {
  int alpha = 0;
  uint64_t dim = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  double tau = 0.0;
  uint64_t copies_of_psi = 0;
  uint64_t swap_shots = 0;
};

ShotBudget copies_required(int alpha, uint64_t dim, double epsilon, double delta);

/// ceil(x), except that values within 1e-9 relative of an integer snap to it
/// (so that e.g. 8 / (0.05^2 * 0.1) gives 32000, not 32001).
uint64_t ceil_count(double x);

/// How a shot's outcome law is obtained.
enum class ShotMode {
  /// Bernoulli((1 + tr[rho sigma]) / 2) from the prepared states.
  kBernoulli,
  /// Simulate control qubit, H, controlled-SWAP, H on a purification of the
  /// two preparations and read the control's P(0).
  kCircuit,
};

/// Two-outcome swap test on an explicit pure register: prepends a control
/// qubit, applies H, swaps the qubit groups `left` and `right` conditioned
/// on the control, applies H, and returns P(control = 0).
double swap_test_zero_probability(const StateVector& joint, std::span<const int> left,
                                  std::span<const int> right);

/// A source of independent preparations for the swap test.
class PreparationSource {
 public:
  virtual ~PreparationSource() = default;

  /// Qubits of one preparation.
  virtual int num_qubits() const = 0;

  /// P(0) of one swap-test shot on two fresh preparations.
  virtual double zero_probability(Rng& rng, ShotMode mode) const = 0;

  /// True if zero_probability never consumes randomness.
  virtual bool is_deterministic() const = 0;

  /// The exact purity of the (ensemble) preparation.
  virtual double exact_purity() const = 0;
};

/// A fixed mixed state. An explicit purification may be supplied for circuit
/// mode; otherwise one is built from the eigendecomposition.
class MixedStateSource final : public PreparationSource {
 public:
  struct Purification {
    StateVector state;
    std::vector<int> system;  // qubits of `state` holding rho
  };

  explicit MixedStateSource(DensityMatrix rho, std::optional<Purification> purification = {});

  int num_qubits() const override { return rho_.num_qubits(); }
  double zero_probability(Rng& rng, ShotMode mode) const override;
  bool is_deterministic() const override { return true; }
  double exact_purity() const override { return purity_; }
  const DensityMatrix& state() const { return rho_; }

 private:
  double circuit_zero_probability() const;

  DensityMatrix rho_;
  double purity_;
  std::optional<Purification> purification_;
};

/// Independent pure samples from the incoherent preparation; every shot draws
/// two Pauli indices.
class SampledStateSource final : public PreparationSource {
 public:
  explicit SampledStateSource(IncoherentSampler sampler) : sampler_(std::move(sampler)) {}

  int num_qubits() const override { return sampler_.num_qubits(); }
  double zero_probability(Rng& rng, ShotMode mode) const override;
  bool is_deterministic() const override { return false; }
  /// Exhaustive average over all pairs of branches.
  double exact_purity() const override;

 private:
  IncoherentSampler sampler_;
};

/// One swap-test shot. Returns the measured bit (0 or 1).
int swap_test_shot(const PreparationSource& source, Rng& rng, ShotMode mode = ShotMode::kBernoulli);

struct PurityEstimate {
  double gamma_hat = 0.0;
  double std_error = 0.0;  // sample standard deviation of the +-1 outcomes / sqrt(shots)
  uint64_t shots = 0;
  uint64_t zeros = 0;
};

/// Mean of +-1-mapped swap-test outcomes over `shots` shots.
///
/// Shots run in fixed chunks of kShotChunk; chunk c uses the stream
/// stream_seed(master, c) with master = rng(). Results are therefore
/// independent of the number of worker threads.
PurityEstimate estimate_purity(const PreparationSource& source, uint64_t shots, Rng& rng,
                               ShotMode mode = ShotMode::kBernoulli);

inline constexpr uint64_t kShotChunk = 1 << 14;

/// Result of one estimation run.
struct EstimateReport {
  int num_qubits = 0;
  int alpha = 0;
  double gamma_hat = 0.0;
  double gamma_stderr = 0.0;
  double a_hat = 0.0;  // d * gamma_hat, never clipped
  double a_stderr = 0.0;
  std::optional<double> m_hat;  // empty when alpha < 2 or a_hat <= 0
  uint64_t shots_used = 0;
  uint64_t copies_used = 0;  // 2 alpha shots_used
  uint64_t seed = 0;
  PreparationMethod method = PreparationMethod::kCoherent;
  Marginal marginal = Marginal::kCopies;
  ShotMode shot_mode = ShotMode::kBernoulli;
  bool exact = false;  // analytic purity, zero shots
  ShotBudget budget;
};

}  // namespace sre
