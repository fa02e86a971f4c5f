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

#pragma once

#include <cstdint>
#include <optional>

#include "sre/channel.hpp"
#include "sre/purity.hpp"
#include "sre/state.hpp"

namespace sre {

/// Everything needed to estimate A_alpha (and M_alpha for alpha >= 2).
struct EstimationRequest {
  StateVector state;
  int alpha = 2;
  double epsilon = 0.05;
  double delta = 0.1;
  PreparationMethod method = PreparationMethod::kCoherent;
  uint64_t seed = 0;
  /// Coherent method only: which marginal's purity is measured.
  Marginal marginal = Marginal::kCopies;
  ShotMode shot_mode = ShotMode::kBernoulli;
  /// Report the analytic purity of the prepared state instead of sampling.
  bool exact = false;
  /// Overrides the budget's shot count.
  std::optional<uint64_t> shots;

  void validate() const;
};

/// Prepare, measure the purity gamma, output A = d gamma and
/// M = (1 - alpha)^{-1} ln A. Deterministic given the request.
EstimateReport run_estimation(const EstimationRequest& request);

/// The swap-test source a request would sample from.
std::unique_ptr<PreparationSource> make_source(const EstimationRequest& request);

}  // namespace sre
