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


#include "sre/pipeline.hpp"

#include <stdexcept>

#include "sre/oracle.hpp"

namespace sre {

void EstimationRequest::validate() const {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (shots && *shots == 0) throw std::invalid_argument("shots must be >= 1");
  // Range checks on epsilon and delta live with the budget.
  (void)copies_required(alpha, state.dim(), epsilon, delta);
}

std::unique_ptr<PreparationSource> make_source(const EstimationRequest& request) {
  const StateVector& psi = request.state;
  switch (request.method) {
    case PreparationMethod::kExactMixture:
      return std::make_unique<MixedStateSource>(exact_channel_output(psi, request.alpha));
    case PreparationMethod::kCoherent: {
      const int n = psi.num_qubits();
      StateVector prepared = coherent_prepare(psi, request.alpha);
      std::vector<int> keep = request.marginal == Marginal::kCopies
                                  ? copy_register_qubits(n, request.alpha)
                                  : ancilla_register_qubits(n);
      DensityMatrix rho = reduced_state(prepared, keep);
      return std::make_unique<MixedStateSource>(
          std::move(rho), MixedStateSource::Purification{std::move(prepared), std::move(keep)});
    }
    case PreparationMethod::kIncoherent:
      return std::make_unique<SampledStateSource>(IncoherentSampler(psi, request.alpha));
  }
  throw std::logic_error("unknown preparation method");
}

EstimateReport run_estimation(const EstimationRequest& request) {
  request.validate();
  EstimateReport report;
  report.num_qubits = request.state.num_qubits();
  report.alpha = request.alpha;
  report.seed = request.seed;
  report.method = request.method;
  report.marginal = request.marginal;
  report.shot_mode = request.shot_mode;
  report.exact = request.exact;
  report.budget = copies_required(request.alpha, request.state.dim(), request.epsilon,
                                  request.delta);

  const auto source = make_source(request);
  if (request.exact) {
    report.gamma_hat = source->exact_purity();
  } else {
    Rng rng(request.seed);
    const uint64_t shots = request.shots.value_or(report.budget.swap_shots);
    const PurityEstimate est = estimate_purity(*source, shots, rng, request.shot_mode);
    report.gamma_hat = est.gamma_hat;
    report.gamma_stderr = est.std_error;
    report.shots_used = est.shots;
    report.copies_used = 2 * static_cast<uint64_t>(request.alpha) * est.shots;
  }
  const double d = static_cast<double>(request.state.dim());
  report.a_hat = d * report.gamma_hat;
  report.a_stderr = d * report.gamma_stderr;
  if (request.alpha >= 2 && report.a_hat > 0.0) report.m_hat = m_from_a(report.a_hat, request.alpha);
  return report;
}

}  // namespace sre
