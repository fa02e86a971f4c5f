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


#include "sre/purity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "parallel.hpp"
#include "sre/errors.hpp"

namespace sre {

namespace {

void check_budget_args(int alpha, uint64_t dim, double epsilon, double delta) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  // epsilon = delta = 1 is accepted so that the trivial budget is expressible.
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1]");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in (0, 1]");
}

std::vector<int> iota_qubits(int first, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  std::iota(out.begin(), out.end(), first);
  return out;
}

// |Phi> = sum_i sqrt(lambda_i) |e_i>|i> on 2m qubits; system = first m.
MixedStateSource::Purification purify(const DensityMatrix& rho) {
  const int m = rho.num_qubits();
  check_qubit_count(2 * m, kMaxStateQubits, "purification");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho.matrix());
  const Eigen::Index d = eig.eigenvalues().size();
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double lambda = std::max(0.0, eig.eigenvalues()[i]);
    if (lambda == 0.0) continue;
    const double w = std::sqrt(lambda);
    for (Eigen::Index s = 0; s < d; ++s) amps[s * d + i] += w * eig.eigenvectors()(s, i);
  }
  return {StateVector::normalized(2 * m, std::move(amps)), iota_qubits(0, m)};
}

}  // namespace

uint64_t ceil_count(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("ceil_count: bad value");
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return static_cast<uint64_t>(r);
  return static_cast<uint64_t>(std::ceil(x));
}

ShotBudget copies_required(int alpha, uint64_t dim, double epsilon, double delta) {
  check_budget_args(alpha, dim, epsilon, delta);
  ShotBudget b;
  b.alpha = alpha;
  b.dim = dim;
  b.epsilon = epsilon;
  b.delta = delta;
  b.tau = epsilon / static_cast<double>(dim);
  const double d = static_cast<double>(dim);
  b.copies_of_psi = ceil_count(alpha * d * d / (epsilon * epsilon * delta));
  const uint64_t per_shot = 2 * static_cast<uint64_t>(alpha);
  b.swap_shots = (b.copies_of_psi + per_shot - 1) / per_shot;
  return b;
}

double swap_test_zero_probability(const StateVector& joint, std::span<const int> left,
                                  std::span<const int> right) {
  const int n = joint.num_qubits();
  if (left.size() != right.size()) throw DimensionError("swap test: groups differ in size");
  check_qubit_count(n + 1, kMaxStateQubits, "swap test register");
  // Control is qubit 0 of the enlarged register; register qubit q becomes q + 1.
  StateVector reg = tensor(StateVector::zeros(1), joint);
  const std::array<int, 1> control{0};
  reg = hadamard_layer(reg, control);

  const int total = n + 1;
  auto bit = [total](int q) { return uint64_t{1} << (total - 1 - q); };
  const uint64_t control_bit = bit(0);
  Eigen::VectorXcd amps = reg.amplitudes();
  const uint64_t dim = reg.dim();
  for (uint64_t s = 0; s < dim; ++s) {
    if (!(s & control_bit)) continue;
    uint64_t t = s;
    for (std::size_t k = 0; k < left.size(); ++k) {
      const uint64_t bl = bit(left[k] + 1), br = bit(right[k] + 1);
      const bool vl = t & bl, vr = t & br;
      if (vl != vr) t ^= bl | br;
    }
    // Each swapped pair is visited twice; act once.
    if (t > s) std::swap(amps[static_cast<Eigen::Index>(s)], amps[static_cast<Eigen::Index>(t)]);
  }
  reg = hadamard_layer(StateVector(total, std::move(amps)), control);

  double p0 = 0.0;
  for (uint64_t s = 0; s < dim; ++s)
    if (!(s & control_bit)) p0 += std::norm(reg[s]);
  return std::clamp(p0, 0.0, 1.0);
}

MixedStateSource::MixedStateSource(DensityMatrix rho, std::optional<Purification> purification)
    : rho_(std::move(rho)), purity_(purity(rho_)), purification_(std::move(purification)) {
  if (purification_ && purification_->system.size() != static_cast<std::size_t>(rho_.num_qubits()))
    throw DimensionError("purification system size does not match the state");
}

double MixedStateSource::zero_probability(Rng&, ShotMode mode) const {
  if (mode == ShotMode::kCircuit) return circuit_zero_probability();
  return 0.5 * (1.0 + purity_);
}

double MixedStateSource::circuit_zero_probability() const {
  const Purification pure = purification_ ? *purification_ : purify(rho_);
  const int p = pure.state.num_qubits();
  check_qubit_count(2 * p + 1, kMaxStateQubits, "circuit-mode swap test");
  std::vector<int> right(pure.system.size());
  for (std::size_t k = 0; k < right.size(); ++k) right[k] = pure.system[k] + p;
  return swap_test_zero_probability(tensor(pure.state, pure.state), pure.system, right);
}

double SampledStateSource::zero_probability(Rng& rng, ShotMode mode) const {
  const StateVector a = sampler_.draw(rng);
  const StateVector b = sampler_.draw(rng);
  if (mode == ShotMode::kBernoulli) return 0.5 * (1.0 + overlap(a, b));
  const int m = a.num_qubits();
  const std::vector<int> left = iota_qubits(0, m), right = iota_qubits(m, m);
  return swap_test_zero_probability(tensor(a, b), left, right);
}

double SampledStateSource::exact_purity() const {
  const uint64_t count = sampler_.branch_count();
  std::vector<StateVector> branches;
  branches.reserve(count);
  for (uint64_t j = 0; j < count; ++j) branches.push_back(sampler_.branch(j));
  double sum = 0.0;
  for (uint64_t j = 0; j < count; ++j) {
    sum += 1.0;
    for (uint64_t k = j + 1; k < count; ++k) sum += 2.0 * overlap(branches[j], branches[k]);
  }
  const double c = static_cast<double>(count);
  return sum / (c * c);
}

int swap_test_shot(const PreparationSource& source, Rng& rng, ShotMode mode) {
  const double p0 = source.zero_probability(rng, mode);
  return rng.uniform() < p0 ? 0 : 1;
}

PurityEstimate estimate_purity(const PreparationSource& source, uint64_t shots, Rng& rng,
                               ShotMode mode) {
  if (shots == 0) throw std::invalid_argument("estimate_purity: shots must be >= 1");
  const uint64_t master = rng();
  const uint64_t chunks = (shots + kShotChunk - 1) / kShotChunk;

  double fixed_p0 = 0.0;
  if (source.is_deterministic()) {
    Rng unused(master);
    fixed_p0 = source.zero_probability(unused, mode);
  }

  std::vector<uint64_t> zeros(chunks, 0);
  detail::parallel_for(chunks, [&](std::size_t c) {
    Rng stream(stream_seed(master, c));
    const uint64_t len = std::min<uint64_t>(kShotChunk, shots - c * kShotChunk);
    if (source.is_deterministic()) {
      zeros[c] = stream.count_successes(len, fixed_p0);
      return;
    }
    uint64_t z = 0;
    for (uint64_t i = 0; i < len; ++i) z += swap_test_shot(source, stream, mode) == 0;
    zeros[c] = z;
  });

  PurityEstimate out;
  out.shots = shots;
  out.zeros = std::accumulate(zeros.begin(), zeros.end(), uint64_t{0});
  const double n = static_cast<double>(shots);
  out.gamma_hat = (2.0 * static_cast<double>(out.zeros) - n) / n;
  // +-1 outcomes: sum of squares is n, so the sample variance is closed form.
  const double var = shots > 1 ? std::max(0.0, (1.0 - out.gamma_hat * out.gamma_hat) * n / (n - 1.0))
                               : 1.0;
  out.std_error = std::sqrt(var / n);
  return out;
}

}  // namespace sre
