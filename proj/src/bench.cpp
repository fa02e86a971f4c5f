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


#include "sre/bench.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"
#include "sre/errors.hpp"
#include "sre/gates.hpp"
#include "sre/oracle.hpp"
#include "sre/pauli.hpp"
#include "sre/pipeline.hpp"

namespace sre {

namespace {

constexpr int kMaxGammaQubits = 10;
constexpr int kMaxDenseNormQubits = 10;

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

std::array<MatrixXcd, 4> single_qubit_paulis() {
  const cplx i{0.0, 1.0};
  MatrixXcd id = MatrixXcd::Identity(2, 2);
  MatrixXcd x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;
  return {id, x, y, z};
}

// Applies `op` (2^m x 2^m) to the contiguous qubits [first, first + m) of an
// unnormalized N-qubit vector.
void apply_contiguous(VectorXcd& v, int total, int first, int m, const MatrixXcd& op) {
  const int low = total - first - m;
  const Eigen::Index k = Eigen::Index{1} << m;
  const Eigen::Index lo = Eigen::Index{1} << low;
  const Eigen::Index hi = Eigen::Index{1} << first;
  VectorXcd block(k);
  for (Eigen::Index h = 0; h < hi; ++h) {
    for (Eigen::Index l = 0; l < lo; ++l) {
      for (Eigen::Index u = 0; u < k; ++u) block[u] = v[(h * k + u) * lo + l];
      const VectorXcd mapped = op * block;
      for (Eigen::Index u = 0; u < k; ++u) v[(h * k + u) * lo + l] = mapped[u];
    }
  }
}

// Moves qubit `from_pos[q]` to position q (positions counted from the most
// significant bit).
VectorXcd permute_qubits(const VectorXcd& v, int total, const std::vector<int>& from_pos) {
  VectorXcd out(v.size());
  for (Eigen::Index s = 0; s < v.size(); ++s) {
    uint64_t t = 0;
    for (int q = 0; q < total; ++q) {
      const uint64_t bit = (static_cast<uint64_t>(s) >> (total - 1 - from_pos[q])) & 1U;
      t |= bit << (total - 1 - q);
    }
    out[static_cast<Eigen::Index>(t)] = v[s];
  }
  return out;
}

// d^{-1} sum_P P^{(x) reps} applied to v; copy-major layout of reps blocks of n qubits.
VectorXcd apply_replica_sum(const VectorXcd& v, int n, int reps) {
  const uint64_t d = uint64_t{1} << n;
  VectorXcd out = VectorXcd::Zero(v.size());
  for (uint64_t x = 0; x < d; ++x) {
    for (uint64_t z = 0; z < d; ++z) {
      uint64_t xm = 0, zm = 0;
      for (int c = 0; c < reps; ++c) {
        xm = (xm << n) | x;
        zm = (zm << n) | z;
      }
      // Hermitian string i^{|x&z|} X^x Z^z, repeated: phase i^{reps |x&z|}.
      const int e = (reps * std::popcount(x & z)) & 3;
      const cplx phase = std::array<cplx, 4>{1.0, {0.0, 1.0}, -1.0, {0.0, -1.0}}[e];
      for (Eigen::Index s = 0; s < v.size(); ++s) {
        const bool odd = std::popcount(static_cast<uint64_t>(s) & zm) & 1;
        out[static_cast<Eigen::Index>(static_cast<uint64_t>(s) ^ xm)] += odd ? -phase * v[s] : phase * v[s];
      }
    }
  }
  return out / static_cast<double>(d);
}

void check_epsilon_delta(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1]");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in (0, 1]");
}

double rmse(const std::vector<double>& estimates, double truth) {
  double sum = 0.0;
  for (double e : estimates) sum += (e - truth) * (e - truth);
  return std::sqrt(sum / static_cast<double>(estimates.size()));
}

}  // namespace

std::vector<double> theta_grid(double start, double stop, int count) {
  if (count < 1) throw std::invalid_argument("theta grid needs at least one point");
  if (count == 1) return {start};
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i] = start + (stop - start) * i / (count - 1);
  out.back() = stop;
  return out;
}

std::vector<SweepRow> sweep_theta(const SweepConfig& config) {
  if (config.seeds < 1) throw std::invalid_argument("sweep needs at least one seed");
  const std::vector<double> thetas =
      config.thetas.empty() ? theta_grid(0.0, std::numbers::pi / 2, 9) : config.thetas;
  const auto seeds = static_cast<std::size_t>(config.seeds);
  const std::size_t points = config.alphas.size() * thetas.size();
  std::vector<SweepRow> rows(points * seeds);
  detail::parallel_for(rows.size(), [&](std::size_t item) {
    const std::size_t p = item / seeds;
    const double theta = thetas[p % thetas.size()];
    const int alpha = config.alphas[p / thetas.size()];
    EstimationRequest req{.state = theta_state(theta),
                          .alpha = alpha,
                          .epsilon = config.epsilon,
                          .delta = config.delta,
                          .method = config.method,
                          .seed = stream_seed(config.master_seed, item)};
    const EstimateReport rep = run_estimation(req);
    SweepRow& row = rows[item];
    row.theta = theta;
    row.alpha = alpha;
    row.a_hat = rep.a_hat;
    row.a_exact = closed_form_a(theta, alpha);
    row.abs_error = std::abs(rep.a_hat - row.a_exact);
    row.copies_used = rep.copies_used;
    row.seed = req.seed;
    row.within_eps = row.abs_error <= config.epsilon;
  });
  return rows;
}

ReplicaObservable build_gamma(int alpha) {
  if (alpha < 1) throw std::invalid_argument("build_gamma: alpha must be >= 1");
  check_qubit_count(2 * alpha, kMaxGammaQubits, "Gamma_alpha");
  const auto paulis = single_qubit_paulis();
  const Eigen::Index dim = Eigen::Index{1} << (2 * alpha);
  MatrixXcd gamma = MatrixXcd::Zero(dim, dim);
  for (const auto& q : paulis) {
    MatrixXcd power = q;
    for (int c = 1; c < 2 * alpha; ++c) power = kron(power, q);
    gamma += power;
  }
  return {alpha, 0.5 * gamma};
}

double replica_expectation(const StateVector& psi, int alpha) {
  const int n = psi.num_qubits();
  const int reps = 2 * alpha;
  check_qubit_count(n * reps, kMaxStateQubits, "replica register");
  const ReplicaObservable gamma = build_gamma(alpha);
  const int total = n * reps;
  // Copy-major |psi>^{(x) 2 alpha} -> qubit-major so each Gamma acts on a
  // contiguous group.
  std::vector<int> from(static_cast<std::size_t>(total));
  for (int q = 0; q < n; ++q)
    for (int c = 0; c < reps; ++c) from[q * reps + c] = c * n + q;
  const VectorXcd ket = permute_qubits(tensor_power(psi, reps).amplitudes(), total, from);
  VectorXcd image = ket;
  for (int q = 0; q < n; ++q) apply_contiguous(image, total, q * reps, reps, gamma.matrix);
  return ket.dot(image).real();
}

double gamma_spectral_norm(int alpha, int n) {
  if (alpha < 1 || n < 1) throw std::invalid_argument("gamma_spectral_norm: bad arguments");
  const int total = 2 * alpha * n;
  check_qubit_count(total, kMaxStateQubits, "Gamma_alpha^n");
  if (total <= kMaxDenseNormQubits) {
    const MatrixXcd g = build_gamma(alpha).matrix;
    MatrixXcd full = g;
    for (int q = 1; q < n; ++q) full = kron(full, g);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(full, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().cwiseAbs().maxCoeff();
  }
  Rng rng(stream_seed(0x6a6d6d61ULL, static_cast<uint64_t>(total)));
  VectorXcd v(Eigen::Index{1} << total);
  for (auto& a : v) a = {rng.normal(), rng.normal()};
  v.normalize();
  double estimate = 0.0;
  for (int iter = 0; iter < 500; ++iter) {
    VectorXcd w = apply_replica_sum(v, n, 2 * alpha);
    const double next = w.norm();
    if (next == 0.0) return 0.0;
    v = w / next;
    if (std::abs(next - estimate) <= 1e-13 * std::max(1.0, next)) return next;
    estimate = next;
  }
  return estimate;
}

uint64_t single_copy_shots_per_string(int alpha, uint64_t dim, double epsilon, double delta) {
  if (alpha < 1 || dim < 1) throw std::invalid_argument("single-copy budget: bad arguments");
  check_epsilon_delta(epsilon, delta);
  const double tau = epsilon / (2.0 * alpha * static_cast<double>(dim));
  return ceil_count(1.0 / (tau * tau * delta));
}

uint64_t gamma_shots_per_string(double epsilon, double delta) {
  check_epsilon_delta(epsilon, delta);
  return ceil_count(1.0 / (epsilon * epsilon * delta));
}

DirectEstimate direct_single_copy_estimate(const StateVector& psi, int alpha,
                                           uint64_t shots_per_string, Rng& rng) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (shots_per_string == 0) throw std::invalid_argument("shots_per_string must be >= 1");
  const std::vector<double> e = pauli_expectations(psi);
  const uint64_t master = rng();
  const double k = static_cast<double>(shots_per_string);
  double sum = 0.0, var = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    Rng stream(stream_seed(master, j));
    const uint64_t plus = stream.count_successes(shots_per_string, 0.5 * (1.0 + e[j]));
    const double o = (2.0 * static_cast<double>(plus) - k) / k;
    sum += std::pow(o, 2 * alpha);
    const double slope = 2.0 * alpha * std::pow(o, 2 * alpha - 1);
    var += slope * slope * std::max(0.0, 1.0 - o * o) / k;
  }
  const double d = static_cast<double>(psi.dim());
  return {sum / d, std::sqrt(var) / d, shots_per_string,
          static_cast<uint64_t>(e.size()) * shots_per_string};
}

DirectEstimate direct_single_copy_estimate(const StateVector& psi, int alpha, double epsilon,
                                           double delta, Rng& rng) {
  return direct_single_copy_estimate(
      psi, alpha, single_copy_shots_per_string(alpha, psi.dim(), epsilon, delta), rng);
}

DirectEstimate direct_gamma_estimate(const StateVector& psi, int alpha, uint64_t shots_per_string,
                                     Rng& rng) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (shots_per_string == 0) throw std::invalid_argument("shots_per_string must be >= 1");
  check_qubit_count(2 * alpha * psi.num_qubits(), kMaxStateQubits, "replica register");
  const std::vector<double> e = pauli_expectations(psi);
  const uint64_t master = rng();
  const double k = static_cast<double>(shots_per_string);
  double sum = 0.0, var = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    // <psi|^{(x) 2a} P^{(x) 2a} |psi>^{(x) 2a} = <P>^{2a}
    const double mean = std::pow(e[j], 2 * alpha);
    Rng stream(stream_seed(master, j));
    const uint64_t plus = stream.count_successes(shots_per_string, 0.5 * (1.0 + mean));
    const double o = (2.0 * static_cast<double>(plus) - k) / k;
    sum += o;
    var += std::max(0.0, 1.0 - o * o) / k;
  }
  const double d = static_cast<double>(psi.dim());
  return {sum / d, std::sqrt(var) / d, shots_per_string,
          static_cast<uint64_t>(e.size()) * shots_per_string * 2 * static_cast<uint64_t>(alpha)};
}

Theorem1Check theorem1_check(const StateVector& psi, int alpha) {
  const int n = psi.num_qubits();
  const StateVector prepared = coherent_prepare(psi, alpha);
  const BipartiteSplit split(prepared.num_qubits(), ancilla_register_qubits(n));
  Theorem1Check out;
  out.renyi2 = renyi_entanglement(schmidt_spectrum(prepared, split), 2.0);
  out.log_a = alpha >= 2 ? (1.0 - alpha) * m_alpha_exact(psi, alpha)
                         : std::log(a_alpha_exact(psi, alpha));
  out.residual = std::abs(out.log_a + out.renyi2 - std::log(static_cast<double>(psi.dim())));
  return out;
}

std::string_view to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::kSwapPurity:
      return "swap_purity";
    case EstimatorKind::kDirectGamma:
      return "direct_gamma";
    case EstimatorKind::kDirectSingleCopy:
      return "direct_single_copy";
  }
  return "?";
}

std::optional<EstimatorKind> parse_estimator(std::string_view text) {
  for (auto kind : {EstimatorKind::kSwapPurity, EstimatorKind::kDirectGamma,
                    EstimatorKind::kDirectSingleCopy})
    if (text == to_string(kind)) return kind;
  return std::nullopt;
}

uint64_t prescribed_copies(EstimatorKind kind, int alpha, uint64_t dim, double epsilon,
                           double delta) {
  switch (kind) {
    case EstimatorKind::kSwapPurity:
      return copies_required(alpha, dim, epsilon, delta).copies_of_psi;
    case EstimatorKind::kDirectGamma:
      return dim * dim * gamma_shots_per_string(epsilon, delta) * 2 * static_cast<uint64_t>(alpha);
    case EstimatorKind::kDirectSingleCopy:
      return dim * dim * single_copy_shots_per_string(alpha, dim, epsilon, delta);
  }
  throw std::logic_error("unknown estimator");
}

std::vector<ComplexityRow> complexity_table(const StateVector& psi, const ComplexityConfig& config) {
  const int n = psi.num_qubits();
  if (n < 1 || n > 2) throw SizeError("complexity_table: n must be 1 or 2");
  if (config.seeds < 1) throw std::invalid_argument("complexity_table needs at least one seed");
  std::vector<ComplexityRow> rows;
  uint64_t row_index = 0;
  for (EstimatorKind kind : config.methods) {
    for (int alpha : config.alphas) {
      const double truth = a_alpha_exact(psi, alpha);
      for (double eps : config.epsilons) {
        std::vector<double> estimates(static_cast<std::size_t>(config.seeds));
        detail::parallel_for(estimates.size(), [&](std::size_t s) {
          const uint64_t seed = stream_seed(config.master_seed, row_index * config.seeds + s);
          Rng rng(seed);
          switch (kind) {
            case EstimatorKind::kSwapPurity: {
              EstimationRequest req{.state = psi, .alpha = alpha, .epsilon = eps,
                                    .delta = config.delta, .seed = seed};
              estimates[s] = run_estimation(req).a_hat;
              break;
            }
            case EstimatorKind::kDirectGamma:
              estimates[s] =
                  direct_gamma_estimate(psi, alpha, gamma_shots_per_string(eps, config.delta), rng)
                      .a_hat;
              break;
            case EstimatorKind::kDirectSingleCopy:
              estimates[s] = direct_single_copy_estimate(psi, alpha, eps, config.delta, rng).a_hat;
              break;
          }
        });
        ComplexityRow row;
        row.method = kind;
        row.num_qubits = n;
        row.alpha = alpha;
        row.epsilon_target = eps;
        row.delta = config.delta;
        row.copies = prescribed_copies(kind, alpha, psi.dim(), eps, config.delta);
        row.empirical_rmse = rmse(estimates, truth);
        row.copies_at_target_rmse =
            static_cast<double>(row.copies) * std::pow(row.empirical_rmse / eps, 2);
        row.seeds = config.seeds;
        rows.push_back(row);
        ++row_index;
      }
    }
  }
  return rows;
}

}  // namespace sre
