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

// Benchmarks and cross-checks around the purity estimator: the single-qubit
// theta sweep, the replica observable Gamma_alpha, the two direct
// estimators used for copy-count comparisons, and the entanglement identity
// of the coherent register.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sre/channel.hpp"
#include "sre/purity.hpp"
#include "sre/rng.hpp"
#include "sre/state.hpp"

namespace sre {

// ---------------------------------------------------------------------------
// Theta sweep

struct SweepRow {
  double theta = 0.0;
  int alpha = 0;
  double a_hat = 0.0;
  double a_exact = 0.0;
  double abs_error = 0.0;
  uint64_t copies_used = 0;
  uint64_t seed = 0;
  bool within_eps = false;
};

struct SweepConfig {
  std::vector<int> alphas = {2, 3, 5, 7};
  std::vector<double> thetas;  // defaults to theta_grid(0, pi/2, 9) when empty
  double epsilon = 0.05;
  double delta = 0.1;
  int seeds = 10;
  uint64_t master_seed = 0;
  PreparationMethod method = PreparationMethod::kCoherent;
};

/// `count` evenly spaced points on [start, stop] (both ends included).
std::vector<double> theta_grid(double start, double stop, int count);

/// One row per (alpha, theta, seed). The run for seed index s at point p
/// uses seed stream_seed(master_seed, p * seeds + s); that value is recorded
/// in the row, so any row can be rerun on its own.
std::vector<SweepRow> sweep_theta(const SweepConfig& config);

// ---------------------------------------------------------------------------
// Replica observable

/// Gamma_alpha = 2^{-1} sum_{Q in {I,X,Y,Z}} Q^{(x) 2 alpha} on 2 alpha qubits.
struct ReplicaObservable {
  int alpha = 0;
  Eigen::MatrixXcd matrix;
};

/// Dense guard: 2 alpha <= 10 qubits.
ReplicaObservable build_gamma(int alpha);

/// <psi|^{(x) 2 alpha} Gamma_alpha^{(x) n} |psi>^{(x) 2 alpha}, evaluated by
/// applying the dense Gamma_alpha to the 2 alpha copies of each qubit.
double replica_expectation(const StateVector& psi, int alpha);

/// Largest |eigenvalue| of Gamma_alpha^{(x) n}. Uses a dense
/// eigendecomposition up to 10 qubits and power iteration on the matrix-free
/// operator d^{-1} sum_P P^{(x) 2 alpha} beyond that.
double gamma_spectral_norm(int alpha, int n);

// ---------------------------------------------------------------------------
// Direct estimators

struct DirectEstimate {
  double a_hat = 0.0;
  double std_error = 0.0;  // plug-in estimate
  uint64_t shots_per_string = 0;
  uint64_t copies_used = 0;  // copies of psi
};

/// Shots per string for the single-copy estimator at (epsilon, delta):
/// tau = epsilon / (2 alpha d), shots = ceil(tau^{-2} delta^{-1}).
uint64_t single_copy_shots_per_string(int alpha, uint64_t dim, double epsilon, double delta);

/// Shots per string for the Gamma estimator: ceil(epsilon^{-2} delta^{-1}).
uint64_t gamma_shots_per_string(double epsilon, double delta);

/// Estimates every <P_j> from single-copy +-1 outcomes and returns
/// d^{-1} sum_j O_j^{2 alpha}. The power of a sample mean carries an
/// O(1 / shots_per_string) bias, negligible at the prescribed budget.
DirectEstimate direct_single_copy_estimate(const StateVector& psi, int alpha,
                                           uint64_t shots_per_string, Rng& rng);
DirectEstimate direct_single_copy_estimate(const StateVector& psi, int alpha, double epsilon,
                                           double delta, Rng& rng);

/// Measures each P_j^{(x) 2 alpha} on |psi>^{(x) 2 alpha} `shots_per_string`
/// times and returns d^{-1} k^{-1} sum_j sum_l x_l^j.
DirectEstimate direct_gamma_estimate(const StateVector& psi, int alpha,
                                     uint64_t shots_per_string, Rng& rng);

// ---------------------------------------------------------------------------
// Entanglement identity

struct Theorem1Check {
  double renyi2 = 0.0;        // E_2 across ancilla | copies
  double log_a = 0.0;         // (1 - alpha) M_alpha, i.e. ln A_alpha
  double residual = 0.0;      // |(1 - alpha) M_alpha + E_2 - ln d|
};

/// For alpha >= 2 uses M_alpha from the oracle; for alpha == 1 uses ln A_1.
Theorem1Check theorem1_check(const StateVector& psi, int alpha);

// ---------------------------------------------------------------------------
// Copy-count comparison

enum class EstimatorKind { kSwapPurity, kDirectGamma, kDirectSingleCopy };

std::string_view to_string(EstimatorKind kind);
std::optional<EstimatorKind> parse_estimator(std::string_view text);

struct ComplexityRow {
  EstimatorKind method = EstimatorKind::kSwapPurity;
  int num_qubits = 0;
  int alpha = 0;
  double epsilon_target = 0.0;
  double delta = 0.0;
  uint64_t copies = 0;  // prescribed copies of psi for (epsilon, delta)
  double empirical_rmse = 0.0;
  /// copies * (rmse / epsilon)^2: copies at which the measured rmse would
  /// equal epsilon, assuming rmse ~ copies^{-1/2}.
  double copies_at_target_rmse = 0.0;
  int seeds = 0;
};

struct ComplexityConfig {
  std::vector<EstimatorKind> methods = {EstimatorKind::kSwapPurity, EstimatorKind::kDirectGamma,
                                        EstimatorKind::kDirectSingleCopy};
  std::vector<int> alphas = {2};
  std::vector<double> epsilons = {0.1};
  double delta = 0.1;
  int seeds = 20;
  uint64_t master_seed = 0;
};

/// Runs each estimator at its prescribed budget over `seeds` seeds and
/// reports the empirical rmse against the oracle.
std::vector<ComplexityRow> complexity_table(const StateVector& psi, const ComplexityConfig& config);

/// Prescribed copies of psi for `kind` at (alpha, d, epsilon, delta).
uint64_t prescribed_copies(EstimatorKind kind, int alpha, uint64_t dim, double epsilon,
                           double delta);

}  // namespace sre
