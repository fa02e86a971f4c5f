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


#include "sre/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>

#include "sre/bench.hpp"
#include "sre/channel.hpp"
#include "sre/gates.hpp"
#include "sre/oracle.hpp"
#include "sre/state.hpp"

namespace sre {

namespace {

constexpr double kTight = 1e-10;
constexpr double kTheorem1Tolerance = 1e-9;
constexpr double kNormTol = 1e-9;
constexpr double kStabilizerM = 1e-12;

struct Case {
  int n;
  int alpha;
};

constexpr Case kCases[] = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}};

class Check {
 public:
  Check(Suite suite, std::string name, double tolerance) {
    result_.suite = std::string(to_string(suite));
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  // Runs `residual`; an exception counts as an infinite residual.
  void run(const std::function<double()>& residual) {
    double r;
    try {
      r = residual();
      if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    } catch (const std::exception&) {
      r = std::numeric_limits<double>::infinity();
    }
    result_.worst = std::max(result_.worst, r);
    ++result_.cases;
  }

  CheckResult finish() {
    result_.passed = result_.cases > 0 && result_.worst < result_.tolerance;
    return result_;
  }

 private:
  CheckResult result_;
};

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  return (a - b).cwiseAbs().maxCoeff();
}

std::vector<int> block_qubits(int n, int first_copy, int copies) {
  std::vector<int> out(static_cast<std::size_t>(n * copies));
  std::iota(out.begin(), out.end(), first_copy * n);
  return out;
}

// Random inputs for one (suite, case) pair, reproducible from the seed.
class Inputs {
 public:
  Inputs(uint64_t seed, uint64_t salt) : rng_(stream_seed(seed, salt)) {}
  StateVector haar(int n) { return haar_random_state(n, rng_); }
  StateVector clifford_state(int n) {
    return apply_circuit(StateVector::zeros(n),
                         random_clifford_circuit(n, default_clifford_depth(n), rng_));
  }
  Circuit clifford(int n) { return random_clifford_circuit(n, default_clifford_depth(n), rng_); }

 private:
  Rng rng_;
};

void theorem1_suite(uint64_t seed, int states, std::vector<CheckResult>& out) {
  Check check(Suite::kTheorem1, "entanglement_identity", kTheorem1Tolerance);
  Check stab(Suite::kTheorem1, "stabilizer_entanglement_is_ln_d", kTheorem1Tolerance);
  uint64_t salt = 0;
  for (const Case& c : kCases) {
    Inputs in(seed, 100 + salt++);
    for (int s = 0; s < states; ++s) {
      const StateVector psi = in.haar(c.n);
      check.run([&] { return theorem1_check(psi, c.alpha).residual; });
    }
    const StateVector st = in.clifford_state(c.n);
    stab.run([&] {
      return std::abs(theorem1_check(st, c.alpha).renyi2 - std::log(static_cast<double>(st.dim())));
    });
  }
  out.push_back(check.finish());
  out.push_back(stab.finish());
}

void replica_suite(uint64_t seed, int states, std::vector<CheckResult>& out) {
  Check identity(Suite::kReplica, "replica_equals_oracle", kTight);
  uint64_t salt = 0;
  for (const Case& c : kCases) {
    Inputs in(seed, 200 + salt++);
    for (int s = 0; s < states; ++s) {
      const StateVector psi = in.haar(c.n);
      identity.run([&] { return std::abs(replica_expectation(psi, c.alpha) - a_alpha_exact(psi, c.alpha)); });
    }
  }
  out.push_back(identity.finish());

  Check swap(Suite::kReplica, "gamma1_is_swap", kTight);
  swap.run([] {
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(4, 4);
    s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
    return max_abs_diff(build_gamma(1).matrix, s);
  });
  out.push_back(swap.finish());

  Check norm(Suite::kReplica, "gamma_norm_parity", kNormTol);
  for (int n : {1, 2}) {
    for (int alpha : {1, 2, 3, 4}) {
      const double expected = alpha % 2 == 0 ? std::pow(2.0, n) : 1.0;
      norm.run([&] { return std::abs(gamma_spectral_norm(alpha, n) - expected); });
    }
  }
  out.push_back(norm.finish());
}

void monotone_suite(uint64_t seed, int states, std::vector<CheckResult>& out) {
  Check faithful(Suite::kMonotone, "stabilizer_m_zero", kStabilizerM);
  Inputs in(seed, 300);
  for (const StateVector& psi : single_qubit_stabilizer_states())
    for (int alpha : {2, 3}) faithful.run([&] { return std::abs(m_alpha_exact(psi, alpha)); });
  for (int s = 0; s < states; ++s) {
    const StateVector psi = in.clifford_state(2);
    for (int alpha : {2, 3}) faithful.run([&] { return std::abs(m_alpha_exact(psi, alpha)); });
  }
  out.push_back(faithful.finish());

  Check invariance(Suite::kMonotone, "clifford_invariance", kTight);
  for (int s = 0; s < states; ++s) {
    const StateVector psi = in.haar(2);
    const StateVector moved = apply_circuit(psi, in.clifford(2));
    for (int alpha : {2, 3})
      invariance.run([&] { return std::abs(m_alpha_exact(moved, alpha) - m_alpha_exact(psi, alpha)); });
  }
  out.push_back(invariance.finish());

  Check additivity(Suite::kMonotone, "additivity", kTight);
  for (int s = 0; s < states; ++s) {
    const StateVector a = in.haar(1);
    const StateVector b = in.haar(s % 2 == 0 ? 1 : 2);
    for (int alpha : {2, 3}) {
      additivity.run([&] {
        return std::abs(m_alpha_exact(tensor(a, b), alpha) - m_alpha_exact(a, alpha) -
                        m_alpha_exact(b, alpha));
      });
    }
  }
  out.push_back(additivity.finish());
}

void twirl_suite(uint64_t seed, int states, std::vector<CheckResult>& out) {
  Check local(Suite::kTwirl, "single_copy_marginal_is_maximally_mixed", kTight);
  Check reduce(Suite::kTwirl, "tracing_copies_lowers_alpha", kTight);
  uint64_t salt = 0;
  for (const Case& c : kCases) {
    Inputs in(seed, 400 + salt++);
    const int per_case = std::max(1, states / 4);
    for (int s = 0; s < per_case; ++s) {
      const StateVector psi = in.haar(c.n);
      const DensityMatrix rho = exact_channel_output(psi, c.alpha);
      const Eigen::MatrixXcd mixed = DensityMatrix::maximally_mixed(c.n).matrix();
      for (int i = 0; i < c.alpha; ++i) {
        local.run([&] { return max_abs_diff(partial_trace(rho, block_qubits(c.n, i, 1)).matrix(), mixed); });
      }
      // Every contiguous run of copies; the channel is permutation symmetric.
      for (int first = 0; first < c.alpha; ++first) {
        for (int len = 1; first + len <= c.alpha && len < c.alpha; ++len) {
          reduce.run([&] {
            return max_abs_diff(partial_trace(rho, block_qubits(c.n, first, len)).matrix(),
                                exact_channel_output(psi, len).matrix());
          });
        }
      }
    }
  }
  out.push_back(local.finish());
  out.push_back(reduce.finish());
}

void normalization_suite(uint64_t seed, int states, std::vector<CheckResult>& out) {
  Check dist(Suite::kNormalization, "characteristic_distribution_sums_to_one", kTight);
  Check encoding(Suite::kNormalization, "purity_encodes_a_alpha", kTight);
  Check copies(Suite::kNormalization, "coherent_copies_match_mixture", kTight);
  Check ancilla(Suite::kNormalization, "ancilla_marginal_closed_form", kTight);
  Check ancilla_purity(Suite::kNormalization, "ancilla_purity_encodes_a_alpha", kTight);
  uint64_t salt = 0;
  for (const Case& c : kCases) {
    Inputs in(seed, 500 + salt++);
    const int per_case = std::max(1, states / 4);
    for (int s = 0; s < per_case; ++s) {
      const StateVector psi = in.haar(c.n);
      const double a = a_alpha_exact(psi, c.alpha);
      const double d = static_cast<double>(psi.dim());
      dist.run([&] { return std::abs(characteristic_distribution(psi).total() - 1.0); });
      const DensityMatrix mixture = exact_channel_output(psi, c.alpha);
      encoding.run([&] { return std::abs(d * purity(mixture) - a); });
      const StateVector prepared = coherent_prepare(psi, c.alpha);
      copies.run([&] {
        return max_abs_diff(reduced_state(prepared, copy_register_qubits(c.n, c.alpha)).matrix(),
                            mixture.matrix());
      });
      ancilla.run([&] {
        return max_abs_diff(ancilla_marginal(psi, c.alpha).matrix(),
                            reduced_state(prepared, ancilla_register_qubits(c.n)).matrix());
      });
      ancilla_purity.run([&] { return std::abs(d * purity(ancilla_marginal(psi, c.alpha)) - a); });
    }
  }
  for (Check* check : {&dist, &encoding, &copies, &ancilla, &ancilla_purity})
    out.push_back(check->finish());
}

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::kAll:
      return "all";
    case Suite::kTheorem1:
      return "theorem1";
    case Suite::kReplica:
      return "replica";
    case Suite::kMonotone:
      return "monotone";
    case Suite::kTwirl:
      return "twirl";
    case Suite::kNormalization:
      return "normalization";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view text) {
  for (auto s : {Suite::kAll, Suite::kTheorem1, Suite::kReplica, Suite::kMonotone, Suite::kTwirl,
                 Suite::kNormalization})
    if (text == to_string(s)) return s;
  return std::nullopt;
}

int SuiteReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

int SuiteReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

SuiteReport run_suite(Suite suite, uint64_t seed, int states_per_case) {
  if (states_per_case < 1) states_per_case = 1;
  SuiteReport report;
  auto wants = [suite](Suite s) { return suite == Suite::kAll || suite == s; };
  if (wants(Suite::kTheorem1)) theorem1_suite(seed, states_per_case, report.checks);
  if (wants(Suite::kReplica)) replica_suite(seed, states_per_case, report.checks);
  if (wants(Suite::kMonotone)) monotone_suite(seed, states_per_case, report.checks);
  if (wants(Suite::kTwirl)) twirl_suite(seed, states_per_case, report.checks);
  if (wants(Suite::kNormalization)) normalization_suite(seed, states_per_case, report.checks);
  return report;
}

}  // namespace sre
