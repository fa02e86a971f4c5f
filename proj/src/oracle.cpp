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

#include "sre/oracle.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sre/errors.hpp"
#include "sre/pauli.hpp"

namespace sre {

namespace {

void check_alpha(int alpha, int minimum, const char* what) {
  if (alpha < minimum) {
    throw std::invalid_argument(std::string(what) + ": alpha must be >= " + std::to_string(minimum) +
                                ", got " + std::to_string(alpha));
  }
}

}  // namespace

std::string CharacteristicDistribution::label(std::size_t j) const {
  return PauliString::from_index(num_qubits, j).letters();
}

double CharacteristicDistribution::total() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

CharacteristicDistribution characteristic_distribution(const StateVector& psi) {
  const auto exps = pauli_expectations(psi);
  const double inv_d = 1.0 / static_cast<double>(psi.dim());
  CharacteristicDistribution dist;
  dist.num_qubits = psi.num_qubits();
  dist.probs.reserve(exps.size());
  for (double e : exps) dist.probs.push_back(inv_d * e * e);
  const double total = dist.total();
  if (std::abs(total - 1.0) > 1e-10) {
    throw ConsistencyError("characteristic_distribution: entries sum to " + std::to_string(total));
  }
  return dist;
}

double a_alpha_exact(const StateVector& psi, int alpha) {
  check_alpha(alpha, 1, "a_alpha_exact");
  double sum = 0.0;
  for (double e : pauli_expectations(psi)) sum += std::pow(e * e, alpha);
  return sum / static_cast<double>(psi.dim());
}

double m_from_a(double a, int alpha) {
  check_alpha(alpha, 2, "m_from_a");
  if (!(a > 0.0)) throw std::invalid_argument("m_from_a: a must be positive, got " + std::to_string(a));
  return std::log(a) / (1.0 - alpha);
}

double m_alpha_exact(const StateVector& psi, int alpha) {
  check_alpha(alpha, 2, "m_alpha_exact");
  return m_from_a(a_alpha_exact(psi, alpha), alpha);
}

double closed_form_a(double theta, int alpha) {
  check_alpha(alpha, 1, "closed_form_a");
  const double c2 = std::pow(std::cos(theta), 2);
  const double s2 = std::pow(std::sin(theta), 2);
  return 0.5 * (1.0 + std::pow(c2, alpha) + std::pow(s2, alpha));
}

bool is_stabilizer(const StateVector& psi, double tol) {
  const auto dist = characteristic_distribution(psi);
  const double inv_d = 1.0 / static_cast<double>(psi.dim());
  uint64_t peaks = 0;
  for (double p : dist.probs) {
    if (std::abs(p - inv_d) <= tol) {
      ++peaks;
    } else if (std::abs(p) > tol) {
      return false;
    }
  }
  return peaks == psi.dim();
}

SreValue sre_value(const StateVector& psi, int alpha) {
  SreValue v;
  v.alpha = alpha;
  v.a_alpha = a_alpha_exact(psi, alpha);
  if (alpha >= 2) v.m_alpha = m_from_a(v.a_alpha, alpha);
  return v;
}

}  // namespace sre
