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

#include "sre/rng.hpp"

#include <cmath>
#include <numbers>

namespace sre {

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  cached_normal_ = r * std::sin(phi);
  has_cached_normal_ = true;
  return r * std::cos(phi);
}

uint64_t Rng::below(uint64_t bound) {
  if (bound == 0) return 0;
  if ((bound & (bound - 1)) == 0) return engine_() & (bound - 1);
  // Reject the top partial block of the 64-bit range.
  const uint64_t limit = max() - (max() % bound + 1) % bound;
  uint64_t v = engine_();
  while (v > limit) v = engine_();
  return v % bound;
}

uint64_t Rng::count_successes(uint64_t trials, double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  uint64_t hits = 0;
  for (uint64_t t = 0; t < trials; ++t) hits += uniform() < p ? 1 : 0;
  return hits;
}

}  // namespace sre
