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
#include <random>

namespace sre {

/// SplitMix64 finalizer. Used to derive independent stream seeds.
constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of stream `stream` under master seed `master`:
///   splitmix64(splitmix64(master) ^ splitmix64(stream + 1)).
/// Pure integer arithmetic, so identical on every platform.
constexpr uint64_t stream_seed(uint64_t master, uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream + 1));
}

/// Seeded random source.
///
/// Only the raw 64-bit output of std::mt19937_64 is used; it is fully
/// specified by the standard. All derived distributions (uniform doubles,
/// normals, bounded integers) are implemented here rather than through
/// <random> distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  using result_type = uint64_t;

  explicit Rng(uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; the second variate is cached.
  double normal();

  /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
  uint64_t below(uint64_t bound);

  bool bernoulli(double p) { return uniform() < p; }

  /// Number of successes in `trials` independent Bernoulli(p) draws.
  uint64_t count_successes(uint64_t trials, double p);

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace sre
