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

// Exact identity suites run by `sre verify`.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sre {

enum class Suite { kAll, kTheorem1, kReplica, kMonotone, kTwirl, kNormalization };

std::string_view to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view text);

struct CheckResult {
  std::string suite;
  std::string name;
  double worst = 0.0;  // largest residual observed
  double tolerance = 0.0;
  int cases = 0;
  bool passed = false;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

/// Runs the requested suite on Haar-random inputs drawn from `seed`.
/// `states_per_case` sets how many random states each (n, alpha) uses.
SuiteReport run_suite(Suite suite, uint64_t seed, int states_per_case = 20);

}  // namespace sre
