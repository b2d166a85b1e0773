// Copyright 2026 The cclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef CCLAB_BATTERY_HPP_
#define CCLAB_BATTERY_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cclab/algorithm.hpp"

namespace cclab {

enum class SuiteSize : std::uint8_t { kQuick, kFull };

// Recipes of the built-in suite. The full suite holds the fixed families,
// W(2..6) and gnp for n in {10, 50, 200, 1000, 5000}, p in {1.5/n, 0.01,
// 0.1} and seeds 1..25.
std::vector<std::string> suite_recipes(SuiteSize size);

// Round bound ceil(lg n / lg a) + 2 with a = (4/3)^(1/5).
std::uint32_t r_round_bound(std::uint64_t n);

// Least-squares fit y = intercept + slope x with its coefficient of
// determination.
struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// SA shortcut passes on W(k).
struct TightnessPoint {
  unsigned k = 0;
  std::uint64_t total = 0;      // all passes, confirming ones included
  std::uint64_t effective = 0;  // passes that changed a parent
  std::uint32_t rounds = 0;
};
std::vector<TightnessPoint> tightness_series(unsigned k_min, unsigned k_max);

inline constexpr std::array<std::string_view, 10> kCheckNames = {
    "correctness", "lockstep", "r-bound",    "potentials", "diameter",
    "tightness",   "distance", "divergence", "messages",   "colors"};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string summary;
  std::vector<std::string> details;  // first few failures
  double seconds = 0;
};

struct BatteryOptions {
  SuiteSize suite = SuiteSize::kQuick;
  std::set<std::string> only;                  // empty runs every check
  std::optional<std::uint32_t> skip_shortcut;  // fault injection round
  unsigned jobs = 1;
  Vertex divergence_max_n = 13;
  std::uint64_t divergence_budget = 20'000'000;
  std::function<void(const CheckResult&)> on_result;  // progress callback
};

// Runs the selected checks and returns one result per check, in the order
// of kCheckNames. Throws std::invalid_argument for unknown check names.
std::vector<CheckResult> run_battery(const BatteryOptions& options);

}  // namespace cclab

#endif  // CCLAB_BATTERY_HPP_
