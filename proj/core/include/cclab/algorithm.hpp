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


#ifndef CCLAB_ALGORITHM_HPP_
#define CCLAB_ALGORITHM_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cclab/primitives.hpp"

namespace cclab {

enum class AlgorithmKind : std::uint8_t { kP, kE, kA, kR, kRA, kS, kSA, kSRT, kSV, kAS, kREIF };

inline constexpr std::array<AlgorithmKind, 11> kAllAlgorithms = {
    AlgorithmKind::kP,  AlgorithmKind::kE,   AlgorithmKind::kA,  AlgorithmKind::kR,
    AlgorithmKind::kRA, AlgorithmKind::kS,   AlgorithmKind::kSA, AlgorithmKind::kSRT,
    AlgorithmKind::kSV, AlgorithmKind::kAS,  AlgorithmKind::kREIF};

std::string_view to_string(AlgorithmKind kind);

// Accepts the names printed by to_string, case-insensitively. Throws
// std::invalid_argument for anything else.
AlgorithmKind parse_algorithm(std::string_view name);

// Parents only ever decrease and stay at most the vertex itself.
bool is_min_labeling(AlgorithmKind kind);
// Every new tree is a union of old trees (only roots get new parents).
bool is_monotone(AlgorithmKind kind);
// The round ends with an alter of the edge set.
bool alters_edges(AlgorithmKind kind);
// Parent writes are resolved by an ArbitraryPolicy.
bool uses_policy(AlgorithmKind kind);

struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::kR;
  std::uint32_t shortcuts_per_round = 1;  // P, E, A, R, RA only
  LoopMode loop_mode = LoopMode::kDelete;
  bool strengthened_deletion = false;     // RA only
  std::uint64_t policy_seed = 0;          // SV, AS, REIF
  bool record_spanning_forest = false;    // R, RA only

  // Fault injection: skip every shortcut of this (1-based) round.
  std::optional<std::uint32_t> skip_shortcut_in_round;

  // Throws std::invalid_argument on inconsistent fields.
  void validate() const;

  AlterMode alter_mode() const { return {loop_mode, strengthened_deletion}; }
  std::string describe() const;

  friend bool operator==(const AlgorithmSpec&, const AlgorithmSpec&) = default;
};

}  // namespace cclab

#endif  // CCLAB_ALGORITHM_HPP_
