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

#ifndef CCLAB_PRIMITIVES_HPP_
#define CCLAB_PRIMITIVES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cclab/edges.hpp"
#include "cclab/forest.hpp"
#include "cclab/types.hpp"

namespace cclab {

// Step accounting. One synchronous message wave is one step. Messages count
// value-carrying point-to-point deliveries between distinct processes: the
// replies to parent fetches and the sends themselves. Pull requests are not
// counted, and neither is anything a vertex reads from itself.
struct Cost {
  std::uint64_t waves = 0;
  std::uint64_t messages = 0;

  Cost& operator+=(const Cost& o) {
    waves += o.waves;
    messages += o.messages;
    return *this;
  }
  friend bool operator==(const Cost&, const Cost&) = default;
};

// Declared wave cost of every primitive.
namespace waves {
inline constexpr std::uint64_t kConnect = 1;
inline constexpr std::uint64_t kParentConnect = 3;
inline constexpr std::uint64_t kExtendedConnect = 3;
inline constexpr std::uint64_t kMaxParentConnect = 3;
inline constexpr std::uint64_t kRandomConnect = 1;
inline constexpr std::uint64_t kUpdate = 0;
inline constexpr std::uint64_t kShortcut = 2;
inline constexpr std::uint64_t kAlter = 2;
// Edge wave with parent fetch (3), notify (1), grandparent fetch (2).
inline constexpr std::uint64_t kSrtRound = 6;
}  // namespace waves

struct Message {
  Vertex target = kNoVertex;
  Vertex value = kNoVertex;
  EdgeId sender = kNoEdge;  // edge that sent it; kNoEdge for vertex senders

  friend bool operator==(const Message&, const Message&) = default;
};

enum class Resolution : std::uint8_t {
  kMinCombining,  // each target receives the minimum value addressed to it
  kArbitrary,     // each target receives one value picked by an ArbitraryPolicy
};

struct MessageBatch {
  std::vector<Message> messages;
  Resolution resolution = Resolution::kMinCombining;
  Cost cost;
};

// Write-conflict resolution for the arbitrary-CRCW style updates. The pick
// among values addressed to a target is the one whose sending edge has the
// smallest rank; ranks are a seeded permutation of edge ids (seed 0 keeps
// the identity order). The minimum() policy picks the smallest value.
class ArbitraryPolicy {
 public:
  static ArbitraryPolicy minimum();
  static ArbitraryPolicy first_by_edge(std::size_t edge_count, std::uint64_t seed = 0);

  bool is_minimum() const { return minimum_; }
  std::uint32_t rank(EdgeId e) const {
    return e < rank_.size() ? rank_[e] : UINT32_MAX;
  }

 private:
  bool minimum_ = true;
  std::vector<std::uint32_t> rank_;
};

// What each vertex received in one wave after write resolution.
struct Delivery {
  VertexArray<Vertex> value;   // kNoVertex where nothing arrived
  VertexArray<EdgeId> sender;  // edge behind the delivered value
};

// Minimum value per target; ties go to the smallest sender edge id.
Delivery resolve_min(const MessageBatch& batch, Vertex n);

// Policy pick per target among values different from the target itself.
Delivery resolve_arbitrary(const MessageBatch& batch, Vertex n, const ArbitraryPolicy& policy);

// ---- connection methods --------------------------------------------------

// For each alive non-loop edge, send min(x, y) to max(x, y) of its current
// ends. Cost: 1 wave.
MessageBatch connect(std::span<const EdgeState> edges);

// For each alive edge, fetch the parents of both current ends and send the
// smaller parent to the larger. Equal parents send nothing. Cost: 3 waves.
MessageBatch parent_connect(std::span<const EdgeState> edges, const LabelForest& f,
                            Resolution resolution = Resolution::kMinCombining);

// For each alive edge with end parents x (of the v-end) and y (of the
// w-end): if y < x send y to the v-end and to x, else send x to the w-end
// and to y. Cost: 3 waves.
MessageBatch extended_connect(std::span<const EdgeState> edges, const LabelForest& f);

// As parent_connect but sends the larger parent to the smaller.
MessageBatch max_parent_connect(std::span<const EdgeState> edges, const LabelForest& f,
                                Resolution resolution = Resolution::kArbitrary);

// Coin-gated hooking: for each edge, if the parent of one end flipped heads
// and the other tails, send the heads parent to the tails parent.
// heads[v] != 0 means v flipped heads. Cost: 1 wave.
MessageBatch random_connect(std::span<const EdgeState> edges, const LabelForest& f,
                            std::span<const std::uint8_t> heads);

// ---- parent updates ------------------------------------------------------

struct Hook {
  Vertex vertex = kNoVertex;  // vertex whose parent changed
  Vertex parent = kNoVertex;  // its new parent
  EdgeId edge = kNoEdge;      // edge that delivered the new parent
};

struct ForestStep {
  LabelForest forest;
  bool changed = false;
  Cost cost;
  std::vector<Hook> hooks;  // parent changes made by an update
};

// Every vertex takes the minimum of its parent and the values it received.
ForestStep update(const LabelForest& f, const MessageBatch& batch);

// As update, restricted to roots.
ForestStep root_update(const LabelForest& f, const MessageBatch& batch);

// Each root that received a value other than itself adopts the policy pick.
ForestStep arbitrary_root_update(const LabelForest& f, const MessageBatch& batch,
                                 const ArbitraryPolicy& policy);

// arbitrary_root_update gated per tree: only roots r with flags[r] != 0
// update. flags must have size n + 1; throws std::invalid_argument
// otherwise.
ForestStep flat_root_update(const LabelForest& f, const MessageBatch& batch,
                            std::span<const std::uint8_t> flat_flags,
                            const ArbitraryPolicy& policy);
ForestStep passive_root_update(const LabelForest& f, const MessageBatch& batch,
                               std::span<const std::uint8_t> passive_flags,
                               const ArbitraryPolicy& policy);

// ---- shortcutting --------------------------------------------------------

// Simultaneously replaces every parent by the old grandparent. Cost: 2 waves.
ForestStep shortcut(const LabelForest& f);

struct FixpointStep {
  LabelForest forest;
  std::uint32_t iterations = 0;  // including the final pass that changes nothing
  std::uint32_t effective = 0;   // iterations that changed some parent
  Cost cost;
};

// Repeats shortcut until no parent changes.
FixpointStep shortcut_to_fixpoint(const LabelForest& f);

// ---- edge alteration -----------------------------------------------------

enum class LoopMode : std::uint8_t {
  kDelete,      // an edge whose new ends coincide is deleted
  kRetainLoop,  // ... or is kept as a loop
};

struct AlterMode {
  LoopMode loops = LoopMode::kDelete;
  // Also delete an edge when its v-end equals the w-end's parent or its
  // w-end equals the v-end's parent. Sound for RA only.
  bool strengthened = false;
};

struct AlterStep {
  std::vector<EdgeState> edges;
  Cost cost;
  std::size_t deleted = 0;
  std::size_t looped = 0;
};

// Replaces the current ends of every alive edge by their parents. Cost: 2
// waves.
AlterStep alter(std::span<const EdgeState> edges, const LabelForest& f, AlterMode mode);

// ---- SRT -----------------------------------------------------------------

struct SrtStep {
  LabelForest forest;
  bool changed = false;
  Cost cost;
  VertexArray<Vertex> proposal;  // new(v) per vertex
};

// One round of the SRT labeling loop:
//   1. for each edge (v, w): if v.p < w.p send v.p to w, else send w.p to v
//   2. new(v) = min(v.p, values received in 1)
//   3. if new(v) < v.p send new(v) to v.p
//   4. new(v) sends its parent to v
//   5. v.p = min(v.p, everything v received this round)
// Reads in every line see the forest as it was at the start of the round.
SrtStep srt_round(const LabelForest& f, std::span<const EdgeState> edges);

}  // namespace cclab

#endif  // CCLAB_PRIMITIVES_HPP_
