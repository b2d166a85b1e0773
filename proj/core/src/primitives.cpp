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

#include "cclab/primitives.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace cclab {

ArbitraryPolicy ArbitraryPolicy::minimum() { return ArbitraryPolicy{}; }

ArbitraryPolicy ArbitraryPolicy::first_by_edge(std::size_t edge_count, std::uint64_t seed) {
  ArbitraryPolicy policy;
  policy.minimum_ = false;
  policy.rank_.resize(edge_count);
  std::iota(policy.rank_.begin(), policy.rank_.end(), 0u);
  if (seed != 0 && edge_count > 1) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = edge_count - 1; i > 0; --i) {
      std::swap(policy.rank_[i], policy.rank_[rng() % (i + 1)]);
    }
  }
  return policy;
}

namespace {

Delivery empty_delivery(Vertex n) {
  return {VertexArray<Vertex>(static_cast<std::size_t>(n) + 1, kNoVertex),
          VertexArray<EdgeId>(static_cast<std::size_t>(n) + 1, kNoEdge)};
}

void require(const MessageBatch& batch, Resolution expected, const char* who) {
  if (batch.resolution != expected) {
    throw std::invalid_argument(std::string(who) + ": batch has the wrong resolution");
  }
}

void check_flags(std::span<const std::uint8_t> flags, const LabelForest& f, const char* who) {
  if (flags.size() != static_cast<std::size_t>(f.size()) + 1) {
    throw std::invalid_argument(std::string(who) + ": flag array has size " +
                                std::to_string(flags.size()) + ", expected " +
                                std::to_string(f.size() + 1));
  }
}

// Fetching both end parents costs one reply per end.
constexpr std::uint64_t kFetchRepliesPerEdge = 2;

std::size_t alive_count(std::span<const EdgeState> edges) {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const EdgeState& e) { return e.alive; }));
}

MessageBatch fetched_batch(std::span<const EdgeState> edges, std::uint64_t waves,
                           Resolution resolution) {
  MessageBatch batch;
  batch.resolution = resolution;
  batch.cost.waves = waves;
  batch.cost.messages = kFetchRepliesPerEdge * alive_count(edges);
  batch.messages.reserve(edges.size());
  return batch;
}

// Shared body of the three gated arbitrary updates.
ForestStep gated_arbitrary_update(const LabelForest& f, const MessageBatch& batch,
                                  std::span<const std::uint8_t> gate,
                                  const ArbitraryPolicy& policy) {
  const Delivery got = resolve_arbitrary(batch, f.size(), policy);
  ForestStep step{f, false, {}, {}};
  for (Vertex v = 1; v <= f.size(); ++v) {
    if (!f.is_root(v) || got.value[v] == kNoVertex) continue;
    if (!gate.empty() && gate[v] == 0) continue;
    step.forest.set_parent(v, got.value[v]);
    step.changed = true;
    step.hooks.push_back({v, got.value[v], got.sender[v]});
  }
  return step;
}

}  // namespace

Delivery resolve_min(const MessageBatch& batch, Vertex n) {
  Delivery d = empty_delivery(n);
  for (const Message& msg : batch.messages) {
    Vertex& cur = d.value[msg.target];
    if (cur == kNoVertex || msg.value < cur ||
        (msg.value == cur && msg.sender < d.sender[msg.target])) {
      cur = msg.value;
      d.sender[msg.target] = msg.sender;
    }
  }
  return d;
}

Delivery resolve_arbitrary(const MessageBatch& batch, Vertex n, const ArbitraryPolicy& policy) {
  Delivery d = empty_delivery(n);
  for (const Message& msg : batch.messages) {
    if (msg.value == msg.target) continue;
    Vertex& cur = d.value[msg.target];
    EdgeId& cur_sender = d.sender[msg.target];
    bool take = cur == kNoVertex;
    if (!take) {
      if (policy.is_minimum()) {
        take = msg.value < cur || (msg.value == cur && msg.sender < cur_sender);
      } else {
        const auto a = policy.rank(msg.sender);
        const auto b = policy.rank(cur_sender);
        take = a < b || (a == b && msg.value < cur);
      }
    }
    if (take) {
      cur = msg.value;
      cur_sender = msg.sender;
    }
  }
  return d;
}

MessageBatch connect(std::span<const EdgeState> edges) {
  MessageBatch batch;
  batch.cost.waves = waves::kConnect;
  batch.messages.reserve(edges.size());
  for (const EdgeState& e : edges) {
    if (!e.alive || e.loop || e.x == e.y) continue;
    batch.messages.push_back({std::max(e.x, e.y), std::min(e.x, e.y), e.id});
  }
  batch.cost.messages = batch.messages.size();
  return batch;
}

MessageBatch parent_connect(std::span<const EdgeState> edges, const LabelForest& f,
                            Resolution resolution) {
  MessageBatch batch = fetched_batch(edges, waves::kParentConnect, resolution);
  for (const EdgeState& e : edges) {
    if (!e.alive) continue;
    const Vertex a = f.parent(e.x);
    const Vertex b = f.parent(e.y);
    if (a == b) continue;
    batch.messages.push_back({std::max(a, b), std::min(a, b), e.id});
  }
  batch.cost.messages += batch.messages.size();
  return batch;
}

MessageBatch extended_connect(std::span<const EdgeState> edges, const LabelForest& f) {
  MessageBatch batch = fetched_batch(edges, waves::kExtendedConnect, Resolution::kMinCombining);
  batch.messages.reserve(2 * edges.size());
  for (const EdgeState& e : edges) {
    if (!e.alive) continue;
    const Vertex x = f.parent(e.x);
    const Vertex y = f.parent(e.y);
    if (y < x) {
      batch.messages.push_back({e.x, y, e.id});
      batch.messages.push_back({x, y, e.id});
    } else {
      batch.messages.push_back({e.y, x, e.id});
      batch.messages.push_back({y, x, e.id});
    }
  }
  batch.cost.messages += batch.messages.size();
  return batch;
}

MessageBatch max_parent_connect(std::span<const EdgeState> edges, const LabelForest& f,
                                Resolution resolution) {
  MessageBatch batch = fetched_batch(edges, waves::kMaxParentConnect, resolution);
  for (const EdgeState& e : edges) {
    if (!e.alive) continue;
    const Vertex a = f.parent(e.x);
    const Vertex b = f.parent(e.y);
    if (a == b) continue;
    batch.messages.push_back({std::min(a, b), std::max(a, b), e.id});
  }
  batch.cost.messages += batch.messages.size();
  return batch;
}

MessageBatch random_connect(std::span<const EdgeState> edges, const LabelForest& f,
                            std::span<const std::uint8_t> heads) {
  check_flags(heads, f, "random_connect");
  MessageBatch batch;
  batch.resolution = Resolution::kArbitrary;
  batch.cost.waves = waves::kRandomConnect;
  for (const EdgeState& e : edges) {
    if (!e.alive) continue;
    const Vertex a = f.parent(e.x);
    const Vertex b = f.parent(e.y);
    if (a == b) continue;
    if (heads[a] && !heads[b]) batch.messages.push_back({b, a, e.id});
    if (heads[b] && !heads[a]) batch.messages.push_back({a, b, e.id});
  }
  batch.cost.messages = batch.messages.size();
  return batch;
}

ForestStep update(const LabelForest& f, const MessageBatch& batch) {
  require(batch, Resolution::kMinCombining, "update");
  const Delivery got = resolve_min(batch, f.size());
  ForestStep step{f, false, {}, {}};
  for (Vertex v = 1; v <= f.size(); ++v) {
    if (got.value[v] != kNoVertex && got.value[v] < f.parent(v)) {
      step.forest.set_parent(v, got.value[v]);
      step.changed = true;
      step.hooks.push_back({v, got.value[v], got.sender[v]});
    }
  }
  return step;
}

ForestStep root_update(const LabelForest& f, const MessageBatch& batch) {
  require(batch, Resolution::kMinCombining, "root_update");
  const Delivery got = resolve_min(batch, f.size());
  ForestStep step{f, false, {}, {}};
  for (Vertex v = 1; v <= f.size(); ++v) {
    if (f.is_root(v) && got.value[v] != kNoVertex && got.value[v] < v) {
      step.forest.set_parent(v, got.value[v]);
      step.changed = true;
      step.hooks.push_back({v, got.value[v], got.sender[v]});
    }
  }
  return step;
}

ForestStep arbitrary_root_update(const LabelForest& f, const MessageBatch& batch,
                                 const ArbitraryPolicy& policy) {
  require(batch, Resolution::kArbitrary, "arbitrary_root_update");
  return gated_arbitrary_update(f, batch, {}, policy);
}

ForestStep flat_root_update(const LabelForest& f, const MessageBatch& batch,
                            std::span<const std::uint8_t> flat_flags,
                            const ArbitraryPolicy& policy) {
  require(batch, Resolution::kArbitrary, "flat_root_update");
  check_flags(flat_flags, f, "flat_root_update");
  return gated_arbitrary_update(f, batch, flat_flags, policy);
}

ForestStep passive_root_update(const LabelForest& f, const MessageBatch& batch,
                               std::span<const std::uint8_t> passive_flags,
                               const ArbitraryPolicy& policy) {
  require(batch, Resolution::kArbitrary, "passive_root_update");
  check_flags(passive_flags, f, "passive_root_update");
  return gated_arbitrary_update(f, batch, passive_flags, policy);
}

ForestStep shortcut(const LabelForest& f) {
  ForestStep step{f, false, {waves::kShortcut, 0}, {}};
  for (Vertex v = 1; v <= f.size(); ++v) {
    const Vertex p = f.parent(v);
    if (p == v) continue;
    ++step.cost.messages;  // v.p replies with its parent
    const Vertex g = f.parent(p);
    if (g != p) {
      step.forest.set_parent(v, g);
      step.changed = true;
    }
  }
  return step;
}

FixpointStep shortcut_to_fixpoint(const LabelForest& f) {
  FixpointStep out{f, 0, 0, {}};
  for (;;) {
    ForestStep step = shortcut(out.forest);
    ++out.iterations;
    out.cost += step.cost;
    if (!step.changed) break;
    ++out.effective;
    out.forest = std::move(step.forest);
  }
  return out;
}

AlterStep alter(std::span<const EdgeState> edges, const LabelForest& f, AlterMode mode) {
  AlterStep out;
  out.edges.assign(edges.begin(), edges.end());
  out.cost.waves = waves::kAlter;
  for (EdgeState& e : out.edges) {
    if (!e.alive) continue;
    out.cost.messages += kFetchRepliesPerEdge;
    const Vertex x = f.parent(e.x);
    const Vertex y = f.parent(e.y);
    const bool strengthened_hit = mode.strengthened && (x == y || e.x == y || e.y == x);
    if (strengthened_hit || (x == y && mode.loops == LoopMode::kDelete)) {
      e.alive = false;
      ++out.deleted;
      continue;
    }
    e.x = x;
    e.y = y;
    if (x == y && !e.loop) {
      e.loop = true;
      ++out.looped;
    }
  }
  return out;
}

SrtStep srt_round(const LabelForest& f, std::span<const EdgeState> edges) {
  const Vertex n = f.size();
  SrtStep out{f, false, {waves::kSrtRound, 0}, {}};
  std::uint64_t messages = 0;

  // Line 1 (fetch both parents, then one conditional send) and line 2.
  VertexArray<Vertex>& proposal = out.proposal;
  proposal.assign(f.raw().begin(), f.raw().end());
  for (const EdgeState& e : edges) {
    if (!e.alive) continue;
    messages += kFetchRepliesPerEdge + 1;
    const Vertex a = f.parent(e.x);
    const Vertex b = f.parent(e.y);
    if (a < b) {
      proposal[e.y] = std::min(proposal[e.y], a);
    } else {
      proposal[e.x] = std::min(proposal[e.x], b);
    }
  }

  // Line 5 folds in everything received: line-1 values (already in
  // proposal), line-3 notifications, and line-4 grandparents.
  VertexArray<Vertex> received(proposal);
  for (Vertex v = 1; v <= n; ++v) {
    const Vertex p = f.parent(v);
    if (proposal[v] < p) {  // line 3
      if (p != v) ++messages;
      received[p] = std::min(received[p], proposal[v]);
    }
  }
  for (Vertex v = 1; v <= n; ++v) {  // line 4
    const Vertex target = proposal[v];
    if (target != v) ++messages;
    received[v] = std::min(received[v], f.parent(target));
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (received[v] < f.parent(v)) {
      out.forest.set_parent(v, received[v]);
      out.changed = true;
    }
  }
  out.cost.messages = messages;
  return out;
}

}  // namespace cclab
