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


#ifndef CCLAB_DRIVERS_HPP_
#define CCLAB_DRIVERS_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cclab/algorithm.hpp"
#include "cclab/edges.hpp"
#include "cclab/forest.hpp"
#include "cclab/graph.hpp"
#include "cclab/potential.hpp"
#include "cclab/primitives.hpp"

namespace cclab {

// An enabled invariant hook failed.
class HookViolation : public std::runtime_error {
 public:
  HookViolation(std::string hook, std::uint32_t round, std::string_view primitive,
                const std::string& detail);

  const std::string& hook() const { return hook_; }
  std::uint32_t round() const { return round_; }

 private:
  std::string hook_;
  std::uint32_t round_;
};

// The run did not stop within its round limit.
class RoundLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StepKind : std::uint8_t {
  kConnect,   // produces messages only
  kUpdate,    // may change parents of roots or all vertices
  kShortcut,  // one shortcut pass
  kAlter,     // moves edge ends
  kSrt,       // one whole SRT round
};

// True for the kinds after which parents may differ: updates, shortcut
// passes and SRT rounds.
bool changes_parents(StepKind kind);

struct StepEvent {
  std::uint32_t round = 0;
  std::string_view primitive;
  StepKind kind = StepKind::kConnect;
  bool changed = false;  // some parent (or edge, for alter) changed
  Cost cost;             // of this primitive
  Cost total;            // since the start of the run
};

// Invariant checks. Each check only runs for the algorithms it applies to
// and is silently skipped elsewhere; RunHooks::all() turns on everything.
struct RunHooks {
  bool forest = true;            // acyclic after every primitive
  bool min_labeling = true;      // parent <= v, never increases, stays a non-root
  bool green_target = false;     // a vertex only hooks onto a green vertex (P E A R RA)
  bool color_invariants = false; // green/red parent and grandparent rules (A, loops kept)
  bool root_paths = false;       // roots of a component joined by alive edges (A RA SA)
  bool level_sum = false;        // shortcut raises green path levels (A, loops kept)
  bool potentials = false;       // potential inequalities (R RA, one shortcut per round)
  bool flat_forest = true;       // trees flat after every round (REIF)

  // Graph distance; when set, dist(v, v.p) <= 2^waves after every primitive.
  std::function<std::uint64_t(Vertex, Vertex)> distance;

  // Called after every primitive with the state it produced.
  std::function<void(const StepEvent&, const LabelForest&, std::span<const EdgeState>)>
      observer;

  static RunHooks all();
  static RunHooks none();
};

struct RunOptions {
  std::uint32_t round_limit = 0;  // 0 selects 64 n
  bool snapshots = false;         // parent array after every primitive
  bool round_forests = false;     // parent array at the end of every round
  bool tree_records = false;      // per-tree stats with activity and phi
};

struct RoundRecord {
  std::uint32_t round = 0;
  Cost cost;
  bool changed = false;
  std::uint32_t shortcut_iterations = 0;  // passes including confirming ones
  std::uint32_t effective_shortcuts = 0;  // passes that changed a parent
  std::uint32_t tree_count = 0;
  std::uint32_t active_trees = 0;         // from round 2; all trees in round 2
  std::optional<std::uint64_t> potential; // monotone kinds, from round 2
  std::size_t green = 0;
  std::size_t red = 0;
  std::vector<std::uint8_t> coins;        // REIF: 1-indexed heads flags
  std::vector<std::vector<Vertex>> snapshots;
  std::vector<Vertex> forest;             // end of round, when requested
  std::vector<TreePotential> trees;       // when requested
};

struct RunTrace {
  AlgorithmSpec spec;
  Vertex n = 0;
  std::size_t m = 0;
  std::vector<RoundRecord> rounds;
  Cost total;
  std::uint64_t shortcut_iterations = 0;
  std::uint64_t effective_shortcuts = 0;
  LabelForest final_forest;
  std::optional<std::vector<EdgeId>> spanning_forest;
  bool passivity_reconstructed = false;  // SV passivity is inferred, see drivers.cpp

  std::uint32_t round_count() const { return static_cast<std::uint32_t>(rounds.size()); }
};

// Step-by-step run of one algorithm. Each call to step() executes exactly
// one primitive (one pass for shortcut-to-fixpoint loops).
class Execution {
 public:
  Execution(const Graph& g, const AlgorithmSpec& spec, RunHooks hooks = {},
            RunOptions options = {});
  ~Execution();
  Execution(Execution&&) noexcept;
  Execution& operator=(Execution&&) noexcept;

  // Returns false, doing nothing, once the run has terminated. Throws
  // HookViolation or RoundLimitExceeded.
  bool step();
  bool finished() const;

  const StepEvent& last() const;
  const LabelForest& forest() const;
  std::span<const EdgeState> edges() const;
  std::uint32_t round() const;

  // Runs to termination and returns the trace; the execution is spent.
  RunTrace finish();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

RunTrace run(const AlgorithmSpec& spec, const Graph& g, const RunHooks& hooks = {},
             const RunOptions& options = {});

struct Divergence {
  std::size_t checkpoint = 0;  // 0-based index of parent checkpoints
  std::uint32_t round_a = 0;
  std::uint32_t round_b = 0;
  std::string primitive_a;     // empty when that side had terminated
  std::string primitive_b;
  Vertex vertex = kNoVertex;   // first differing vertex, if both ran
  Vertex parent_a = kNoVertex;
  Vertex parent_b = kNoVertex;

  std::string describe() const;
};

struct LockstepResult {
  std::size_t checkpoints = 0;  // compared instants
  std::optional<Divergence> divergence;

  bool equal() const { return !divergence.has_value(); }
};

// Runs both specs side by side and compares parents after every primitive
// that can change them. Reaching termination at different instants counts
// as a divergence.
LockstepResult run_lockstep(const AlgorithmSpec& a, const AlgorithmSpec& b, const Graph& g,
                            const RunHooks& hooks = RunHooks::none());

// Checks that `edges` is a spanning forest of g: acyclic with n - c edges.
bool is_spanning_forest(const Graph& g, std::span<const EdgeId> edges);

}  // namespace cclab

#endif  // CCLAB_DRIVERS_HPP_
