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


#ifndef CCLAB_ORACLE_HPP_
#define CCLAB_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "cclab/drivers.hpp"
#include "cclab/dsu.hpp"
#include "cclab/forest.hpp"
#include "cclab/graph.hpp"

namespace cclab {

// Component partition computed with union-find, in the same normalized
// form as components_bfs.
Partition oracle_components(const Graph& g);

struct Counterexample {
  Vertex vertex = kNoVertex;
  std::string reason;
};

// Checks a terminated forest: every tree flat, trees equal to components,
// each label a member of its component, and with min_labeling each label
// the component minimum.
std::optional<Counterexample> verify_final(const LabelForest& f, const Graph& g,
                                           bool min_labeling);

struct SearchOptions {
  Vertex max_n = 13;          // at most 13
  std::uint64_t budget = 0;   // lockstep runs allowed; 0 means unlimited
  unsigned workers = 1;
};

enum class SearchStatus : std::uint8_t { kFound, kNone, kBudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::kNone;
  std::optional<Graph> witness;
  LockstepResult lockstep;      // of the witness
  std::uint64_t examined = 0;   // lockstep runs performed
  Vertex last_n = 0;            // largest n fully or partly searched
};

// Searches connected labeled graphs in order of (n, m, lexicographic edge
// list) for the first one on which run_lockstep(a, b) diverges. Labels
// matter to the algorithms, so isomorphic relabelings are all visited.
// Throws std::invalid_argument for max_n outside 2..13.
SearchResult divergence_search(const AlgorithmSpec& a, const AlgorithmSpec& b,
                               const SearchOptions& options = {});

std::string to_string(SearchStatus status);

}  // namespace cclab

#endif  // CCLAB_ORACLE_HPP_
