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

#ifndef CCLAB_EDGES_HPP_
#define CCLAB_EDGES_HPP_

#include <vector>

#include "cclab/graph.hpp"
#include "cclab/types.hpp"

namespace cclab {

// Mutable view of one input edge while an algorithm runs. Edge alteration
// moves the current ends (x, y) up the label forest; orig never changes.
//
// Invariants: loop implies x == y, and once set, loop stays set. A dead edge
// (alive == false) sends no messages and makes no vertex green.
struct EdgeState {
  EdgeId id = kNoEdge;
  Edge orig;
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
  bool alive = true;
  bool loop = false;

  friend bool operator==(const EdgeState&, const EdgeState&) = default;
};

// Initial states: current ends equal the original ends; input self-loops
// start as loops.
std::vector<EdgeState> make_edge_states(const Graph& g);

}  // namespace cclab

#endif  // CCLAB_EDGES_HPP_
