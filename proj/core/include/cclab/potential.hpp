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


#ifndef CCLAB_POTENTIAL_HPP_
#define CCLAB_POTENTIAL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cclab/algorithm.hpp"
#include "cclab/forest.hpp"
#include "cclab/graph.hpp"

namespace cclab {

// phi of one tree: 0 when passive, 3 when active and flat, h + 1 for
// height h >= 2.
std::uint64_t tree_potential(bool active, bool flat, std::uint32_t height);

struct TreePotential {
  Vertex root = kNoVertex;
  std::uint32_t size = 0;
  std::uint32_t height = 0;
  bool flat = true;
  bool active = true;
  std::uint64_t phi = 0;
  // Sum of phi over the previous round's trees inside this one. Filled from
  // round 3 on.
  std::optional<std::uint64_t> previous;
};

struct PotentialRound {
  std::uint32_t round = 0;
  std::vector<TreePotential> trees;  // ordered by root
  std::uint64_t total = 0;
  std::uint32_t active = 0;
};

struct PotentialViolation {
  std::uint32_t round = 0;
  Vertex root = kNoVertex;
  std::string check;
  std::string detail;
};

// Per-round tree potentials for a monotone run, fed one round-end forest
// at a time. Vertices flagged in `excluded` (typically isolated vertices)
// never appear in records or checks.
//
// With checks on, every active tree T of round k is tested for:
//   previous-sum   Phi_{k-1}(T) >= phi_k(T)                  (k >= 3)
//   drop           phi_k(T) >= 5 => 5 Phi_{k-1}(T) >= 6 phi_k(T)
//   size-bound     phi_k(T)^5 4^(k-2) <= (2|T|)^5 3^(k-2)    (k >= 2)
// and in addition:
//   no-singleton   from round 2 on every tree has two or more vertices
//   monotone       every previous tree lies inside one current tree
//   active-round   each round except the last has an active tree
class PotentialTracker {
 public:
  PotentialTracker(Vertex n, VertexArray<std::uint8_t> excluded, bool checks);

  // Records the forest at the end of `round`. Rounds must be fed in order
  // starting at 1. Returns the record from round 2 on.
  std::optional<PotentialRound> observe(std::uint32_t round, const LabelForest& end);

  // Runs the end-of-run check for rounds without active trees.
  void finish(std::uint32_t last_round);

  const std::vector<PotentialViolation>& violations() const { return violations_; }

 private:
  void fail(std::uint32_t round, Vertex root, std::string check, std::string detail);

  Vertex n_;
  VertexArray<std::uint8_t> excluded_;
  bool checks_;
  std::uint32_t last_round_ = 0;
  LabelForest previous_;
  VertexArray<Vertex> previous_roots_;
  VertexArray<std::uint32_t> previous_size_;  // per root
  VertexArray<std::uint64_t> previous_phi_;   // per root
  std::vector<std::uint32_t> idle_rounds_;    // rounds >= 2 without an active tree
  std::vector<PotentialViolation> violations_;
};

// Isolated vertices of g, as a per-vertex flag array.
VertexArray<std::uint8_t> isolated_vertices(const Graph& g);

// Per-round potentials over a window of round-end forests (element i is the
// forest after round i + 1). Throws std::invalid_argument for the
// non-monotone kinds P, E, A and SRT.
std::vector<PotentialRound> potential_report(AlgorithmKind kind,
                                             std::span<const LabelForest> round_ends,
                                             const Graph& g);

}  // namespace cclab

#endif  // CCLAB_POTENTIAL_HPP_
