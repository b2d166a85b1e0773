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

#ifndef CCLAB_FOREST_HPP_
#define CCLAB_FOREST_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cclab/edges.hpp"
#include "cclab/types.hpp"

namespace cclab {

// The label forest: entry v of the parent array holds v.p. A vertex with
// v.p == v is a root. Whether the parent digraph actually is a forest is
// checked by assert_forest(), not enforced on construction.
class LabelForest {
 public:
  LabelForest() = default;

  // parent[v] = v for all v. Throws std::invalid_argument when n <= 1.
  static LabelForest identity(Vertex n);

  // Builds a forest from a 1-indexed parent list (element i is the parent of
  // vertex i + 1). Throws std::invalid_argument on ids outside 1..n.
  static LabelForest from_parents(std::span<const Vertex> parents);

  Vertex size() const { return static_cast<Vertex>(parent_.size() - 1); }
  Vertex parent(Vertex v) const { return parent_[v]; }
  void set_parent(Vertex v, Vertex p) { parent_[v] = p; }
  bool is_root(Vertex v) const { return parent_[v] == v; }

  // Raw storage, size n + 1 with slot 0 unused.
  std::span<const Vertex> raw() const { return parent_; }
  std::span<Vertex> raw() { return parent_; }

  // 1-indexed parent list, the serialized form.
  std::vector<Vertex> to_list() const { return {parent_.begin() + 1, parent_.end()}; }

  friend bool operator==(const LabelForest&, const LabelForest&) = default;

 private:
  explicit LabelForest(std::vector<Vertex> parent) : parent_(std::move(parent)) {}
  std::vector<Vertex> parent_{kNoVertex};
};

struct ForestViolation {
  Vertex vertex = kNoVertex;   // a vertex on a non-trivial cycle
  std::vector<Vertex> cycle;   // the cycle, starting at vertex

  std::string describe() const;
};

// Succeeds iff following parents from every vertex reaches a self-labeled
// root. O(n) with visitation stamps.
std::optional<ForestViolation> assert_forest(const LabelForest& f);

// Root of every vertex. Requires assert_forest(f) to hold.
VertexArray<Vertex> find_roots(const LabelForest& f);

struct TreeStats {
  Vertex root = kNoVertex;
  std::size_t size = 0;
  std::uint32_t height = 0;  // a singleton has height 0
  bool flat = true;          // singletons count as flat

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

// One record per tree, ordered by root. Requires assert_forest(f) to hold.
std::vector<TreeStats> tree_stats(const LabelForest& f);

// Per-root flatness flags (entries for non-roots are false).
VertexArray<std::uint8_t> flat_tree_flags(const LabelForest& f);

bool all_flat(const LabelForest& f);

enum class Color : std::uint8_t { kGreen, kRed };

enum class ColoringMode : std::uint8_t {
  // Green iff a root or an end of an alive edge (loops included). Used for
  // the edge-altering algorithms.
  kEdgeBased,
  // Red iff a leaf, i.e. a non-root without children.
  kTreeBased,
};

struct Coloring {
  ColoringMode mode = ColoringMode::kTreeBased;
  VertexArray<Color> color;

  bool green(Vertex v) const { return color[v] == Color::kGreen; }
  std::size_t green_count() const;
  std::size_t red_count() const { return color.size() - 1 - green_count(); }
};

Coloring colorize(const LabelForest& f, std::span<const EdgeState> edges, ColoringMode mode);

// Raised by levels() when a green child has a red parent.
class LevelError : public std::logic_error {
 public:
  LevelError(Vertex child, Vertex parent);
  Vertex child() const { return child_; }

 private:
  Vertex child_;
};

// Order-preserving renumbering of the green vertices to 1..n' together with
// the level floor(lg(r(v) - r(v.p))) of every green child v.
struct LevelAssignment {
  VertexArray<std::uint32_t> renumber;  // 0 for vertices outside the scope
  std::uint32_t green_count = 0;        // n'
  VertexArray<std::int32_t> level;      // -1 where undefined

  std::int64_t level_sum(std::span<const Vertex> vertices) const;
};

// Renumbers the green vertices of c and computes levels under f.
LevelAssignment levels(const LabelForest& f, const Coloring& c);

// Recomputes levels under f keeping an earlier renumbering fixed. Vertices
// whose parent fell outside the numbering scope raise LevelError.
LevelAssignment relevel(const LabelForest& f, const LevelAssignment& numbering);

}  // namespace cclab

#endif  // CCLAB_FOREST_HPP_
