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

#include "cclab/forest.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cclab {

std::vector<EdgeState> make_edge_states(const Graph& g) {
  std::vector<EdgeState> states;
  states.reserve(g.m());
  EdgeId id = 0;
  for (const Edge& e : g.edges()) {
    states.push_back({id++, e, e.v, e.w, true, e.v == e.w});
  }
  return states;
}

LabelForest LabelForest::identity(Vertex n) {
  if (n <= 1) throw std::invalid_argument("label forest needs n > 1");
  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 0; v <= n; ++v) parent[v] = v;
  parent[0] = kNoVertex;
  return LabelForest(std::move(parent));
}

LabelForest LabelForest::from_parents(std::span<const Vertex> parents) {
  const auto n = static_cast<Vertex>(parents.size());
  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, kNoVertex);
  for (Vertex v = 1; v <= n; ++v) {
    const Vertex p = parents[v - 1];
    if (p < 1 || p > n) {
      throw std::invalid_argument("parent of " + std::to_string(v) + " is out of range");
    }
    parent[v] = p;
  }
  return LabelForest(std::move(parent));
}

std::string ForestViolation::describe() const {
  std::ostringstream out;
  out << "cycle through vertex " << vertex << ": {";
  for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? "," : "") << cycle[i];
  out << "}";
  return out.str();
}

std::optional<ForestViolation> assert_forest(const LabelForest& f) {
  const Vertex n = f.size();
  std::vector<Vertex> stamp(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex s = 1; s <= n; ++s) {
    if (stamp[s] != 0) continue;
    Vertex v = s;
    while (stamp[v] == 0) {
      stamp[v] = s;
      if (f.is_root(v)) break;
      v = f.parent(v);
    }
    if (stamp[v] == s && !f.is_root(v)) {
      ForestViolation violation{v, {v}};
      for (Vertex u = f.parent(v); u != v; u = f.parent(u)) violation.cycle.push_back(u);
      return violation;
    }
  }
  return std::nullopt;
}

VertexArray<Vertex> find_roots(const LabelForest& f) {
  const Vertex n = f.size();
  VertexArray<Vertex> root(static_cast<std::size_t>(n) + 1, kNoVertex);
  std::vector<Vertex> path;
  for (Vertex s = 1; s <= n; ++s) {
    if (root[s] != kNoVertex) continue;
    path.clear();
    Vertex v = s;
    while (root[v] == kNoVertex && !f.is_root(v)) {
      path.push_back(v);
      v = f.parent(v);
    }
    const Vertex r = root[v] != kNoVertex ? root[v] : v;
    root[v] = r;
    for (Vertex u : path) root[u] = r;
  }
  return root;
}

namespace {

VertexArray<std::uint32_t> depths(const LabelForest& f) {
  const Vertex n = f.size();
  VertexArray<std::uint32_t> depth(static_cast<std::size_t>(n) + 1, UINT32_MAX);
  std::vector<Vertex> path;
  for (Vertex s = 1; s <= n; ++s) {
    if (depth[s] != UINT32_MAX) continue;
    path.clear();
    Vertex v = s;
    while (depth[v] == UINT32_MAX && !f.is_root(v)) {
      path.push_back(v);
      v = f.parent(v);
    }
    if (depth[v] == UINT32_MAX) depth[v] = 0;
    std::uint32_t d = depth[v];
    for (auto it = path.rbegin(); it != path.rend(); ++it) depth[*it] = ++d;
  }
  return depth;
}

}  // namespace

std::vector<TreeStats> tree_stats(const LabelForest& f) {
  const Vertex n = f.size();
  const auto root = find_roots(f);
  const auto depth = depths(f);
  VertexArray<std::uint32_t> slot(static_cast<std::size_t>(n) + 1, UINT32_MAX);
  std::vector<TreeStats> stats;
  for (Vertex v = 1; v <= n; ++v) {
    if (f.is_root(v)) {
      slot[v] = static_cast<std::uint32_t>(stats.size());
      stats.push_back({v, 0, 0, true});
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    TreeStats& t = stats[slot[root[v]]];
    ++t.size;
    t.height = std::max(t.height, depth[v]);
  }
  for (auto& t : stats) t.flat = t.height <= 1;
  return stats;
}

VertexArray<std::uint8_t> flat_tree_flags(const LabelForest& f) {
  const Vertex n = f.size();
  VertexArray<std::uint8_t> flat(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (f.is_root(v)) flat[v] = 1;
  }
  // A tree is flat iff no vertex has a non-root parent.
  const auto root = find_roots(f);
  for (Vertex v = 1; v <= n; ++v) {
    if (!f.is_root(f.parent(v))) flat[root[v]] = 0;
  }
  return flat;
}

bool all_flat(const LabelForest& f) {
  for (Vertex v = 1; v <= f.size(); ++v) {
    if (!f.is_root(f.parent(v))) return false;
  }
  return true;
}

std::size_t Coloring::green_count() const {
  return static_cast<std::size_t>(
      std::count(color.begin() + 1, color.end(), Color::kGreen));
}

Coloring colorize(const LabelForest& f, std::span<const EdgeState> edges, ColoringMode mode) {
  const Vertex n = f.size();
  Coloring c{mode, VertexArray<Color>(static_cast<std::size_t>(n) + 1, Color::kRed)};
  if (mode == ColoringMode::kEdgeBased) {
    for (Vertex v = 1; v <= n; ++v) {
      if (f.is_root(v)) c.color[v] = Color::kGreen;
    }
    for (const EdgeState& e : edges) {
      if (!e.alive) continue;
      c.color[e.x] = Color::kGreen;
      c.color[e.y] = Color::kGreen;
    }
  } else {
    for (Vertex v = 1; v <= n; ++v) {
      // Roots are green; so is every parent.
      c.color[f.parent(v)] = Color::kGreen;
    }
  }
  return c;
}

LevelError::LevelError(Vertex child, Vertex parent)
    : std::logic_error("green child " + std::to_string(child) + " has parent " +
                       std::to_string(parent) + " outside the green numbering"),
      child_(child) {}

std::int64_t LevelAssignment::level_sum(std::span<const Vertex> vertices) const {
  std::int64_t sum = 0;
  for (Vertex v : vertices) {
    if (level[v] >= 0) sum += level[v];
  }
  return sum;
}

LevelAssignment relevel(const LabelForest& f, const LevelAssignment& numbering) {
  const Vertex n = f.size();
  LevelAssignment out;
  out.renumber = numbering.renumber;
  out.green_count = numbering.green_count;
  out.level.assign(static_cast<std::size_t>(n) + 1, -1);
  for (Vertex v = 1; v <= n; ++v) {
    if (out.renumber[v] == 0 || f.is_root(v)) continue;
    const Vertex p = f.parent(v);
    if (out.renumber[p] == 0) throw LevelError(v, p);
    if (out.renumber[p] >= out.renumber[v]) {
      throw std::domain_error("level of " + std::to_string(v) +
                              " undefined: parent is not smaller");
    }
    const std::uint32_t gap = out.renumber[v] - out.renumber[p];
    out.level[v] = static_cast<std::int32_t>(std::bit_width(gap)) - 1;
  }
  return out;
}

LevelAssignment levels(const LabelForest& f, const Coloring& c) {
  const Vertex n = f.size();
  LevelAssignment numbering;
  numbering.renumber.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (c.green(v)) numbering.renumber[v] = ++numbering.green_count;
  }
  return relevel(f, numbering);
}

}  // namespace cclab
