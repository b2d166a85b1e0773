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

#ifndef CCLAB_GRAPH_HPP_
#define CCLAB_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cclab/types.hpp"

namespace cclab {

struct Edge {
  Vertex v = kNoVertex;
  Vertex w = kNoVertex;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Raised for malformed edge lists and invalid graph parameters.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable undirected multigraph on vertices 1..n.
//
// Duplicate edges and self-loops are kept verbatim. Every edge contributes
// one adjacency entry at each end, so a self-loop (v, v) appears twice in
// the neighbor list of v.
class Graph {
 public:
  // Throws GraphError unless n > 1, the edge list is non-empty, and every
  // end lies in 1..n.
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

 private:
  Vertex n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;  // CSR offsets, size n + 2
  std::vector<Vertex> adjacency_;
};

// Parses the edge-list text format: one "v w" pair per line, optionally
// preceded by a line "n <count>". Blank lines and lines starting with '#'
// are ignored; CRLF line endings are accepted.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Writes the edge-list format. A "n <count>" header is emitted only when n
// exceeds the largest vertex id used by an edge, so parsing and writing
// round-trip. Each comment line is prefixed with "# ".
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> comments = {});
std::string to_edge_list(const Graph& g,
                         std::span<const std::string> comments = {});

// Connected-component partition. Components are numbered 0..count-1 in
// increasing order of their minimum vertex, so two partitions of the same
// vertex set are equal iff they compare equal.
struct Partition {
  VertexArray<std::uint32_t> component;  // slot 0 unused
  std::vector<Vertex> minimum;           // per component
  std::vector<std::uint32_t> size;       // per component

  std::size_t count() const { return minimum.size(); }
  bool same(Vertex a, Vertex b) const { return component[a] == component[b]; }

  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition components_bfs(const Graph& g);

// Largest n accepted by diameter().
inline constexpr Vertex kDiameterLimit = 10'000;

// Exact maximum component diameter via all-sources breadth-first search
// (bit-parallel: one frontier bitset per source). Throws GraphError when
// n > kDiameterLimit.
std::uint32_t diameter(const Graph& g);

// Lower bound on the maximum component diameter from repeated double-sweep
// BFS. Linear time per sweep; exact on trees.
std::uint32_t diameter_lower_bound(const Graph& g, int sweeps_per_component = 4);

// Single-source BFS distances; unreachable vertices get UINT32_MAX.
VertexArray<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

}  // namespace cclab

#endif  // CCLAB_GRAPH_HPP_
