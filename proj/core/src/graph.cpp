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

#include "cclab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace cclab {

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ <= 1) throw GraphError("graph needs more than one vertex");
  if (edges_.empty()) throw GraphError("graph needs at least one edge");
  if (edges_.size() >= static_cast<std::size_t>(kNoEdge)) {
    throw GraphError("too many edges");
  }
  offsets_.assign(static_cast<std::size_t>(n_) + 2, 0);
  for (const Edge& e : edges_) {
    if (e.v < 1 || e.v > n_ || e.w < 1 || e.w > n_) {
      throw GraphError("edge (" + std::to_string(e.v) + ", " + std::to_string(e.w) +
                       ") has an end outside 1.." + std::to_string(n_));
    }
    ++offsets_[e.v + 1];
    ++offsets_[e.w + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.v]++] = e.w;
    adjacency_[fill[e.w]++] = e.v;
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Vertex parse_vertex(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  const std::string where = "line " + std::to_string(line_no) + ": ";
  if (ec == std::errc::result_out_of_range) {
    throw GraphError(where + "integer out of range '" + std::string(token) + "'");
  }
  if (ec != std::errc() || ptr != end) {
    throw GraphError(where + "non-integer token '" + std::string(token) + "'");
  }
  if (value < 1) throw GraphError(where + "vertex id below 1");
  if (value >= std::numeric_limits<Vertex>::max()) {
    throw GraphError(where + "vertex id too large");
  }
  return static_cast<Vertex>(value);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  Vertex declared_n = 0;
  Vertex max_id = 0;
  bool seen_content = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tokens = split_ws(body);
    if (!seen_content && tokens.size() == 2 && tokens[0] == "n") {
      declared_n = parse_vertex(tokens[1], line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) {
      throw GraphError("line " + std::to_string(line_no) +
                       ": expected two vertex ids, got " + std::to_string(tokens.size()) +
                       " tokens");
    }
    const Vertex v = parse_vertex(tokens[0], line_no);
    const Vertex w = parse_vertex(tokens[1], line_no);
    max_id = std::max({max_id, v, w});
    edges.push_back({v, w});
  }
  if (edges.empty()) throw GraphError("empty edge list");
  if (declared_n != 0 && declared_n < max_id) {
    throw GraphError("declared n = " + std::to_string(declared_n) +
                     " is smaller than vertex id " + std::to_string(max_id));
  }
  return Graph(declared_n != 0 ? declared_n : max_id, std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  Vertex max_id = 0;
  for (const Edge& e : g.edges()) max_id = std::max({max_id, e.v, e.w});
  if (g.n() > max_id) out << "n " << g.n() << '\n';
  for (const Edge& e : g.edges()) out << e.v << ' ' << e.w << '\n';
}

std::string to_edge_list(const Graph& g, std::span<const std::string> comments) {
  std::ostringstream out;
  write_edge_list(out, g, comments);
  return out.str();
}

Partition components_bfs(const Graph& g) {
  Partition p;
  p.component.assign(static_cast<std::size_t>(g.n()) + 1, UINT32_MAX);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  for (Vertex s = 1; s <= g.n(); ++s) {
    if (p.component[s] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(p.minimum.size());
    p.minimum.push_back(s);
    queue.clear();
    queue.push_back(s);
    p.component[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex u : g.neighbors(queue[head])) {
        if (p.component[u] == UINT32_MAX) {
          p.component[u] = id;
          queue.push_back(u);
        }
      }
    }
    p.size.push_back(static_cast<std::uint32_t>(queue.size()));
  }
  p.component[0] = 0;
  return p;
}

VertexArray<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  VertexArray<std::uint32_t> dist(static_cast<std::size_t>(g.n()) + 1, UINT32_MAX);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] == UINT32_MAX) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::uint32_t diameter(const Graph& g) {
  if (g.n() > kDiameterLimit) {
    throw GraphError("diameter: n = " + std::to_string(g.n()) + " exceeds limit " +
                     std::to_string(kDiameterLimit));
  }
  const std::size_t rows = static_cast<std::size_t>(g.n()) + 1;
  const std::size_t words = (rows + 63) / 64;
  // reach[v] holds the set of sources whose BFS ball currently contains v.
  std::vector<std::uint64_t> reach(rows * words, 0);
  std::vector<std::uint64_t> next(rows * words, 0);
  for (Vertex v = 1; v <= g.n(); ++v) reach[v * words + v / 64] |= std::uint64_t{1} << (v % 64);

  std::uint32_t levels = 0;
  for (;;) {
    bool changed = false;
    for (Vertex v = 1; v <= g.n(); ++v) {
      std::uint64_t* dst = &next[v * words];
      const std::uint64_t* own = &reach[v * words];
      std::copy(own, own + words, dst);
      for (Vertex u : g.neighbors(v)) {
        const std::uint64_t* src = &reach[u * words];
        for (std::size_t k = 0; k < words; ++k) dst[k] |= src[k];
      }
      if (!changed && !std::equal(dst, dst + words, own)) changed = true;
    }
    if (!changed) break;
    ++levels;
    reach.swap(next);
  }
  return levels;
}

std::uint32_t diameter_lower_bound(const Graph& g, int sweeps_per_component) {
  const Partition parts = components_bfs(g);
  std::uint32_t best = 0;
  for (std::size_t c = 0; c < parts.count(); ++c) {
    if (parts.size[c] < 2) continue;
    Vertex start = parts.minimum[c];
    for (int sweep = 0; sweep < std::max(1, sweeps_per_component); ++sweep) {
      const auto dist = bfs_distances(g, start);
      Vertex far = start;
      for (Vertex v = 1; v <= g.n(); ++v) {
        if (dist[v] != UINT32_MAX && dist[v] > dist[far]) far = v;
      }
      best = std::max(best, dist[far]);
      if (far == start) break;
      start = far;
    }
  }
  return best;
}

}  // namespace cclab
