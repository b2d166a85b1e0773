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


#include "cclab/generators.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace cclab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

}  // namespace

Graph path_graph(Vertex k) {
  require(k >= 2, "path needs at least 2 vertices");
  std::vector<Edge> e;
  e.reserve(k - 1);
  for (Vertex v = 1; v < k; ++v) e.push_back({v, v + 1});
  return Graph(k, std::move(e));
}

Graph cycle_graph(Vertex k) {
  require(k >= 3, "cycle needs at least 3 vertices");
  std::vector<Edge> e;
  e.reserve(k);
  for (Vertex v = 1; v < k; ++v) e.push_back({v, v + 1});
  e.push_back({k, 1});
  return Graph(k, std::move(e));
}

Graph star_graph(Vertex k) {
  require(k >= 2, "star needs at least 2 vertices");
  std::vector<Edge> e;
  e.reserve(k - 1);
  for (Vertex v = 2; v <= k; ++v) e.push_back({1, v});
  return Graph(k, std::move(e));
}

Graph complete_graph(Vertex k) {
  require(k >= 2, "complete graph needs at least 2 vertices");
  require(k <= 20'000, "complete graph too large");
  std::vector<Edge> e;
  e.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
  for (Vertex v = 1; v <= k; ++v) {
    for (Vertex w = v + 1; w <= k; ++w) e.push_back({v, w});
  }
  return Graph(k, std::move(e));
}

Graph grid_graph(Vertex rows, Vertex cols) {
  require(rows >= 1 && cols >= 1, "grid dimensions must be positive");
  const std::uint64_t n = static_cast<std::uint64_t>(rows) * cols;
  require(n >= 2, "grid needs at least 2 vertices");
  require(n < UINT32_MAX, "grid too large");
  std::vector<Edge> e;
  for (Vertex r = 0; r < rows; ++r) {
    for (Vertex c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c + 1;
      if (c + 1 < cols) e.push_back({v, v + 1});
      if (r + 1 < rows) e.push_back({v, v + cols});
    }
  }
  return Graph(static_cast<Vertex>(n), std::move(e));
}

Graph gnp_graph(Vertex n, double p, std::uint64_t seed) {
  require(n >= 2, "gnp needs at least 2 vertices");
  require(p > 0.0 && p < 1.0, "gnp needs 0 < p < 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double log_q = std::log1p(-p);
  std::vector<Edge> e;
  e.reserve(static_cast<std::size_t>(p * n * (n - 1) / 2 * 1.1) + 16);
  // 0-based pair (w, v), w < v, scanned in order of v then w.
  std::int64_t v = 1, w = -1;
  const std::int64_t nn = n;
  while (v < nn) {
    const double r = uniform();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) e.push_back({static_cast<Vertex>(w + 1), static_cast<Vertex>(v + 1)});
  }
  require(!e.empty(), "gnp draw produced no edges");
  return Graph(n, std::move(e));
}

Graph generator_transform(const Graph& g) {
  const Vertex n = g.n();
  require(n <= UINT32_MAX / 2, "generator transform too large");
  std::vector<Edge> e;
  e.reserve(n + g.m());
  for (Vertex i = 1; i <= n; ++i) e.push_back({i, i + n});
  for (const Edge& x : g.edges()) e.push_back({x.v + n, x.w + n});
  return Graph(2 * n, std::move(e));
}

Graph generator_power(const Graph& g, unsigned r) {
  Graph out = g;
  for (unsigned i = 0; i < r; ++i) out = generator_transform(out);
  return out;
}

Graph disjoint_union(std::span<const Graph> parts) {
  require(!parts.empty(), "disjoint union of nothing");
  std::uint64_t total = 0;
  std::vector<Edge> e;
  for (const Graph& g : parts) {
    const Vertex base = static_cast<Vertex>(total);
    for (const Edge& x : g.edges()) e.push_back({x.v + base, x.w + base});
    total += g.n();
    require(total < UINT32_MAX, "disjoint union too large");
  }
  return Graph(static_cast<Vertex>(total), std::move(e));
}

Graph worst_case_W(unsigned k) {
  require(k >= 2, "W(k) needs k >= 2");
  require(k <= 15, "W(k) needs k <= 15");
  const Graph p = path_graph((Vertex{1} << k) + 1);
  std::vector<Graph> parts;
  parts.reserve(k);
  parts.push_back(p);
  for (unsigned i = 1; i < k; ++i) parts.push_back(generator_transform(parts.back()));
  return disjoint_union(parts);
}

}  // namespace cclab
