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


#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "cclab/drivers.hpp"
#include "cclab/generators.hpp"
#include "support/oracles.hpp"

namespace cclab {
namespace {

using Edges = std::vector<Edge>;

Edges edges(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

oracle::EdgeList L(const Graph& g) {
  oracle::EdgeList out;
  for (const Edge& e : g.edges()) out.emplace_back(e.v, e.w);
  return out;
}

std::size_t components(const Graph& g) {
  const auto lab = oracle::component_minimum(g.n(), L(g));
  return std::set<Vertex>(lab.begin() + 1, lab.end()).size();
}

TEST(Families, Small) {
  EXPECT_EQ(edges(path_graph(3)), (Edges{{1, 2}, {2, 3}}));
  EXPECT_EQ(edges(star_graph(4)), (Edges{{1, 2}, {1, 3}, {1, 4}}));
  EXPECT_EQ(edges(cycle_graph(3)), (Edges{{1, 2}, {2, 3}, {3, 1}}));
  EXPECT_EQ(edges(complete_graph(3)), (Edges{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(edges(grid_graph(2, 2)), (Edges{{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
}

TEST(Families, Counts) {
  EXPECT_EQ(complete_graph(20).m(), 190u);
  EXPECT_EQ(grid_graph(20, 50).m(), 20u * 49 + 19u * 50);
  EXPECT_EQ(grid_graph(1, 7).m(), 6u);
  EXPECT_EQ(cycle_graph(1024).m(), 1024u);
}

TEST(Families, RangeErrors) {
  EXPECT_THROW(path_graph(1), GraphError);
  EXPECT_THROW(cycle_graph(2), GraphError);
  EXPECT_THROW(star_graph(1), GraphError);
  EXPECT_THROW(grid_graph(1, 1), GraphError);
  EXPECT_THROW(gnp_graph(10, 0.0, 1), GraphError);
  EXPECT_THROW(gnp_graph(10, 1.0, 1), GraphError);
  EXPECT_THROW(worst_case_W(1), GraphError);
}

TEST(Gnp, Deterministic) {
  EXPECT_EQ(edges(gnp_graph(100, 0.05, 7)), edges(gnp_graph(100, 0.05, 7)));
  EXPECT_NE(edges(gnp_graph(100, 0.05, 7)), edges(gnp_graph(100, 0.05, 8)));
}

TEST(Gnp, SimpleAndOrdered) {
  const Graph g = gnp_graph(300, 0.03, 2);
  std::set<std::pair<Vertex, Vertex>> seen;
  Edge last{0, 0};
  for (const Edge& e : g.edges()) {
    EXPECT_LT(e.v, e.w);
    EXPECT_TRUE(seen.insert({e.v, e.w}).second);
    EXPECT_TRUE(last.w < e.w || (last.w == e.w && last.v < e.v));
    last = e;
  }
}

TEST(Gnp, EdgeCountNearExpectation) {
  // mean p C(n,2), standard deviation below sqrt(mean); allow 5 sigma
  for (auto [n, p] : {std::pair{1000u, 0.01}, {200u, 0.1}, {5000u, 0.0003}}) {
    double total = 0;
    const int reps = 8;
    for (int s = 1; s <= reps; ++s) total += static_cast<double>(gnp_graph(n, p, s).m());
    const double mean = p * n * (n - 1) / 2.0;
    EXPECT_NEAR(total / reps, mean, 5 * std::sqrt(mean / reps)) << "n=" << n << " p=" << p;
  }
}

TEST(Transform, Triangle) {
  const Graph g = generator_transform(complete_graph(3));
  EXPECT_EQ(g.n(), 6u);
  EXPECT_EQ(g.m(), 6u);
  std::set<std::pair<Vertex, Vertex>> got;
  for (const Edge& e : g.edges()) got.insert({std::min(e.v, e.w), std::max(e.v, e.w)});
  EXPECT_EQ(got, (std::set<std::pair<Vertex, Vertex>>{
                     {1, 4}, {2, 5}, {3, 6}, {4, 5}, {5, 6}, {4, 6}}));
}

TEST(Transform, PowerCounts) {
  const Graph p = path_graph(9);
  for (unsigned r = 0; r <= 5; ++r) {
    const Graph g = generator_power(p, r);
    EXPECT_EQ(g.n(), 9u << r);
    EXPECT_EQ(g.m(), 9u * ((1u << r) - 1) + 8u);
    EXPECT_EQ(components(g), 1u);
    EXPECT_EQ(g.m(), g.n() - 1);  // a tree
  }
}

TEST(Transform, SaRoundLeavesInnerGraphOnRoots) {
  AlgorithmSpec sa;
  sa.kind = AlgorithmKind::kSA;
  std::set<std::pair<Vertex, Vertex>> alive;
  std::vector<Vertex> roots;
  RunHooks h;
  h.observer = [&](const StepEvent& e, const LabelForest& f, std::span<const EdgeState> es) {
    if (e.round != 1 || e.kind != StepKind::kAlter) return;
    for (const EdgeState& x : es) {
      if (x.alive) alive.insert({std::min(x.x, x.y), std::max(x.x, x.y)});
    }
    for (Vertex v = 1; v <= f.size(); ++v) {
      if (f.is_root(v)) roots.push_back(v);
    }
  };
  run(sa, generator_transform(complete_graph(3)), h);
  EXPECT_EQ(roots, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(alive, (std::set<std::pair<Vertex, Vertex>>{{1, 2}, {1, 3}, {2, 3}}));
}

TEST(Union, Blocks) {
  const std::vector<Graph> parts = {path_graph(3), complete_graph(3)};
  const Graph u = disjoint_union(parts);
  EXPECT_EQ(u.n(), 6u);
  EXPECT_EQ(edges(u), (Edges{{1, 2}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}));
}

TEST(WorstCase, Sizes) {
  EXPECT_EQ(worst_case_W(2).n(), 15u);
  EXPECT_EQ(worst_case_W(2).m(), 13u);
  for (unsigned k = 2; k <= 8; ++k) {
    const Graph w = worst_case_W(k);
    const std::uint64_t side = (1ull << k);
    EXPECT_EQ(w.n(), (side + 1) * (side - 1));
    // brute count: sum over i of (2^k + 1)(2^i - 1) + 2^k
    std::uint64_t m = 0;
    for (unsigned i = 0; i < k; ++i) m += (side + 1) * ((1ull << i) - 1) + side;
    EXPECT_EQ(w.m(), m);
    EXPECT_EQ(components(w), k);
    EXPECT_EQ(w.m(), w.n() - k);  // every component is a tree
  }
}

TEST(WorstCase, BlocksPreserveOrder) {
  const Graph w = worst_case_W(3);
  // First block is the path on 9 vertices, then g(P) on 18 vertices.
  EXPECT_EQ(w.edge(0), (Edge{1, 2}));
  EXPECT_EQ(w.edge(7), (Edge{8, 9}));
  for (const Edge& e : w.edges()) {
    const auto block = [](Vertex v) { return v <= 9 ? 0 : v <= 27 ? 1 : 2; };
    EXPECT_EQ(block(e.v), block(e.w));
  }
}

}  // namespace
}  // namespace cclab
