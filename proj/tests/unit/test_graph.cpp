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

#include <random>
#include <sstream>

#include "cclab/generators.hpp"
#include "cclab/graph.hpp"
#include "support/oracles.hpp"

namespace cclab {
namespace {

std::vector<std::vector<Vertex>> groups(const Partition& p) {
  std::vector<std::vector<Vertex>> out(p.count());
  for (Vertex v = 1; v < p.component.size(); ++v) out[p.component[v]].push_back(v);
  return out;
}

TEST(EdgeList, ParsesPairs) {
  const Graph g = parse_edge_list("1 2\n2 3");
  EXPECT_EQ(g.n(), 3u);
  ASSERT_EQ(g.m(), 2u);
  EXPECT_EQ(g.edge(0), (Edge{1, 2}));
  EXPECT_EQ(g.edge(1), (Edge{2, 3}));
}

TEST(EdgeList, HeaderAddsIsolatedVertices) {
  const Graph g = parse_edge_list("n 5\n1 2");
  EXPECT_EQ(g.n(), 5u);
  EXPECT_EQ(g.m(), 1u);
  EXPECT_EQ(g.degree(3), 0u);
  EXPECT_EQ(g.degree(5), 0u);
}

TEST(EdgeList, RejectsVertexZero) {
  EXPECT_THROW(parse_edge_list("0 4"), GraphError);
}

TEST(EdgeList, RejectsGarbage) {
  EXPECT_THROW(parse_edge_list("1 x"), GraphError);
  EXPECT_THROW(parse_edge_list("1 2 3"), GraphError);
  EXPECT_THROW(parse_edge_list(""), GraphError);
}

TEST(EdgeList, CommentsAndCrlf) {
  const Graph g = parse_edge_list("# hello\r\n\r\n1 2\r\n# more\n2 4\n");
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.m(), 2u);
}

TEST(EdgeList, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Vertex n = 2 + rng() % 30;
    std::vector<Edge> es;
    for (auto [a, b] : oracle::random_edges(rng, n, 1 + rng() % 40)) es.push_back({a, b});
    const Graph g(n, es);
    const std::vector<std::string> notes = {"note"};
    const std::string text = to_edge_list(g, notes);
    EXPECT_EQ(text.rfind("# note\n", 0), 0u);
    const Graph h = parse_edge_list(text);
    EXPECT_EQ(h.n(), g.n());
    ASSERT_EQ(h.m(), g.m());
    for (EdgeId e = 0; e < g.m(); ++e) EXPECT_EQ(h.edge(e), g.edge(e));
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(components_bfs(path_graph(3)).count(), 1u);

  const Partition two = components_bfs(Graph(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(groups(two), (std::vector<std::vector<Vertex>>{{1, 2}, {3, 4}}));

  const Partition star = components_bfs(star_graph(5));
  ASSERT_EQ(star.count(), 1u);
  EXPECT_EQ(star.size[0], 5u);
}

TEST(Components, MatchRelaxationOracle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Vertex n = 2 + rng() % 40;
    const auto el = oracle::random_edges(rng, n, 1 + rng() % n);
    std::vector<Edge> es;
    for (auto [a, b] : el) es.push_back({a, b});
    const Partition p = components_bfs(Graph(n, es));
    const auto lab = oracle::component_minimum(n, el);
    for (Vertex v = 1; v <= n; ++v) {
      EXPECT_EQ(p.minimum[p.component[v]], lab[v]);
      for (Vertex w = 1; w <= n; ++w) EXPECT_EQ(p.same(v, w), lab[v] == lab[w]);
    }
  }
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(path_graph(5)), 4u);
  EXPECT_EQ(diameter(complete_graph(4)), 1u);
  const Graph two = parse_edge_list("1 2\n2 3\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10");
  EXPECT_EQ(diameter(two), 6u);
  EXPECT_EQ(diameter(cycle_graph(9)), 4u);
  EXPECT_EQ(diameter(grid_graph(4, 7)), 9u);
  EXPECT_EQ(diameter(star_graph(6)), 2u);
}

TEST(Diameter, LowerBoundNeverExceedsExact) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 150; ++i) {
    const Vertex n = 2 + rng() % 50;
    const auto el = oracle::random_edges(rng, n, 1 + rng() % (2 * n));
    std::vector<Edge> es;
    for (auto [a, b] : el) es.push_back({a, b});
    const Graph g(n, es);
    const std::uint32_t d = oracle::diameter(n, el);
    EXPECT_EQ(diameter(g), d);
    EXPECT_LE(diameter_lower_bound(g), d);
  }
}

TEST(Diameter, BfsDistances) {
  const auto d = bfs_distances(path_graph(6), 3);
  EXPECT_EQ(d[1], 2u);
  EXPECT_EQ(d[6], 3u);
}

}  // namespace
}  // namespace cclab
