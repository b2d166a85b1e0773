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

#include <algorithm>

#include "cclab/edges.hpp"
#include "cclab/primitives.hpp"

namespace cclab {
namespace {

LabelForest F(std::vector<Vertex> p) { return LabelForest::from_parents(p); }

std::vector<EdgeState> E(std::initializer_list<std::pair<Vertex, Vertex>> list) {
  std::vector<EdgeState> out;
  for (auto [a, b] : list) {
    EdgeState e;
    e.id = static_cast<EdgeId>(out.size());
    e.orig = {a, b};
    e.x = a;
    e.y = b;
    out.push_back(e);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> pairs(const MessageBatch& b) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Message& m : b.messages) out.emplace_back(m.target, m.value);
  std::sort(out.begin(), out.end());
  return out;
}

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

TEST(Connect, MinToMax) {
  const MessageBatch b = connect(E({{3, 5}, {5, 2}}));
  EXPECT_EQ(pairs(b), (Pairs{{5, 2}, {5, 3}}));
  EXPECT_EQ(resolve_min(b, 5).value[5], 2u);
  EXPECT_EQ(b.cost, (Cost{1, 2}));
}

TEST(Connect, LoopAndEmpty) {
  EXPECT_TRUE(connect(E({{4, 4}})).messages.empty());
  const MessageBatch empty = connect({});
  EXPECT_TRUE(empty.messages.empty());
  EXPECT_EQ(empty.cost.messages, 0u);
}

TEST(ParentConnect, Examples) {
  const MessageBatch b = parent_connect(E({{2, 4}}), F({1, 1, 3, 3}));
  EXPECT_EQ(pairs(b), (Pairs{{3, 1}}));
  EXPECT_EQ(b.cost, (Cost{3, 3}));
  EXPECT_TRUE(parent_connect(E({{2, 4}}), F({1, 1, 3, 1})).messages.empty());
  EXPECT_EQ(pairs(parent_connect(E({{1, 2}, {2, 3}}), LabelForest::identity(3))),
            (Pairs{{2, 1}, {3, 2}}));
}

TEST(ExtendedConnect, BothOrientations) {
  const LabelForest f = F({1, 1, 3, 3});
  EXPECT_EQ(pairs(extended_connect(E({{2, 4}}), f)), (Pairs{{3, 1}, {4, 1}}));
  EXPECT_EQ(pairs(extended_connect(E({{4, 2}}), f)), (Pairs{{3, 1}, {4, 1}}));
}

TEST(ExtendedConnect, EqualParentsChangeNothing) {
  const LabelForest f = F({1, 1, 1});
  const MessageBatch b = extended_connect(E({{2, 3}}), f);
  EXPECT_EQ(pairs(b), (Pairs{{1, 1}, {3, 1}}));
  EXPECT_FALSE(update(f, b).changed);
}

TEST(MaxParentConnect, Examples) {
  EXPECT_EQ(pairs(max_parent_connect(E({{2, 4}}), F({1, 1, 3, 3}))), (Pairs{{1, 3}}));
  EXPECT_TRUE(max_parent_connect(E({{2, 4}}), F({1, 1, 3, 1})).messages.empty());
  EXPECT_EQ(pairs(max_parent_connect(E({{5, 6}}), LabelForest::identity(6))),
            (Pairs{{5, 6}}));
}

TEST(RandomConnect, Coins) {
  const LabelForest id = LabelForest::identity(4);
  std::vector<std::uint8_t> heads = {0, 1, 0, 0, 1};
  EXPECT_EQ(pairs(random_connect(E({{1, 2}}), id, heads)), (Pairs{{2, 1}}));
  heads = {0, 1, 1, 0, 0};
  EXPECT_TRUE(random_connect(E({{1, 2}}), id, heads).messages.empty());
  heads = {0, 0, 0, 0, 1};
  EXPECT_EQ(pairs(random_connect(E({{3, 4}, {4, 3}}), id, heads)), (Pairs{{3, 4}, {3, 4}}));
  const MessageBatch b = random_connect(E({{3, 4}}), id, heads);
  EXPECT_EQ(b.cost.waves, 1u);
  EXPECT_THROW(random_connect(E({{1, 2}}), id, std::vector<std::uint8_t>{1, 1}),
               std::invalid_argument);
}

MessageBatch to(Vertex target, std::initializer_list<Vertex> values,
                Resolution r = Resolution::kMinCombining) {
  MessageBatch b;
  b.resolution = r;
  EdgeId id = 0;
  for (Vertex v : values) b.messages.push_back({target, v, id++});
  return b;
}

TEST(Update, Examples) {
  EXPECT_EQ(update(LabelForest::identity(5), to(5, {2, 3})).forest.parent(5), 2u);
  const ForestStep same = update(F({1, 2, 3, 4, 1}), to(5, {2}));
  EXPECT_EQ(same.forest.parent(5), 1u);
  EXPECT_FALSE(same.changed);
  EXPECT_FALSE(update(LabelForest::identity(5), MessageBatch{}).changed);
}

TEST(Update, RejectsArbitraryBatch) {
  EXPECT_THROW(update(LabelForest::identity(3), to(3, {1}, Resolution::kArbitrary)),
               std::invalid_argument);
}

TEST(RootUpdate, Examples) {
  EXPECT_EQ(root_update(LabelForest::identity(5), to(5, {2})).forest.parent(5), 2u);
  EXPECT_EQ(root_update(F({1, 2, 3, 4, 4}), to(5, {2})).forest.parent(5), 4u);
  EXPECT_FALSE(root_update(LabelForest::identity(5), to(5, {5})).changed);
}

TEST(ArbitraryRootUpdate, FirstByEdge) {
  const auto policy = ArbitraryPolicy::first_by_edge(2);
  const ForestStep s = arbitrary_root_update(LabelForest::identity(7),
                                             to(3, {7, 5}, Resolution::kArbitrary), policy);
  EXPECT_EQ(s.forest.parent(3), 7u);
  ASSERT_EQ(s.hooks.size(), 1u);
  EXPECT_EQ(s.hooks[0].edge, 0u);
  EXPECT_FALSE(arbitrary_root_update(LabelForest::identity(3),
                                     to(3, {3}, Resolution::kArbitrary), policy)
                   .changed);
}

TEST(ArbitraryPolicy, SeededPermutationIsStable) {
  const auto a = ArbitraryPolicy::first_by_edge(50, 7);
  const auto b = ArbitraryPolicy::first_by_edge(50, 7);
  std::vector<std::uint32_t> ranks;
  for (EdgeId e = 0; e < 50; ++e) {
    EXPECT_EQ(a.rank(e), b.rank(e));
    ranks.push_back(a.rank(e));
  }
  std::sort(ranks.begin(), ranks.end());
  for (std::uint32_t i = 0; i < 50; ++i) EXPECT_EQ(ranks[i], i);
}

TEST(GatedUpdates, FlatAndPassive) {
  const auto policy = ArbitraryPolicy::first_by_edge(1);
  const LabelForest f = F({1, 2, 3, 4, 5});
  std::vector<std::uint8_t> open(6, 1), shut(6, 0);
  EXPECT_EQ(flat_root_update(f, to(5, {2}, Resolution::kArbitrary), open, policy)
                .forest.parent(5),
            2u);
  EXPECT_EQ(flat_root_update(f, to(5, {2}, Resolution::kArbitrary), shut, policy)
                .forest.parent(5),
            5u);
  MessageBatch none;
  none.resolution = Resolution::kArbitrary;
  EXPECT_FALSE(passive_root_update(f, none, open, policy).changed);
  EXPECT_THROW(passive_root_update(f, none, std::vector<std::uint8_t>(3, 1), policy),
               std::invalid_argument);
}

TEST(Shortcut, Chains) {
  EXPECT_EQ(shortcut(F({1, 1, 2, 3})).forest.to_list(), (std::vector<Vertex>{1, 1, 1, 2}));
  EXPECT_FALSE(shortcut(F({1, 1, 1})).changed);
  const ForestStep s = shortcut(F({1, 1, 2, 3, 4}));
  EXPECT_EQ(s.forest.to_list(), (std::vector<Vertex>{1, 1, 1, 2, 3}));
  EXPECT_EQ(s.cost, (Cost{2, 4}));
}

TEST(Shortcut, Fixpoint) {
  const FixpointStep s = shortcut_to_fixpoint(F({1, 1, 2, 3, 4}));
  EXPECT_EQ(s.iterations, 3u);
  EXPECT_EQ(s.effective, 2u);
  EXPECT_EQ(s.forest.to_list(), (std::vector<Vertex>(5, 1)));
  EXPECT_EQ(s.cost.waves, 6u);
  EXPECT_EQ(shortcut_to_fixpoint(F({1, 1, 1})).iterations, 1u);
}

TEST(Shortcut, FixpointOnLongChainIsLogarithmic) {
  for (Vertex k = 1; k <= 12; ++k) {
    std::vector<Vertex> chain(Vertex{1} << k | 1);
    for (Vertex v = 1; v <= chain.size(); ++v) chain[v - 1] = v == 1 ? 1 : v - 1;
    const FixpointStep s = shortcut_to_fixpoint(F(chain));
    EXPECT_EQ(s.effective, k) << "k=" << k;
    EXPECT_EQ(s.iterations, k + 1) << "k=" << k;
  }
}

TEST(Alter, ReplacesEnds) {
  const AlterStep s = alter(E({{4, 6}}), F({1, 2, 3, 2, 5, 3}), {});
  EXPECT_TRUE(s.edges[0].alive);
  EXPECT_EQ(s.edges[0].x, 2u);
  EXPECT_EQ(s.edges[0].y, 3u);
  EXPECT_EQ(s.edges[0].orig, (Edge{4, 6}));
  EXPECT_EQ(s.cost, (Cost{2, 2}));
}

TEST(Alter, EqualEnds) {
  const LabelForest f = F({1, 2, 3, 2, 5, 2});
  const AlterStep del = alter(E({{4, 6}}), f, {LoopMode::kDelete, false});
  EXPECT_FALSE(del.edges[0].alive);
  EXPECT_EQ(del.deleted, 1u);
  const AlterStep keep = alter(E({{4, 6}}), f, {LoopMode::kRetainLoop, false});
  EXPECT_TRUE(keep.edges[0].alive);
  EXPECT_TRUE(keep.edges[0].loop);
  EXPECT_EQ(keep.edges[0].x, 2u);
  EXPECT_EQ(keep.edges[0].y, 2u);
}

TEST(Alter, Strengthened) {
  EXPECT_FALSE(alter(E({{4, 6}}), F({1, 2, 3, 4, 5, 4}), {LoopMode::kDelete, true})
                   .edges[0]
                   .alive);
  // End 6 hooked onto the other end 4: the edge now joins a child to its parent.
  const LabelForest f = F({1, 2, 3, 2, 5, 4});
  EXPECT_FALSE(alter(E({{4, 6}}), f, {LoopMode::kDelete, true}).edges[0].alive);
  const AlterStep plain = alter(E({{4, 6}}), f, {LoopMode::kDelete, false});
  EXPECT_TRUE(plain.edges[0].alive);
  EXPECT_EQ(plain.edges[0].x, 2u);
  EXPECT_EQ(plain.edges[0].y, 4u);
}

TEST(Alter, DeadEdgesStayDead) {
  auto edges = E({{1, 2}});
  edges[0].alive = false;
  const AlterStep s = alter(edges, LabelForest::identity(2), {});
  EXPECT_FALSE(s.edges[0].alive);
  EXPECT_EQ(s.cost.messages, 0u);
}

TEST(Srt, SingleEdge) {
  const SrtStep s = srt_round(LabelForest::identity(2), E({{1, 2}}));
  EXPECT_EQ(s.proposal[2], 1u);
  EXPECT_EQ(s.forest.parent(2), 1u);
  EXPECT_TRUE(s.changed);
  EXPECT_EQ(s.cost, (Cost{6, 4}));
}

TEST(Srt, NoNotifyWithoutImprovement) {
  // new(3) = 3.p = 1: vertex 3 notifies nobody.
  const LabelForest f = F({1, 1, 1});
  const SrtStep s = srt_round(f, E({{2, 3}}));
  EXPECT_FALSE(s.changed);
  EXPECT_EQ(s.proposal[3], 1u);
  // three per edge, plus grandparent fetches of 2 and 3
  EXPECT_EQ(s.cost.messages, 5u);
}

TEST(Resolve, MinTieBreaksBySender) {
  MessageBatch b;
  b.messages = {{3, 1, 5}, {3, 1, 2}, {3, 2, 0}};
  const Delivery d = resolve_min(b, 3);
  EXPECT_EQ(d.value[3], 1u);
  EXPECT_EQ(d.sender[3], 2u);
  EXPECT_EQ(d.value[2], kNoVertex);
}

}  // namespace
}  // namespace cclab
