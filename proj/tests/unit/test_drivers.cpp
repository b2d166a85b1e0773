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
#include <random>
#include <set>

#include "cclab/drivers.hpp"
#include "cclab/generators.hpp"
#include "cclab/oracle.hpp"
#include "support/oracles.hpp"
#include "support/reference.hpp"

namespace cclab {
namespace {

AlgorithmSpec S(AlgorithmKind k) {
  AlgorithmSpec s;
  s.kind = k;
  return s;
}

Graph G(Vertex n, const oracle::EdgeList& el) {
  std::vector<Edge> es;
  for (auto [a, b] : el) es.push_back({a, b});
  return Graph(n, es);
}

oracle::EdgeList L(const Graph& g) {
  oracle::EdgeList out;
  for (const Edge& e : g.edges()) out.emplace_back(e.v, e.w);
  return out;
}

// Same-label iff same component; labels inside the component; optionally
// the component minimum.
void expect_labels(const LabelForest& f, const Graph& g, bool min_labeling) {
  const auto lab = oracle::component_minimum(g.n(), L(g));
  std::vector<Vertex> root(g.n() + 1);
  for (Vertex v = 1; v <= g.n(); ++v) {
    ASSERT_TRUE(f.is_root(f.parent(v))) << "vertex " << v << " is not at depth <= 1";
    root[v] = f.parent(v);
    EXPECT_EQ(lab[root[v]], lab[v]) << "label of " << v << " outside its component";
    if (min_labeling) {
      EXPECT_EQ(root[v], lab[v]);
    }
  }
  for (Vertex v = 1; v <= g.n(); ++v) {
    for (Vertex w = v + 1; w <= g.n(); ++w) {
      EXPECT_EQ(root[v] == root[w], lab[v] == lab[w]) << v << " vs " << w;
    }
  }
}

constexpr std::pair<AlgorithmKind, ref::Alg> kRefPairs[] = {
    {AlgorithmKind::kP, ref::Alg::P},   {AlgorithmKind::kE, ref::Alg::E},
    {AlgorithmKind::kA, ref::Alg::A},   {AlgorithmKind::kR, ref::Alg::R},
    {AlgorithmKind::kRA, ref::Alg::RA}, {AlgorithmKind::kS, ref::Alg::S},
    {AlgorithmKind::kSA, ref::Alg::SA}, {AlgorithmKind::kSRT, ref::Alg::SRT},
};

TEST(Run, RLabelsPathWithMinimum) {
  const RunTrace t = run(S(AlgorithmKind::kR), path_graph(5));
  EXPECT_EQ(t.final_forest.to_list(), (std::vector<Vertex>(5, 1)));
  const double bound = std::ceil(5 * std::log2(5.0) / std::log2(4.0 / 3.0)) + 2;
  EXPECT_LE(t.round_count(), bound);
  EXPECT_FALSE(t.rounds.back().changed);
}

TEST(Run, MatchesReferenceSimulator) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 150; ++i) {
    const Vertex n = 2 + rng() % 24;
    const auto el = oracle::random_edges(rng, n, 1 + rng() % (2 * n));
    const Graph g = G(n, el);
    for (auto [kind, alg] : kRefPairs) {
      RunOptions opt;
      opt.round_forests = true;
      const RunTrace t = run(S(kind), g, {}, opt);
      const ref::Trace r = ref::simulate(alg, n, el);
      ASSERT_EQ(t.round_count(), r.round_ends.size()) << ref::name(alg) << " case " << i;
      for (std::size_t k = 0; k < r.round_ends.size(); ++k) {
        const std::vector<Vertex> want(r.round_ends[k].begin() + 1, r.round_ends[k].end());
        ASSERT_EQ(t.rounds[k].forest, want) << ref::name(alg) << " round " << k + 1;
      }
      if (kind == AlgorithmKind::kS || kind == AlgorithmKind::kSA) {
        EXPECT_EQ(t.shortcut_iterations, r.shortcut_passes);
      }
    }
  }
}

TEST(Run, FinalLabelsMatchComponents) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 60; ++i) {
    const Vertex n = 2 + rng() % 60;
    const Graph g = G(n, oracle::random_edges(rng, n, 1 + rng() % n));
    for (AlgorithmKind k : kAllAlgorithms) {
      AlgorithmSpec s = S(k);
      if (uses_policy(k)) s.policy_seed = rng() % 4;
      const RunTrace t = run(s, g);
      expect_labels(t.final_forest, g, is_min_labeling(k));
      EXPECT_FALSE(verify_final(t.final_forest, g, is_min_labeling(k)));
    }
  }
}

TEST(Run, WaveAccounting) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Vertex n = 3 + rng() % 30;
    const Graph g = G(n, oracle::random_edges(rng, n, n));
    const auto rounds = [&](AlgorithmKind k) { return run(S(k), g); };
    const RunTrace r = rounds(AlgorithmKind::kR);
    EXPECT_EQ(r.total.waves, 5u * r.round_count());
    const RunTrace a = rounds(AlgorithmKind::kA);
    EXPECT_EQ(a.total.waves, 5u * a.round_count());
    const RunTrace srt = rounds(AlgorithmKind::kSRT);
    EXPECT_EQ(srt.total.waves, 6u * srt.round_count());
    const RunTrace sa = rounds(AlgorithmKind::kSA);
    EXPECT_EQ(sa.total.waves, 3u * sa.round_count() + 2 * sa.shortcut_iterations);
  }
}

TEST(Run, RMessagesPerRound) {
  // fetch replies 2m, at most m sends, at most n - 1 shortcut replies
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    const Vertex n = 3 + rng() % 40;
    const Graph g = G(n, oracle::random_edges(rng, n, 1 + rng() % (3 * n)));
    const RunTrace t = run(S(AlgorithmKind::kR), g);
    for (const RoundRecord& r : t.rounds) {
      EXPECT_GE(r.cost.messages, 2 * g.m());
      EXPECT_LE(r.cost.messages, 3 * g.m() + n - 1);
    }
  }
}

TEST(Run, ShortcutsPerRound) {
  AlgorithmSpec s = S(AlgorithmKind::kR);
  s.shortcuts_per_round = 3;
  const RunTrace t = run(s, path_graph(40));
  EXPECT_EQ(t.total.waves, (3u + 2u * 3u) * t.round_count());
  EXPECT_FALSE(verify_final(t.final_forest, path_graph(40), true));
}

TEST(Run, RoundLimit) {
  RunOptions opt;
  opt.round_limit = 2;
  EXPECT_THROW(run(S(AlgorithmKind::kR), path_graph(64), {}, opt), RoundLimitExceeded);
}

TEST(Run, SnapshotsAfterEveryPrimitive) {
  RunOptions opt;
  opt.snapshots = true;
  const RunTrace t = run(S(AlgorithmKind::kRA), path_graph(6), {}, opt);
  for (const RoundRecord& r : t.rounds) EXPECT_EQ(r.snapshots.size(), 4u);
}

TEST(Run, DistanceHookHoldsOnPaths) {
  for (Vertex n : {9u, 33u, 129u}) {
    for (AlgorithmKind k : kAllAlgorithms) {
      RunHooks h;
      h.distance = [](Vertex u, Vertex v) -> std::uint64_t { return u > v ? u - v : v - u; };
      EXPECT_NO_THROW(run(S(k), path_graph(n), h)) << to_string(k) << " n=" << n;
    }
  }
}

TEST(Run, DistanceHookFiresOnViolation) {
  RunHooks h;
  h.distance = [](Vertex, Vertex) -> std::uint64_t { return 1u << 20; };
  try {
    run(S(AlgorithmKind::kP), path_graph(5), h);
    FAIL() << "expected a violation";
  } catch (const HookViolation& e) {
    EXPECT_EQ(e.hook(), "distance");
    EXPECT_EQ(e.round(), 1u);
  }
}

TEST(Run, AllHooksOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    const Vertex n = 2 + rng() % 40;
    const Graph g = G(n, oracle::random_edges(rng, n, 1 + rng() % (2 * n)));
    for (AlgorithmKind k : kAllAlgorithms) {
      EXPECT_NO_THROW(run(S(k), g, RunHooks::all())) << to_string(k) << " case " << i;
    }
    AlgorithmSpec a = S(AlgorithmKind::kA);
    a.loop_mode = LoopMode::kRetainLoop;
    EXPECT_NO_THROW(run(a, g, RunHooks::all())) << "A retain case " << i;
  }
}

TEST(Run, DiameterBoundsOnConnectedGraphs) {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 80) {
    const Vertex n = 2 + rng() % 30;
    const auto el = oracle::random_edges(rng, n, n - 1 + rng() % n);
    const auto lab = oracle::component_minimum(n, el);
    if (std::any_of(lab.begin() + 1, lab.end(), [](auto x) { return x != 1; })) continue;
    ++checked;
    const Graph g = G(n, el);
    const std::uint32_t d = oracle::diameter(n, el);
    EXPECT_LE(run(S(AlgorithmKind::kE), g).round_count(), d + 1);
    EXPECT_LE(run(S(AlgorithmKind::kSRT), g).round_count(), d + 1);
    AlgorithmSpec a = S(AlgorithmKind::kA);
    a.loop_mode = LoopMode::kRetainLoop;
    EXPECT_LE(run(a, g).round_count(), d + 2);
  }
}

TEST(Run, SrtOnPathOfNine) {
  EXPECT_LE(run(S(AlgorithmKind::kSRT), path_graph(9)).round_count(), 9u);
}

TEST(Run, SvOnPathOfEight) {
  const Graph g = path_graph(8);
  const RunTrace t = run(S(AlgorithmKind::kSV), g);
  const Vertex root = t.final_forest.parent(1);
  for (Vertex v = 1; v <= 8; ++v) EXPECT_EQ(t.final_forest.parent(v), root);
  EXPECT_GE(root, 1u);
  EXPECT_LE(root, 8u);
  EXPECT_TRUE(t.passivity_reconstructed);
}

TEST(Run, ReifSingleEdgeWithCoins) {
  // Seeds whose round-1 coins are H on 1 and T on 2 hook 2 under 1.
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 64 && seen < 3; ++seed) {
    AlgorithmSpec s = S(AlgorithmKind::kREIF);
    s.policy_seed = seed;
    const RunTrace t = run(s, Graph(2, {{1, 2}}));
    const auto& coins = t.rounds[0].coins;
    ASSERT_EQ(coins.size(), 3u);
    if (coins[1] && !coins[2]) {
      ++seen;
      EXPECT_EQ(t.round_count() >= 1, true);
      EXPECT_EQ(t.final_forest.parent(2), 1u);
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Run, ReifIsSeeded) {
  const Graph g = gnp_graph(60, 0.05, 3);
  AlgorithmSpec s = S(AlgorithmKind::kREIF);
  s.policy_seed = 12;
  const RunTrace a = run(s, g), b = run(s, g);
  EXPECT_EQ(a.final_forest, b.final_forest);
  EXPECT_EQ(a.round_count(), b.round_count());
}

TEST(Run, AsStopsWhenNothingCanChange) {
  const RunTrace t = run(S(AlgorithmKind::kAS), gnp_graph(40, 0.08, 5));
  EXPECT_FALSE(t.rounds.back().changed);
  EXPECT_TRUE(all_flat(t.final_forest));
}

TEST(Run, SpanningForest) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const Vertex n = 2 + rng() % 40;
    const auto el = oracle::random_edges(rng, n, 1 + rng() % (2 * n));
    const Graph g = G(n, el);
    for (AlgorithmKind k : {AlgorithmKind::kR, AlgorithmKind::kRA}) {
      AlgorithmSpec s = S(k);
      s.record_spanning_forest = true;
      const RunTrace t = run(s, g);
      ASSERT_TRUE(t.spanning_forest);
      EXPECT_TRUE(is_spanning_forest(g, *t.spanning_forest));
      // independent count: n minus the number of components
      const auto lab = oracle::component_minimum(n, el);
      const std::size_t comps = std::set<Vertex>(lab.begin() + 1, lab.end()).size();
      EXPECT_EQ(t.spanning_forest->size(), n - comps);
    }
  }
}

TEST(AlgorithmSpec, Validation) {
  AlgorithmSpec s = S(AlgorithmKind::kR);
  s.strengthened_deletion = true;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = S(AlgorithmKind::kRA);
  s.strengthened_deletion = true;
  EXPECT_NO_THROW(s.validate());
  s.loop_mode = LoopMode::kRetainLoop;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = S(AlgorithmKind::kP);
  s.record_spanning_forest = true;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = S(AlgorithmKind::kR);
  s.shortcuts_per_round = 0;
  EXPECT_THROW(run(s, path_graph(3)), std::invalid_argument);
}

TEST(AlgorithmSpec, ParseNames) {
  for (AlgorithmKind k : kAllAlgorithms) EXPECT_EQ(parse_algorithm(to_string(k)), k);
  EXPECT_EQ(parse_algorithm("reif"), AlgorithmKind::kREIF);
  EXPECT_THROW(parse_algorithm("Q"), std::invalid_argument);
}

TEST(Strengthened, RaStillCorrect) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 80; ++i) {
    const Vertex n = 2 + rng() % 40;
    const Graph g = G(n, oracle::random_edges(rng, n, 1 + rng() % (2 * n)));
    AlgorithmSpec s = S(AlgorithmKind::kRA);
    s.strengthened_deletion = true;
    expect_labels(run(s, g, RunHooks::all()).final_forest, g, true);
  }
}

TEST(Execution, StepByStep) {
  Execution ex(path_graph(4), S(AlgorithmKind::kR));
  std::size_t steps = 0;
  while (ex.step()) ++steps;
  EXPECT_TRUE(ex.finished());
  EXPECT_FALSE(ex.step());
  EXPECT_EQ(steps % 3, 0u);
  EXPECT_EQ(ex.forest().to_list(), (std::vector<Vertex>(4, 1)));
}

TEST(Lockstep, SAndSaAgree) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 150; ++i) {
    const Vertex n = 2 + rng() % 30;
    const Graph g = G(n, oracle::random_edges(rng, n, 1 + rng() % (2 * n)));
    const LockstepResult r = run_lockstep(S(AlgorithmKind::kS), S(AlgorithmKind::kSA), g);
    EXPECT_TRUE(r.equal()) << r.divergence->describe();
    EXPECT_GT(r.checkpoints, 0u);
  }
}

TEST(Lockstep, RAndRaAgreeWhileTreesStayShallow) {
  // Paths, stars and complete graphs never build a tree of height > 2
  // before an alter.
  for (Vertex n = 2; n <= 40; ++n) {
    for (const Graph& g : {star_graph(n), complete_graph(std::min<Vertex>(n, 12)), path_graph(n)}) {
      const LockstepResult r = run_lockstep(S(AlgorithmKind::kR), S(AlgorithmKind::kRA), g);
      EXPECT_TRUE(r.equal()) << "n=" << n << ": " << r.divergence->describe();
    }
  }
}

// The 8-vertex path 1-2-3-5-6-8-7-4 separates both A from P and R from RA.
const oracle::EdgeList kWitness = {{1, 2}, {2, 3}, {3, 5}, {4, 7}, {5, 6}, {6, 8}, {7, 8}};

std::size_t first_difference(const ref::Trace& a, const ref::Trace& b) {
  std::size_t i = 0;
  while (i < a.checkpoints.size() && i < b.checkpoints.size() &&
         a.checkpoints[i] == b.checkpoints[i]) {
    ++i;
  }
  return i;
}

TEST(Lockstep, APDivergeOnWitness) {
  const Graph g = G(8, kWitness);
  const LockstepResult r = run_lockstep(S(AlgorithmKind::kA), S(AlgorithmKind::kP), g);
  ASSERT_FALSE(r.equal());
  const std::size_t ref_at = first_difference(ref::simulate(ref::Alg::A, 8, kWitness),
                                              ref::simulate(ref::Alg::P, 8, kWitness));
  EXPECT_EQ(r.divergence->checkpoint, ref_at);
  EXPECT_EQ(r.divergence->round_a, 3u);
}

TEST(Lockstep, RAndRaDivergeOnWitness) {
  // Shortcut moves a vertex past its old parent, while alter moves the edge
  // end to the old parent's new parent; the two disagree once a tree is
  // taller than two.
  const Graph g = G(8, kWitness);
  const LockstepResult r = run_lockstep(S(AlgorithmKind::kR), S(AlgorithmKind::kRA), g);
  ASSERT_FALSE(r.equal());
  const ref::Trace a = ref::simulate(ref::Alg::R, 8, kWitness);
  const ref::Trace b = ref::simulate(ref::Alg::RA, 8, kWitness);
  EXPECT_EQ(r.divergence->checkpoint, first_difference(a, b));
  EXPECT_EQ(r.divergence->primitive_a, "root-update");
  // Both still label every vertex with 1 in the end.
  EXPECT_EQ(a.round_ends.back(), b.round_ends.back());
}

TEST(Lockstep, DifferentTerminationIsDivergence) {
  AlgorithmSpec one = S(AlgorithmKind::kR), two = S(AlgorithmKind::kR);
  two.shortcuts_per_round = 2;
  const LockstepResult r = run_lockstep(one, two, path_graph(30));
  EXPECT_FALSE(r.equal());
}

TEST(FaultInjection, SkippedShortcutBreaksPotentials) {
  AlgorithmSpec s = S(AlgorithmKind::kR);
  s.skip_shortcut_in_round = 3;
  RunHooks h;
  h.potentials = true;
  EXPECT_NO_THROW(run(S(AlgorithmKind::kR), worst_case_W(3), h));
  try {
    run(s, worst_case_W(3), h);
    FAIL() << "expected a potential violation";
  } catch (const HookViolation& e) {
    EXPECT_EQ(e.hook().rfind("potential:", 0), 0u) << e.hook();
  }
}

}  // namespace
}  // namespace cclab
