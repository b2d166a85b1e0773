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


#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "cclab/edges.hpp"
#include "cclab/forest.hpp"
#include "cclab/generators.hpp"
#include "cclab/primitives.hpp"

namespace cclab {
namespace {

Graph bench_graph(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  return gnp_graph(n, 8.0 / n, 1);
}

// Chain forest: parent of v is v - 1.
LabelForest chain(Vertex n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  p[0] = 1;
  return LabelForest::from_parents(p);
}

void BM_Connect(benchmark::State& state) {
  const Graph g = bench_graph(state);
  const auto edges = make_edge_states(g);
  for (auto _ : state) benchmark::DoNotOptimize(connect(edges));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.m()));
}
BENCHMARK(BM_Connect)->RangeMultiplier(8)->Range(1 << 9, 1 << 15);

void BM_ParentConnectUpdate(benchmark::State& state) {
  const Graph g = bench_graph(state);
  const auto edges = make_edge_states(g);
  const LabelForest f = LabelForest::identity(g.n());
  for (auto _ : state) {
    const MessageBatch b = parent_connect(edges, f);
    benchmark::DoNotOptimize(update(f, b));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.m()));
}
BENCHMARK(BM_ParentConnectUpdate)->RangeMultiplier(8)->Range(1 << 9, 1 << 15);

void BM_Shortcut(benchmark::State& state) {
  const LabelForest f = chain(static_cast<Vertex>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shortcut(f));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Shortcut)->RangeMultiplier(8)->Range(1 << 9, 1 << 18);

void BM_ShortcutToFixpoint(benchmark::State& state) {
  const LabelForest f = chain(static_cast<Vertex>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shortcut_to_fixpoint(f));
}
BENCHMARK(BM_ShortcutToFixpoint)->RangeMultiplier(8)->Range(1 << 9, 1 << 18);

void BM_Alter(benchmark::State& state) {
  const Graph g = bench_graph(state);
  const auto edges = make_edge_states(g);
  const LabelForest f = chain(g.n());
  for (auto _ : state) benchmark::DoNotOptimize(alter(edges, f, AlterMode{}));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.m()));
}
BENCHMARK(BM_Alter)->RangeMultiplier(8)->Range(1 << 9, 1 << 15);

void BM_SrtRound(benchmark::State& state) {
  const Graph g = bench_graph(state);
  const auto edges = make_edge_states(g);
  const LabelForest f = LabelForest::identity(g.n());
  for (auto _ : state) benchmark::DoNotOptimize(srt_round(f, edges));
}
BENCHMARK(BM_SrtRound)->RangeMultiplier(8)->Range(1 << 9, 1 << 15);

}  // namespace
}  // namespace cclab
