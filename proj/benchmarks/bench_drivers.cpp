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

#include "cclab/algorithm.hpp"
#include "cclab/drivers.hpp"
#include "cclab/generators.hpp"

namespace cclab {
namespace {

void run_bench(benchmark::State& state, AlgorithmKind kind, const Graph& g) {
  AlgorithmSpec s;
  s.kind = kind;
  s.policy_seed = 1;
  std::uint32_t rounds = 0;
  for (auto _ : state) {
    const RunTrace t = run(s, g);
    rounds = t.round_count();
    benchmark::DoNotOptimize(t.total);
  }
  state.counters["rounds"] = rounds;
  state.counters["m"] = static_cast<double>(g.m());
}

void BM_Gnp(benchmark::State& state, AlgorithmKind kind) {
  const auto n = static_cast<Vertex>(state.range(0));
  run_bench(state, kind, gnp_graph(n, 4.0 / n, 7));
}

void BM_Path(benchmark::State& state, AlgorithmKind kind) {
  run_bench(state, kind, path_graph(static_cast<Vertex>(state.range(0)) + 1));
}

BENCHMARK_CAPTURE(BM_Gnp, R, AlgorithmKind::kR)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);
BENCHMARK_CAPTURE(BM_Gnp, RA, AlgorithmKind::kRA)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);
BENCHMARK_CAPTURE(BM_Gnp, SA, AlgorithmKind::kSA)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);
BENCHMARK_CAPTURE(BM_Gnp, SRT, AlgorithmKind::kSRT)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);
BENCHMARK_CAPTURE(BM_Gnp, SV, AlgorithmKind::kSV)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);
BENCHMARK_CAPTURE(BM_Path, R, AlgorithmKind::kR)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);
BENCHMARK_CAPTURE(BM_Path, RA, AlgorithmKind::kRA)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);
BENCHMARK_CAPTURE(BM_Path, SA, AlgorithmKind::kSA)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

void BM_WorstCaseSA(benchmark::State& state) {
  run_bench(state, AlgorithmKind::kSA, worst_case_W(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_WorstCaseSA)->DenseRange(3, 8);

}  // namespace
}  // namespace cclab
