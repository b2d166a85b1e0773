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


#include "cclab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace cclab {

Dsu::Dsu(Vertex n)
    : parent_(static_cast<std::size_t>(n) + 1), size_(static_cast<std::size_t>(n) + 1, 1),
      sets_(n) {
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex Dsu::find(Vertex v) {
  Vertex root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    const Vertex next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

bool Dsu::unite(Vertex a, Vertex b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --sets_;
  return true;
}

Partition oracle_components(const Graph& g) {
  Dsu dsu(g.n());
  for (const Edge& e : g.edges()) dsu.unite(e.v, e.w);
  Partition p;
  p.component.assign(static_cast<std::size_t>(g.n()) + 1, 0);
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  VertexArray<std::uint32_t> id(static_cast<std::size_t>(g.n()) + 1, kUnset);
  // Scanning vertices upward meets every set first at its minimum.
  for (Vertex v = 1; v <= g.n(); ++v) {
    const Vertex r = dsu.find(v);
    if (id[r] == kUnset) {
      id[r] = static_cast<std::uint32_t>(p.minimum.size());
      p.minimum.push_back(v);
      p.size.push_back(0);
    }
    p.component[v] = id[r];
    ++p.size[id[r]];
  }
  return p;
}

std::optional<Counterexample> verify_final(const LabelForest& f, const Graph& g,
                                           bool min_labeling) {
  if (f.size() != g.n()) return Counterexample{kNoVertex, "forest and graph sizes differ"};
  const Partition p = oracle_components(g);
  std::vector<Vertex> label(p.count(), kNoVertex);
  for (Vertex v = 1; v <= g.n(); ++v) {
    const Vertex l = f.parent(v);
    if (l < 1 || l > g.n()) return Counterexample{v, "label out of range"};
    if (!f.is_root(l)) return Counterexample{v, "tree not flat: label is not a root"};
    if (!p.same(v, l)) return Counterexample{v, "label " + std::to_string(l) + " lies in another component"};
    Vertex& expected = label[p.component[v]];
    if (expected == kNoVertex) expected = l;
    if (expected != l) {
      return Counterexample{v, "component carries labels " + std::to_string(expected) + " and " +
                                   std::to_string(l)};
    }
    if (min_labeling && l != p.minimum[p.component[v]]) {
      return Counterexample{v, "label " + std::to_string(l) + " is not the component minimum " +
                                   std::to_string(p.minimum[p.component[v]])};
    }
  }
  return std::nullopt;
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kNone: return "none";
    case SearchStatus::kBudgetExhausted: return "budget exhausted";
  }
  return "?";
}

namespace {

bool connected(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& pairs,
               const std::vector<std::uint32_t>& pick) {
  std::uint32_t adj[16] = {};
  for (std::uint32_t i : pick) {
    const auto [a, b] = pairs[i];
    adj[a - 1] |= 1u << (b - 1);
    adj[b - 1] |= 1u << (a - 1);
  }
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

// Advances pick to the next m-subset of 0..k-1 in lexicographic order.
bool next_combination(std::vector<std::uint32_t>& pick, std::uint32_t k) {
  const std::size_t m = pick.size();
  std::size_t i = m;
  while (i > 0 && pick[i - 1] == k - m + i - 1) --i;
  if (i == 0) return false;
  ++pick[i - 1];
  for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
  return true;
}

}  // namespace

SearchResult divergence_search(const AlgorithmSpec& a, const AlgorithmSpec& b,
                               const SearchOptions& options) {
  if (options.max_n < 2 || options.max_n > 13) {
    throw std::invalid_argument("divergence_search: max_n must lie in 2..13");
  }
  a.validate();
  b.validate();
  const unsigned workers = std::max(1u, options.workers);
  SearchResult result;
  std::atomic<std::uint64_t> examined{0};
  std::atomic<bool> out_of_budget{false};

  for (Vertex n = 2; n <= options.max_n; ++n) {
    result.last_n = n;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 1; v <= n; ++v) {
      for (Vertex w = v + 1; w <= n; ++w) pairs.emplace_back(v, w);
    }
    const auto k = static_cast<std::uint32_t>(pairs.size());
    for (std::uint32_t m = n - 1; m <= k; ++m) {
      constexpr std::uint64_t kNotFound = std::numeric_limits<std::uint64_t>::max();
      std::atomic<std::uint64_t> best{kNotFound};
      std::vector<std::optional<std::pair<Graph, LockstepResult>>> found(workers);

      auto scan = [&](unsigned w) {
        std::vector<std::uint32_t> pick(m);
        std::iota(pick.begin(), pick.end(), 0u);
        std::uint64_t index = 0;
        do {
          if (index > best.load(std::memory_order_relaxed)) return;
          if (out_of_budget.load(std::memory_order_relaxed)) return;
          if (index % workers == w && connected(n, pairs, pick)) {
            if (options.budget && examined.fetch_add(1) >= options.budget) {
              out_of_budget = true;
              return;
            }
            if (!options.budget) examined.fetch_add(1, std::memory_order_relaxed);
            std::vector<Edge> edges;
            edges.reserve(m);
            for (std::uint32_t i : pick) edges.push_back({pairs[i].first, pairs[i].second});
            Graph g(n, std::move(edges));
            LockstepResult r = run_lockstep(a, b, g);
            if (!r.equal()) {
              std::uint64_t cur = best.load();
              while (index < cur && !best.compare_exchange_weak(cur, index)) {
              }
              found[w].emplace(std::move(g), std::move(r));
              return;
            }
          }
          ++index;
        } while (next_combination(pick, k));
      };

      if (workers == 1) {
        scan(0);
      } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (std::thread& t : pool) t.join();
      }

      result.examined = std::min<std::uint64_t>(examined.load(),
                                                options.budget ? options.budget : kNotFound);
      if (out_of_budget) {
        result.status = SearchStatus::kBudgetExhausted;
        return result;
      }
      if (best.load() != kNotFound) {
        const unsigned owner = static_cast<unsigned>(best.load() % workers);
        result.status = SearchStatus::kFound;
        result.witness = std::move(found[owner]->first);
        result.lockstep = std::move(found[owner]->second);
        return result;
      }
    }
  }
  result.status = SearchStatus::kNone;
  return result;
}

}  // namespace cclab
