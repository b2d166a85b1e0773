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


#include "cclab/potential.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace cclab {

std::uint64_t tree_potential(bool active, bool flat, std::uint32_t height) {
  if (!active) return 0;
  if (flat) return 3;
  return static_cast<std::uint64_t>(height) + 1;
}

PotentialTracker::PotentialTracker(Vertex n, VertexArray<std::uint8_t> excluded, bool checks)
    : n_(n), excluded_(std::move(excluded)), checks_(checks) {
  if (excluded_.empty()) excluded_.assign(static_cast<std::size_t>(n) + 1, 0);
  if (excluded_.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("PotentialTracker: exclusion mask has the wrong size");
  }
}

void PotentialTracker::fail(std::uint32_t round, Vertex root, std::string check,
                            std::string detail) {
  violations_.push_back({round, root, std::move(check), std::move(detail)});
}

namespace {

bool within_size_bound(std::uint64_t phi, std::uint32_t size, std::uint32_t round) {
  using boost::multiprecision::cpp_int;
  const unsigned e = round - 2;
  const cpp_int lhs = boost::multiprecision::pow(cpp_int(phi), 5) *
                      boost::multiprecision::pow(cpp_int(4), e);
  const cpp_int rhs = boost::multiprecision::pow(cpp_int(2) * size, 5) *
                      boost::multiprecision::pow(cpp_int(3), e);
  return lhs <= rhs;
}

}  // namespace

std::optional<PotentialRound> PotentialTracker::observe(std::uint32_t round,
                                                        const LabelForest& end) {
  if (round != last_round_ + 1) {
    throw std::logic_error("PotentialTracker: rounds must be observed in order");
  }
  if (end.size() != n_) throw std::invalid_argument("PotentialTracker: forest size mismatch");
  last_round_ = round;

  const std::size_t slots = static_cast<std::size_t>(n_) + 1;
  VertexArray<Vertex> roots = find_roots(end);
  const std::vector<TreeStats> stats = tree_stats(end);
  VertexArray<std::uint32_t> size(slots, 0);
  VertexArray<std::uint64_t> phi(slots, 0);
  for (const TreeStats& t : stats) size[t.root] = static_cast<std::uint32_t>(t.size);

  std::optional<PotentialRound> out;
  if (round >= 2) {
    VertexArray<std::uint8_t> changed(slots, 0);
    VertexArray<std::uint64_t> constituent(slots, 0);
    for (Vertex v = 1; v <= n_; ++v) {
      if (excluded_[v]) continue;
      if (end.parent(v) != previous_.parent(v)) changed[roots[v]] = 1;
      if (checks_ && roots[v] != roots[previous_roots_[v]]) {
        fail(round, roots[v], "monotone",
             "vertex " + std::to_string(v) + " left the tree of its previous root " +
                 std::to_string(previous_roots_[v]));
      }
      if (previous_roots_[v] == v) constituent[roots[v]] += previous_phi_[v];
    }

    out.emplace();
    out->round = round;
    for (const TreeStats& t : stats) {
      if (excluded_[t.root]) continue;
      TreePotential tp;
      tp.root = t.root;
      tp.size = static_cast<std::uint32_t>(t.size);
      tp.height = t.height;
      tp.flat = t.flat;
      tp.active = round == 2 || changed[t.root] || previous_size_[t.root] != tp.size;
      tp.phi = tree_potential(tp.active, tp.flat, tp.height);
      if (round >= 3) tp.previous = constituent[t.root];
      phi[t.root] = tp.phi;
      out->total += tp.phi;
      if (tp.active) ++out->active;

      if (checks_) {
        const std::string where = "tree rooted at " + std::to_string(t.root);
        if (tp.size < 2) fail(round, t.root, "no-singleton", where + " is a singleton");
        if (tp.active && tp.previous) {
          const std::uint64_t before = *tp.previous;
          if (before < tp.phi) {
            fail(round, t.root, "previous-sum",
                 where + ": Phi_{k-1} = " + std::to_string(before) + " < phi_k = " +
                     std::to_string(tp.phi));
          }
          if (tp.phi >= 5 && 5 * before < 6 * tp.phi) {
            fail(round, t.root, "drop",
                 where + ": 5 * " + std::to_string(before) + " < 6 * " + std::to_string(tp.phi));
          }
        }
        if (tp.active && !within_size_bound(tp.phi, tp.size, round)) {
          fail(round, t.root, "size-bound",
               where + ": phi = " + std::to_string(tp.phi) + " exceeds the bound for size " +
                   std::to_string(tp.size));
        }
      }
      out->trees.push_back(std::move(tp));
    }
    if (out->active == 0) idle_rounds_.push_back(round);
  }

  previous_ = end;
  previous_roots_ = std::move(roots);
  previous_size_ = std::move(size);
  previous_phi_ = std::move(phi);
  return out;
}

void PotentialTracker::finish(std::uint32_t last_round) {
  if (!checks_) return;
  for (std::uint32_t r : idle_rounds_) {
    if (r < last_round) {
      fail(r, kNoVertex, "active-round",
           "round " + std::to_string(r) + " is not the last but has no active tree");
    }
  }
}

VertexArray<std::uint8_t> isolated_vertices(const Graph& g) {
  VertexArray<std::uint8_t> out(static_cast<std::size_t>(g.n()) + 1, 0);
  for (Vertex v = 1; v <= g.n(); ++v) {
    bool alone = true;
    for (Vertex w : g.neighbors(v)) {
      if (w != v) {
        alone = false;
        break;
      }
    }
    out[v] = alone ? 1 : 0;
  }
  return out;
}

std::vector<PotentialRound> potential_report(AlgorithmKind kind,
                                             std::span<const LabelForest> round_ends,
                                             const Graph& g) {
  if (!is_monotone(kind)) {
    throw std::invalid_argument("potential_report: algorithm " + std::string(to_string(kind)) +
                                " is not monotone");
  }
  PotentialTracker tracker(g.n(), isolated_vertices(g), false);
  std::vector<PotentialRound> out;
  std::uint32_t round = 0;
  for (const LabelForest& f : round_ends) {
    if (auto rec = tracker.observe(++round, f)) out.push_back(std::move(*rec));
  }
  return out;
}

}  // namespace cclab
