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


#ifndef CCLAB_GENERATORS_HPP_
#define CCLAB_GENERATORS_HPP_

#include <cstdint>
#include <span>

#include "cclab/graph.hpp"

namespace cclab {

// Standard families, vertices numbered 1..n in canonical order. All throw
// GraphError on out-of-range parameters.

// 1-2-...-k, k >= 2.
Graph path_graph(Vertex k);
// Path plus the closing edge (k, 1), k >= 3.
Graph cycle_graph(Vertex k);
// Center 1 joined to 2..k, k >= 2.
Graph star_graph(Vertex k);
// All pairs, lexicographic, k >= 2.
Graph complete_graph(Vertex k);
// rows x cols lattice in row-major order, at least two vertices.
Graph grid_graph(Vertex rows, Vertex cols);

// Erdos-Renyi G(n, p) by geometric skipping over the pairs v < w in
// lexicographic order. Deterministic in (n, p, seed). A draw without edges
// throws GraphError, since a graph needs m > 0.
Graph gnp_graph(Vertex n, double p, std::uint64_t seed);

// g(G) on 2n' vertices: edges (i, i + n') for every vertex i, followed by
// (i + n', j + n') for every edge (i, j) of G in input order.
Graph generator_transform(const Graph& g);

// g applied r times.
Graph generator_power(const Graph& g, unsigned r);

// Disjoint union with consecutive vertex blocks in argument order.
Graph disjoint_union(std::span<const Graph> parts);

// Union of g^i(P) for i = 0..k-1 where P is the path on 2^k + 1 vertices.
// k in 2..15.
Graph worst_case_W(unsigned k);

}  // namespace cclab

#endif  // CCLAB_GENERATORS_HPP_
