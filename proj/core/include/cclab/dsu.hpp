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


#ifndef CCLAB_DSU_HPP_
#define CCLAB_DSU_HPP_

#include <cstdint>
#include <vector>

#include "cclab/types.hpp"

namespace cclab {

// Disjoint-set union over 1..n with union by size and path compression.
class Dsu {
 public:
  explicit Dsu(Vertex n);

  Vertex find(Vertex v);
  // Returns false when a and b were already in the same set.
  bool unite(Vertex a, Vertex b);
  bool same(Vertex a, Vertex b) { return find(a) == find(b); }

  std::size_t set_count() const { return sets_; }
  std::uint32_t set_size(Vertex v) { return size_[find(v)]; }

 private:
  VertexArray<Vertex> parent_;
  VertexArray<std::uint32_t> size_;
  std::size_t sets_;
};

}  // namespace cclab

#endif  // CCLAB_DSU_HPP_
