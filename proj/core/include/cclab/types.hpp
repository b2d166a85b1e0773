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

#ifndef CCLAB_TYPES_HPP_
#define CCLAB_TYPES_HPP_

#include <cstdint>
#include <vector>

namespace cclab {

// Vertices are numbered 1..n. Zero never names a vertex and is used as the
// "nothing" sentinel in per-vertex arrays.
using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = 0;

// Edges are identified by their 0-based position in the input edge list.
using EdgeId = std::uint32_t;
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

// Per-vertex storage: size n + 1, slot 0 unused.
template <class T>
using VertexArray = std::vector<T>;

}  // namespace cclab

#endif  // CCLAB_TYPES_HPP_
