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


#ifndef CCLAB_RECIPE_HPP_
#define CCLAB_RECIPE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cclab/graph.hpp"

namespace cclab {

// Malformed recipe text. Parameter range errors surface as GraphError.
class RecipeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Recipes:
//   path:N  cycle:N  star:N  complete:N  grid:RxC  W:k
//   gnp:N,P,SEED   (P a decimal probability)
//   g:RECIPE       (generator transform of another recipe)
// Sizes accept integer expressions with + - * ^ and parentheses, so
// "path:2^10+1" is a path on 1025 vertices.
struct BuiltGraph {
  Graph graph;
  std::string recipe;
  std::optional<std::uint32_t> diameter;  // known in closed form
};

BuiltGraph build_recipe(std::string_view recipe);

// Shell-style brace expansion: "{a,b}" alternatives and "{3..14}" integer
// ranges, expanded left to right. Text without braces expands to itself.
std::vector<std::string> expand_braces(std::string_view pattern);

// Evaluates a non-negative integer expression. Throws RecipeError.
std::uint64_t evaluate_size(std::string_view expr);

}  // namespace cclab

#endif  // CCLAB_RECIPE_HPP_
