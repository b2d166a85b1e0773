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


#include "cclab/recipe.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "cclab/generators.hpp"

namespace cclab {

namespace {

class Expr {
 public:
  explicit Expr(std::string_view s) : s_(s) {}

  std::uint64_t parse() {
    const std::uint64_t v = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw RecipeError("bad size expression '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) fail("overflow");
    return r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) fail("overflow");
    return r;
  }
  std::uint64_t sum() {
    std::uint64_t v = product();
    for (;;) {
      if (eat('+')) {
        v = add(v, product());
      } else if (eat('-')) {
        const std::uint64_t r = product();
        if (r > v) fail("negative result");
        v -= r;
      } else {
        return v;
      }
    }
  }
  std::uint64_t product() {
    std::uint64_t v = power();
    while (eat('*')) v = mul(v, power());
    return v;
  }
  std::uint64_t power() {
    const std::uint64_t base = atom();
    if (!eat('^')) return base;
    const std::uint64_t e = power();
    if (base <= 1) return e == 0 ? 1 : base;
    std::uint64_t v = 1;
    for (std::uint64_t k = 0; k < e; ++k) v = mul(v, base);
    return v;
  }
  std::uint64_t atom() {
    if (eat('(')) {
      const std::uint64_t v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    skip();
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected a number");
    i_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

Vertex as_vertex(std::string_view text) {
  const std::uint64_t v = evaluate_size(text);
  if (v >= std::numeric_limits<Vertex>::max()) throw RecipeError("size too large: " + std::string(text));
  return static_cast<Vertex>(v);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? at : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

double as_probability(std::string_view text) {
  std::string t(text);
  std::size_t used = 0;
  double p = 0;
  try {
    p = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size()) throw RecipeError("bad probability '" + t + "'");
  return p;
}

}  // namespace

std::uint64_t evaluate_size(std::string_view expr) { return Expr(expr).parse(); }

BuiltGraph build_recipe(std::string_view recipe) {
  const std::size_t colon = recipe.find(':');
  if (colon == std::string_view::npos) {
    throw RecipeError("recipe '" + std::string(recipe) + "' has no ':'");
  }
  const std::string_view family = recipe.substr(0, colon);
  const std::string_view args = recipe.substr(colon + 1);
  const std::string text(recipe);

  if (family == "path") {
    const Vertex k = as_vertex(args);
    return {path_graph(k), text, k - 1};
  }
  if (family == "cycle") {
    const Vertex k = as_vertex(args);
    return {cycle_graph(k), text, k / 2};
  }
  if (family == "star") {
    const Vertex k = as_vertex(args);
    return {star_graph(k), text, k == 2 ? 1u : 2u};
  }
  if (family == "complete") {
    const Vertex k = as_vertex(args);
    return {complete_graph(k), text, 1u};
  }
  if (family == "grid") {
    const auto dims = split(args, 'x');
    if (dims.size() != 2) throw RecipeError("grid recipe needs RxC");
    const Vertex r = as_vertex(dims[0]);
    const Vertex c = as_vertex(dims[1]);
    Graph g = grid_graph(r, c);
    return {std::move(g), text, (r - 1) + (c - 1)};
  }
  if (family == "gnp") {
    const auto parts = split(args, ',');
    if (parts.size() != 3) throw RecipeError("gnp recipe needs N,P,SEED");
    return {gnp_graph(as_vertex(parts[0]), as_probability(parts[1]), evaluate_size(parts[2])),
            text, std::nullopt};
  }
  if (family == "W") {
    const std::uint64_t k = evaluate_size(args);
    if (k < 2 || k > 15) throw GraphError("W(k) needs 2 <= k <= 15");
    // Component g^i(P) has diameter 2^k + 2i.
    return {worst_case_W(static_cast<unsigned>(k)), text,
            static_cast<std::uint32_t>((1u << k) + 2 * (k - 1))};
  }
  if (family == "g") {
    BuiltGraph inner = build_recipe(args);
    std::optional<std::uint32_t> d;
    if (inner.diameter) d = *inner.diameter + 2;
    return {generator_transform(inner.graph), text, d};
  }
  throw RecipeError("unknown recipe family '" + std::string(family) + "'");
}

std::vector<std::string> expand_braces(std::string_view pattern) {
  const std::size_t open = pattern.find('{');
  if (open == std::string_view::npos) return {std::string(pattern)};
  const std::size_t close = pattern.find('}', open);
  if (close == std::string_view::npos) {
    throw RecipeError("unbalanced '{' in '" + std::string(pattern) + "'");
  }
  const std::string_view head = pattern.substr(0, open);
  const std::string_view body = pattern.substr(open + 1, close - open - 1);
  const std::vector<std::string> tails = expand_braces(pattern.substr(close + 1));

  std::vector<std::string> choices;
  const std::size_t dots = body.find("..");
  if (dots != std::string_view::npos) {
    const std::uint64_t lo = evaluate_size(body.substr(0, dots));
    const std::uint64_t hi = evaluate_size(body.substr(dots + 2));
    if (lo > hi) throw RecipeError("empty range {" + std::string(body) + "}");
    if (hi - lo > 1'000'000) throw RecipeError("range too long {" + std::string(body) + "}");
    for (std::uint64_t i = lo; i <= hi; ++i) choices.push_back(std::to_string(i));
  } else {
    for (std::string_view c : split(body, ',')) choices.emplace_back(c);
  }

  std::vector<std::string> out;
  out.reserve(choices.size() * tails.size());
  for (const std::string& c : choices) {
    for (const std::string& t : tails) out.push_back(std::string(head) + c + t);
  }
  return out;
}

}  // namespace cclab
