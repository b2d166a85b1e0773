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


#include "cclab/drivers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "cclab/dsu.hpp"

namespace cclab {

// ---- algorithm descriptions ----------------------------------------------

namespace {

constexpr std::array<std::string_view, 11> kNames = {"P",  "E",  "A",   "R",  "RA", "S",
                                                     "SA", "SRT", "SV", "AS", "REIF"};

}  // namespace

std::string_view to_string(AlgorithmKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

AlgorithmKind parse_algorithm(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == upper) return static_cast<AlgorithmKind>(i);
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

bool is_min_labeling(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kSV:
    case AlgorithmKind::kAS:
    case AlgorithmKind::kREIF:
      return false;
    default:
      return true;
  }
}

bool is_monotone(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kP:
    case AlgorithmKind::kE:
    case AlgorithmKind::kA:
    case AlgorithmKind::kSRT:
      return false;
    default:
      return true;
  }
}

bool alters_edges(AlgorithmKind kind) {
  return kind == AlgorithmKind::kA || kind == AlgorithmKind::kRA || kind == AlgorithmKind::kSA;
}

bool uses_policy(AlgorithmKind kind) { return !is_min_labeling(kind); }

void AlgorithmSpec::validate() const {
  if (shortcuts_per_round == 0) {
    throw std::invalid_argument("shortcuts_per_round must be positive");
  }
  if (strengthened_deletion) {
    if (kind == AlgorithmKind::kA) {
      throw std::invalid_argument("strengthened deletion is unsound for A; it is an RA option");
    }
    if (kind != AlgorithmKind::kRA) {
      throw std::invalid_argument("strengthened deletion applies to RA only");
    }
    if (loop_mode == LoopMode::kRetainLoop) {
      throw std::invalid_argument("strengthened deletion cannot be combined with loop retention");
    }
  }
  if (record_spanning_forest && kind != AlgorithmKind::kR && kind != AlgorithmKind::kRA) {
    throw std::invalid_argument("spanning forest recording applies to R and RA only");
  }
}

std::string AlgorithmSpec::describe() const {
  std::ostringstream out;
  out << to_string(kind);
  if (shortcuts_per_round != 1) out << " shortcuts=" << shortcuts_per_round;
  if (loop_mode == LoopMode::kRetainLoop) out << " loops=retain";
  if (strengthened_deletion) out << " strengthened";
  if (uses_policy(kind)) out << " seed=" << policy_seed;
  if (record_spanning_forest) out << " spanning-forest";
  if (skip_shortcut_in_round) out << " skip-shortcut=" << *skip_shortcut_in_round;
  return out.str();
}

// ---- hooks -----------------------------------------------------------------

HookViolation::HookViolation(std::string hook, std::uint32_t round, std::string_view primitive,
                             const std::string& detail)
    : std::runtime_error("hook '" + hook + "' failed in round " + std::to_string(round) +
                         " after " + std::string(primitive) + ": " + detail),
      hook_(std::move(hook)),
      round_(round) {}

bool changes_parents(StepKind kind) {
  return kind == StepKind::kUpdate || kind == StepKind::kShortcut || kind == StepKind::kSrt;
}

RunHooks RunHooks::all() {
  RunHooks h;
  h.green_target = true;
  h.color_invariants = true;
  h.root_paths = true;
  h.level_sum = true;
  h.potentials = true;
  return h;
}

RunHooks RunHooks::none() {
  RunHooks h;
  h.forest = false;
  h.min_labeling = false;
  h.flat_forest = false;
  return h;
}

// ---- programs --------------------------------------------------------------

namespace {

enum class Op : std::uint8_t {
  kConnect,
  kParentConnect,
  kArbitraryParentConnect,
  kExtendedConnect,
  kMaxParentConnect,
  kRandomConnect,
  kUpdate,
  kRootUpdate,
  kArbitraryRootUpdate,
  kFlatRootUpdate,
  kPassiveRootUpdate,
  kShortcut,
  kShortcutFixpoint,
  kAlter,
  kSrt,
};

std::string_view op_name(Op op) {
  switch (op) {
    case Op::kConnect: return "connect";
    case Op::kParentConnect:
    case Op::kArbitraryParentConnect: return "parent-connect";
    case Op::kExtendedConnect: return "extended-connect";
    case Op::kMaxParentConnect: return "max-parent-connect";
    case Op::kRandomConnect: return "random-connect";
    case Op::kUpdate: return "update";
    case Op::kRootUpdate: return "root-update";
    case Op::kArbitraryRootUpdate: return "arbitrary-root-update";
    case Op::kFlatRootUpdate: return "flat-root-update";
    case Op::kPassiveRootUpdate: return "passive-root-update";
    case Op::kShortcut:
    case Op::kShortcutFixpoint: return "shortcut";
    case Op::kAlter: return "alter";
    case Op::kSrt: return "srt-round";
  }
  return "?";
}

StepKind op_kind(Op op) {
  switch (op) {
    case Op::kUpdate:
    case Op::kRootUpdate:
    case Op::kArbitraryRootUpdate:
    case Op::kFlatRootUpdate:
    case Op::kPassiveRootUpdate: return StepKind::kUpdate;
    case Op::kShortcut:
    case Op::kShortcutFixpoint: return StepKind::kShortcut;
    case Op::kAlter: return StepKind::kAlter;
    case Op::kSrt: return StepKind::kSrt;
    default: return StepKind::kConnect;
  }
}

std::vector<Op> program(const AlgorithmSpec& spec) {
  const std::vector<Op> shortcuts(spec.shortcuts_per_round, Op::kShortcut);
  auto with = [&](std::initializer_list<Op> head, bool alter) {
    std::vector<Op> p(head);
    p.insert(p.end(), shortcuts.begin(), shortcuts.end());
    if (alter) p.push_back(Op::kAlter);
    return p;
  };
  switch (spec.kind) {
    case AlgorithmKind::kP: return with({Op::kParentConnect, Op::kUpdate}, false);
    case AlgorithmKind::kE: return with({Op::kExtendedConnect, Op::kUpdate}, false);
    case AlgorithmKind::kA: return with({Op::kConnect, Op::kUpdate}, true);
    case AlgorithmKind::kR: return with({Op::kParentConnect, Op::kRootUpdate}, false);
    case AlgorithmKind::kRA: return with({Op::kConnect, Op::kRootUpdate}, true);
    case AlgorithmKind::kS:
      return {Op::kParentConnect, Op::kRootUpdate, Op::kShortcutFixpoint};
    case AlgorithmKind::kSA:
      return {Op::kConnect, Op::kRootUpdate, Op::kShortcutFixpoint, Op::kAlter};
    case AlgorithmKind::kSRT: return {Op::kSrt};
    case AlgorithmKind::kSV:
      return {Op::kShortcut,         Op::kArbitraryParentConnect, Op::kArbitraryRootUpdate,
              Op::kMaxParentConnect, Op::kPassiveRootUpdate,      Op::kShortcut};
    case AlgorithmKind::kAS:
      return {Op::kArbitraryParentConnect, Op::kFlatRootUpdate, Op::kMaxParentConnect,
              Op::kFlatRootUpdate, Op::kShortcut};
    case AlgorithmKind::kREIF:
      return {Op::kRandomConnect, Op::kArbitraryRootUpdate, Op::kShortcut};
  }
  return {};
}

// Number of proper ancestors of every vertex, in O(n).
VertexArray<std::uint32_t> depths(const LabelForest& f) {
  constexpr std::uint32_t kUnknown = UINT32_MAX;
  VertexArray<std::uint32_t> depth(static_cast<std::size_t>(f.size()) + 1, kUnknown);
  std::vector<Vertex> stack;
  for (Vertex v = 1; v <= f.size(); ++v) {
    Vertex u = v;
    while (depth[u] == kUnknown && !f.is_root(u)) {
      stack.push_back(u);
      u = f.parent(u);
    }
    if (depth[u] == kUnknown) depth[u] = 0;
    std::uint32_t d = depth[u];
    while (!stack.empty()) {
      depth[stack.back()] = ++d;
      stack.pop_back();
    }
  }
  return depth;
}

bool is_kind(const AlgorithmSpec& s, std::initializer_list<AlgorithmKind> kinds) {
  return std::find(kinds.begin(), kinds.end(), s.kind) != kinds.end();
}

}  // namespace

// ---- execution -------------------------------------------------------------

struct Execution::Impl {
  Impl(const Graph& graph, const AlgorithmSpec& s, RunHooks h, RunOptions o);

  bool step();
  void execute(Op op);
  void end_round();
  void check_after(Op op, const LabelForest& before, const std::vector<Hook>& hooks);
  void check_colors(Op op, const Coloring* before_alter);
  void check_root_paths();
  void violation(const std::string& hook, const std::string& detail) const {
    throw HookViolation(hook, round, op_name(prog[pc]), detail);
  }

  VertexArray<std::uint8_t> passive_flags() const;

  const Graph& g;
  AlgorithmSpec spec;
  RunHooks hooks;
  RunOptions options;
  std::vector<Op> prog;
  std::size_t pc = 0;

  LabelForest forest;
  std::vector<EdgeState> edges;
  MessageBatch batch;
  ArbitraryPolicy policy;
  VertexArray<std::uint8_t> heads;

  std::uint32_t round = 1;
  std::uint32_t limit = 0;
  bool round_changed = false;
  bool done = false;
  StepEvent last;
  RunTrace trace;
  RoundRecord current;

  ColoringMode coloring_mode;
  bool check_min;
  bool check_green_target;
  bool check_colors_on;
  bool check_paths;
  bool check_levels;
  bool check_potentials;
  PotentialTracker tracker;
  std::optional<Partition> components;
  std::vector<EdgeId> spanning;

  // SV passivity: forests at the start of the previous and current rounds.
  LabelForest start_previous;
  LabelForest start_current;
};

Execution::Impl::Impl(const Graph& graph, const AlgorithmSpec& s, RunHooks h, RunOptions o)
    : g(graph),
      spec(s),
      hooks(std::move(h)),
      options(o),
      prog(program(s)),
      forest(LabelForest::identity(graph.n())),
      edges(make_edge_states(graph)),
      coloring_mode(alters_edges(s.kind) ? ColoringMode::kEdgeBased : ColoringMode::kTreeBased),
      check_min(hooks.min_labeling && is_min_labeling(s.kind)),
      check_green_target(hooks.green_target &&
                         is_kind(s, {AlgorithmKind::kP, AlgorithmKind::kE, AlgorithmKind::kA,
                                     AlgorithmKind::kR, AlgorithmKind::kRA})),
      check_colors_on(hooks.color_invariants && s.kind == AlgorithmKind::kA &&
                      s.loop_mode == LoopMode::kRetainLoop),
      check_paths(hooks.root_paths && alters_edges(s.kind) && !s.strengthened_deletion),
      check_levels(hooks.level_sum && s.kind == AlgorithmKind::kA &&
                   s.loop_mode == LoopMode::kRetainLoop),
      check_potentials(hooks.potentials &&
                       is_kind(s, {AlgorithmKind::kR, AlgorithmKind::kRA}) &&
                       s.shortcuts_per_round == 1),
      tracker(graph.n(), isolated_vertices(graph), check_potentials) {
  spec.validate();
  limit = options.round_limit ? options.round_limit : 64 * graph.n();
  if (uses_policy(s.kind)) policy = ArbitraryPolicy::first_by_edge(graph.m(), s.policy_seed);
  trace.spec = s;
  trace.n = graph.n();
  trace.m = graph.m();
  trace.passivity_reconstructed = s.kind == AlgorithmKind::kSV;
  if (s.record_spanning_forest) trace.spanning_forest.emplace();
  start_previous = forest;
  start_current = forest;
  current.round = 1;
}

VertexArray<std::uint8_t> Execution::Impl::passive_flags() const {
  // A tree counts as passive when it is unchanged since the start of the
  // previous round: no member's parent moved and no vertex joined or left.
  const Vertex n = forest.size();
  VertexArray<std::uint8_t> flags(static_cast<std::size_t>(n) + 1, 0);
  if (round < 2) return flags;
  const VertexArray<Vertex> roots = find_roots(forest);
  const VertexArray<Vertex> old_roots = find_roots(start_previous);
  VertexArray<std::uint32_t> size(flags.size(), 0), old_size(flags.size(), 0);
  VertexArray<std::uint8_t> moved(flags.size(), 0);
  for (Vertex v = 1; v <= n; ++v) {
    ++size[roots[v]];
    ++old_size[old_roots[v]];
    if (forest.parent(v) != start_previous.parent(v)) moved[roots[v]] = 1;
  }
  for (Vertex r = 1; r <= n; ++r) {
    if (forest.is_root(r) && !moved[r] && size[r] == old_size[r]) flags[r] = 1;
  }
  return flags;
}

void Execution::Impl::execute(Op op) {
  const bool parent_step = changes_parents(op_kind(op));
  const bool need_before = parent_step && (check_min || check_green_target);
  LabelForest before;
  if (need_before) before = forest;
  std::optional<Coloring> colors_before;
  if (check_green_target && op_kind(op) == StepKind::kUpdate) {
    colors_before = colorize(forest, edges, coloring_mode);
  }
  std::optional<Coloring> alter_colors;
  if (check_colors_on && op == Op::kAlter) {
    alter_colors = colorize(forest, edges, coloring_mode);
  }
  std::optional<LevelAssignment> levels_before;
  if (check_levels && op_kind(op) == StepKind::kShortcut) {
    levels_before = levels(forest, colorize(forest, edges, coloring_mode));
  }
  LabelForest pre_shortcut;
  if (levels_before) pre_shortcut = forest;

  Cost cost;
  bool changed = false;
  std::vector<Hook> hook_list;

  auto apply = [&](ForestStep&& s) {
    cost += s.cost;
    changed = s.changed;
    hook_list = std::move(s.hooks);
    forest = std::move(s.forest);
  };

  switch (op) {
    case Op::kConnect: batch = connect(edges); break;
    case Op::kParentConnect: batch = parent_connect(edges, forest); break;
    case Op::kArbitraryParentConnect:
      batch = parent_connect(edges, forest, Resolution::kArbitrary);
      break;
    case Op::kExtendedConnect: batch = extended_connect(edges, forest); break;
    case Op::kMaxParentConnect: batch = max_parent_connect(edges, forest); break;
    case Op::kRandomConnect: {
      std::seed_seq seq{static_cast<std::uint32_t>(spec.policy_seed),
                        static_cast<std::uint32_t>(spec.policy_seed >> 32), round};
      std::mt19937_64 rng(seq);
      heads.assign(static_cast<std::size_t>(forest.size()) + 1, 0);
      for (Vertex v = 1; v <= forest.size(); ++v) heads[v] = static_cast<std::uint8_t>(rng() & 1);
      current.coins = heads;
      batch = random_connect(edges, forest, heads);
      break;
    }
    case Op::kUpdate: apply(update(forest, batch)); break;
    case Op::kRootUpdate: apply(root_update(forest, batch)); break;
    case Op::kArbitraryRootUpdate: apply(arbitrary_root_update(forest, batch, policy)); break;
    case Op::kFlatRootUpdate:
      apply(flat_root_update(forest, batch, flat_tree_flags(forest), policy));
      break;
    case Op::kPassiveRootUpdate:
      apply(passive_root_update(forest, batch, passive_flags(), policy));
      break;
    case Op::kShortcut:
    case Op::kShortcutFixpoint: {
      ForestStep s = shortcut(forest);
      ++current.shortcut_iterations;
      if (s.changed) ++current.effective_shortcuts;
      apply(std::move(s));
      break;
    }
    case Op::kAlter: {
      AlterStep s = alter(edges, forest, spec.alter_mode());
      cost += s.cost;
      changed = s.edges != edges;
      edges = std::move(s.edges);
      break;
    }
    case Op::kSrt: {
      SrtStep s = srt_round(forest, edges);
      cost += s.cost;
      changed = s.changed;
      forest = std::move(s.forest);
      break;
    }
  }
  if (op_kind(op) == StepKind::kConnect) cost += batch.cost;

  if (parent_step && changed) round_changed = true;
  if (trace.spanning_forest && op == Op::kRootUpdate) {
    for (const Hook& h : hook_list) trace.spanning_forest->push_back(h.edge);
  }
  current.cost += cost;
  trace.total += cost;
  last = {round, op_name(op), op_kind(op), changed, cost, trace.total};

  if (parent_step) {
    if (hooks.forest) {
      if (auto bad = assert_forest(forest)) violation("forest", bad->describe());
    }
    if (check_min) {
      for (Vertex v = 1; v <= forest.size(); ++v) {
        const Vertex p = forest.parent(v);
        if (p > v || p > before.parent(v)) {
          violation("min-labeling", "parent of " + std::to_string(v) + " went from " +
                                        std::to_string(before.parent(v)) + " to " +
                                        std::to_string(p));
        }
      }
    }
    if (colors_before) {
      for (const Hook& h : hook_list) {
        if (!colors_before->green(h.parent)) {
          violation("green-target", std::to_string(h.vertex) + " hooked onto " +
                                        std::to_string(h.parent) + ", which was red");
        }
      }
    }
    if (hooks.distance && trace.total.waves < 63) {
      const std::uint64_t reach = std::uint64_t{1} << trace.total.waves;
      for (Vertex v = 1; v <= forest.size(); ++v) {
        const Vertex p = forest.parent(v);
        if (p != v && hooks.distance(v, p) > reach) {
          violation("distance", "dist(" + std::to_string(v) + ", " + std::to_string(p) +
                                    ") exceeds 2^" + std::to_string(trace.total.waves));
        }
      }
    }
  }

  if (levels_before) {
    const Coloring c = colorize(pre_shortcut, edges, coloring_mode);
    // Deepest green vertex and its path to the root.
    const VertexArray<std::uint32_t> depth = depths(pre_shortcut);
    Vertex deepest = kNoVertex;
    for (Vertex v = 1; v <= forest.size(); ++v) {
      if (c.green(v) && (deepest == kNoVertex || depth[v] > depth[deepest])) deepest = v;
    }
    const std::uint32_t path_len = deepest == kNoVertex ? 0 : depth[deepest] + 1;
    const double n_green = static_cast<double>(levels_before->green_count);
    if (path_len >= 3 && n_green >= 2) {
      const std::uint32_t k = path_len - 2;
      if (static_cast<double>(k) >= 2 * std::log2(n_green)) {
        LevelAssignment after;
        try {
          after = relevel(forest, *levels_before);
        } catch (const LevelError& e) {
          violation("level-sum", e.what());
        }
        std::int64_t increase = 0;
        Vertex u = deepest;
        for (std::uint32_t i = 0; i + 1 < path_len; ++i, u = pre_shortcut.parent(u)) {
          increase += after.level[u] - levels_before->level[u];
        }
        if (4 * increase < static_cast<std::int64_t>(k)) {
          violation("level-sum", "shortcut raised the levels on a green path of " +
                                     std::to_string(path_len) + " vertices by only " +
                                     std::to_string(increase));
        }
      }
    }
  }

  if (check_colors_on) check_colors(op, alter_colors ? &*alter_colors : nullptr);

  if (options.snapshots) current.snapshots.push_back(forest.to_list());
  if (hooks.observer) hooks.observer(last, forest, edges);
}

void Execution::Impl::check_colors(Op op, const Coloring* before_alter) {
  const Coloring c = colorize(forest, edges, coloring_mode);
  const Vertex n = forest.size();
  for (Vertex v = 1; v <= n; ++v) {
    const Vertex p = forest.parent(v);
    if (c.green(v)) {
      if (p != v && !c.green(p)) {
        violation("color", "green non-root " + std::to_string(v) + " has red parent " +
                               std::to_string(p));
      }
    } else {
      if (!c.green(forest.parent(p))) {
        violation("color", "red vertex " + std::to_string(v) + " has no green grandparent");
      }
      if (op_kind(op) == StepKind::kShortcut && !c.green(p)) {
        violation("color", "red vertex " + std::to_string(v) +
                               " has a red parent after a shortcut");
      }
    }
  }
  if (before_alter) {
    VertexArray<std::uint8_t> green_child(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
      if (!forest.is_root(v) && before_alter->green(v)) green_child[forest.parent(v)] = 1;
    }
    for (Vertex v = 1; v <= n; ++v) {
      const bool expected = forest.is_root(v) || green_child[v];
      if (expected != c.green(v)) {
        violation("color", "alter left vertex " + std::to_string(v) +
                               (c.green(v) ? " green" : " red") + ", expected the opposite");
      }
    }
  }
}

void Execution::Impl::check_root_paths() {
  if (!components) components = components_bfs(g);
  Dsu dsu(forest.size());
  for (const EdgeState& e : edges) {
    if (e.alive) dsu.unite(e.x, e.y);
  }
  std::vector<Vertex> first_root(components->count(), kNoVertex);
  for (Vertex v = 1; v <= forest.size(); ++v) {
    if (!forest.is_root(v)) continue;
    Vertex& r = first_root[components->component[v]];
    if (r == kNoVertex) {
      r = v;
    } else if (!dsu.same(r, v)) {
      violation("root-paths", "roots " + std::to_string(r) + " and " + std::to_string(v) +
                                  " share a component but no path of alive edges");
    }
  }
}

void Execution::Impl::end_round() {
  current.round = round;
  current.changed = round_changed;
  const std::vector<TreeStats> stats = tree_stats(forest);
  current.tree_count = static_cast<std::uint32_t>(stats.size());
  const Coloring c = colorize(forest, edges, coloring_mode);
  current.green = c.green_count();
  current.red = c.red_count();

  std::optional<PotentialRound> pr = tracker.observe(round, forest);
  if (check_potentials && !tracker.violations().empty()) {
    const PotentialViolation& v = tracker.violations().front();
    throw HookViolation("potential:" + v.check, v.round, "round end", v.detail);
  }
  if (pr) {
    current.active_trees = pr->active;
    if (is_monotone(spec.kind)) current.potential = pr->total;
  } else {
    current.active_trees = current.tree_count;
  }
  if (options.tree_records) {
    if (pr) {
      current.trees = std::move(pr->trees);
    } else {
      for (const TreeStats& t : stats) {
        current.trees.push_back({t.root, static_cast<std::uint32_t>(t.size), t.height, t.flat,
                                 true, 0, std::nullopt});
      }
    }
  }
  if (options.round_forests) current.forest = forest.to_list();

  if (check_paths) check_root_paths();
  if (hooks.flat_forest && spec.kind == AlgorithmKind::kREIF && !all_flat(forest)) {
    throw HookViolation("flat-forest", round, "round end", "a tree is not flat");
  }

  bool finished = !round_changed;
  if (finished && spec.kind == AlgorithmKind::kREIF) {
    // Coins can leave a round idle while trees still need joining.
    for (const EdgeState& e : edges) {
      if (e.alive && forest.parent(e.x) != forest.parent(e.y)) {
        finished = false;
        break;
      }
    }
  }

  trace.shortcut_iterations += current.shortcut_iterations;
  trace.effective_shortcuts += current.effective_shortcuts;
  trace.rounds.push_back(std::move(current));
  current = RoundRecord{};

  if (finished) {
    done = true;
    if (check_potentials) {
      tracker.finish(round);
      if (!tracker.violations().empty()) {
        const PotentialViolation& v = tracker.violations().front();
        throw HookViolation("potential:" + v.check, v.round, "run end", v.detail);
      }
    }
    trace.final_forest = forest;
    return;
  }
  if (round >= limit) {
    throw RoundLimitExceeded("no termination within " + std::to_string(limit) + " rounds (" +
                             spec.describe() + ")");
  }
  ++round;
  current.round = round;
  pc = 0;
  round_changed = false;
  start_previous = std::move(start_current);
  start_current = forest;
}

bool Execution::Impl::step() {
  while (!done) {
    const Op op = prog[pc];
    const bool skipped = spec.skip_shortcut_in_round == round &&
                         (op == Op::kShortcut || op == Op::kShortcutFixpoint);
    if (skipped) {
      ++pc;
    } else {
      execute(op);
      if (op != Op::kShortcutFixpoint || !last.changed) ++pc;
    }
    if (pc == prog.size()) end_round();
    if (!skipped) return true;
  }
  return false;
}

Execution::Execution(const Graph& g, const AlgorithmSpec& spec, RunHooks hooks,
                     RunOptions options)
    : impl_(std::make_unique<Impl>(g, spec, std::move(hooks), options)) {}
Execution::~Execution() = default;
Execution::Execution(Execution&&) noexcept = default;
Execution& Execution::operator=(Execution&&) noexcept = default;

bool Execution::step() { return impl_->step(); }
bool Execution::finished() const { return impl_->done; }
const StepEvent& Execution::last() const { return impl_->last; }
const LabelForest& Execution::forest() const { return impl_->forest; }
std::span<const EdgeState> Execution::edges() const { return impl_->edges; }
std::uint32_t Execution::round() const { return impl_->round; }

RunTrace Execution::finish() {
  while (impl_->step()) {
  }
  return std::move(impl_->trace);
}

RunTrace run(const AlgorithmSpec& spec, const Graph& g, const RunHooks& hooks,
             const RunOptions& options) {
  return Execution(g, spec, hooks, options).finish();
}

// ---- lockstep --------------------------------------------------------------

std::string Divergence::describe() const {
  std::ostringstream out;
  out << "checkpoint " << checkpoint << ": ";
  if (primitive_a.empty() || primitive_b.empty()) {
    out << (primitive_a.empty() ? "first" : "second") << " run terminated while the other ran "
        << (primitive_a.empty() ? primitive_b : primitive_a);
  } else {
    out << "parent of " << vertex << " is " << parent_a << " after " << primitive_a
        << " (round " << round_a << ") vs " << parent_b << " after " << primitive_b
        << " (round " << round_b << ")";
  }
  return out.str();
}

LockstepResult run_lockstep(const AlgorithmSpec& a, const AlgorithmSpec& b, const Graph& g,
                            const RunHooks& hooks) {
  Execution ea(g, a, hooks), eb(g, b, hooks);
  auto advance = [](Execution& e) {
    while (e.step()) {
      if (changes_parents(e.last().kind)) return true;
    }
    return false;
  };
  LockstepResult result;
  for (;;) {
    const bool ra = advance(ea);
    const bool rb = advance(eb);
    if (!ra && !rb) return result;
    Divergence d;
    d.checkpoint = result.checkpoints;
    d.round_a = ea.round();
    d.round_b = eb.round();
    if (ra) d.primitive_a = std::string(ea.last().primitive);
    if (rb) d.primitive_b = std::string(eb.last().primitive);
    if (ra != rb) {
      result.divergence = std::move(d);
      return result;
    }
    const auto pa = ea.forest().raw();
    const auto pb = eb.forest().raw();
    for (Vertex v = 1; v < pa.size(); ++v) {
      if (pa[v] != pb[v]) {
        d.vertex = v;
        d.parent_a = pa[v];
        d.parent_b = pb[v];
        result.divergence = std::move(d);
        return result;
      }
    }
    ++result.checkpoints;
  }
}

bool is_spanning_forest(const Graph& g, std::span<const EdgeId> ids) {
  Dsu dsu(g.n());
  for (EdgeId id : ids) {
    if (id >= g.m()) return false;
    const Edge& e = g.edge(id);
    if (!dsu.unite(e.v, e.w)) return false;
  }
  Dsu full(g.n());
  for (const Edge& e : g.edges()) full.unite(e.v, e.w);
  return dsu.set_count() == full.set_count();
}

}  // namespace cclab
