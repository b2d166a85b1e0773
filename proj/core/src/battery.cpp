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


#include "cclab/battery.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cclab/drivers.hpp"
#include "cclab/generators.hpp"
#include "cclab/oracle.hpp"
#include "cclab/recipe.hpp"

namespace cclab {

std::vector<std::string> suite_recipes(SuiteSize size) {
  const bool full = size == SuiteSize::kFull;
  std::vector<std::string> out;
  auto add = [&out](std::string_view pattern) {
    for (std::string& r : expand_braces(pattern)) out.push_back(std::move(r));
  };
  if (full) {
    add("path:{2,3,5,17,100,1025}");
    add("cycle:{3,4,5,16,101,1024}");
    add("star:{2,5,100,1000}");
    add("complete:{2,3,5,20,60}");
    add("grid:{1x7,2x2,3x5,10x10,20x50}");
    add("W:{2..6}");
  } else {
    add("path:{2,3,5,17,100}");
    add("cycle:{3,5,16}");
    add("star:{2,5,40}");
    add("complete:{2,5,12}");
    add("grid:{2x2,3x5,8x8}");
    add("W:{2..4}");
  }
  const std::vector<Vertex> sizes = full ? std::vector<Vertex>{10, 50, 200, 1000, 5000}
                                         : std::vector<Vertex>{10, 50, 200};
  const int seeds = full ? 25 : 3;
  for (Vertex n : sizes) {
    std::ostringstream sparse;
    sparse << 1.5 / n;
    for (const std::string& p : {sparse.str(), std::string("0.01"), std::string("0.1")}) {
      for (int seed = 1; seed <= seeds; ++seed) {
        out.push_back("gnp:" + std::to_string(n) + "," + p + "," + std::to_string(seed));
      }
    }
  }
  return out;
}

std::uint32_t r_round_bound(std::uint64_t n) {
  // lg n / lg a = 5 ln n / ln(4/3).
  const double x = 5.0 * std::log(static_cast<double>(n)) / std::log(4.0 / 3.0);
  return static_cast<std::uint32_t>(std::ceil(x)) + 2;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line needs two or more paired points");
  }
  const double k = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / k, my = sy / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxx > 0 ? sxy / sxx : 0;
  f.intercept = my - f.slope * mx;
  f.r2 = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

std::vector<TightnessPoint> tightness_series(unsigned k_min, unsigned k_max) {
  std::vector<TightnessPoint> out;
  for (unsigned k = k_min; k <= k_max; ++k) {
    AlgorithmSpec spec;
    spec.kind = AlgorithmKind::kSA;
    const RunTrace t = run(spec, worst_case_W(k));
    out.push_back({k, t.shortcut_iterations, t.effective_shortcuts, t.round_count()});
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  void pass(double seconds = 0) {
    std::lock_guard lock(mu_);
    ++r_.cases;
    r_.seconds += seconds;
  }
  void fail(const std::string& what, double seconds = 0) {
    std::lock_guard lock(mu_);
    ++r_.cases;
    ++r_.failures;
    r_.passed = false;
    r_.seconds += seconds;
    if (r_.details.size() < 8) r_.details.push_back(what);
  }
  void time(double seconds) {
    std::lock_guard lock(mu_);
    r_.seconds += seconds;
  }
  CheckResult& result() { return r_; }

 private:
  std::mutex mu_;
  CheckResult r_;
};

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  std::optional<RunTrace> trace;
  std::string error;  // hook, limit or verification failure
  std::string hook;   // name of the failing hook, if any
};

Outcome attempt(const AlgorithmSpec& spec, const Graph& g, const RunHooks& hooks) {
  Outcome o;
  try {
    o.trace = run(spec, g, hooks);
  } catch (const HookViolation& e) {
    o.error = e.what();
    o.hook = e.hook();
  } catch (const std::exception& e) {
    o.error = e.what();
  }
  return o;
}

class Battery {
 public:
  explicit Battery(const BatteryOptions& o) : opt_(o) {
    for (std::string_view n : kCheckNames) tallies_.emplace(std::string(n), std::string(n));
    for (const std::string& n : opt_.only) {
      if (!tallies_.count(n)) throw std::invalid_argument("unknown check '" + n + "'");
    }
  }

  std::vector<CheckResult> run();

 private:
  bool on(const std::string& name) const { return opt_.only.empty() || opt_.only.count(name); }
  AlgorithmSpec spec(AlgorithmKind kind) const {
    AlgorithmSpec s;
    s.kind = kind;
    s.skip_shortcut_in_round = opt_.skip_shortcut;
    return s;
  }
  Tally& tally(const std::string& name) { return tallies_.at(name); }

  void graph_checks(const std::string& recipe);
  void distance_checks();
  void tightness_check();
  void divergence_check();
  void slope_report();

  const BatteryOptions& opt_;
  std::map<std::string, Tally> tallies_;
  std::atomic<std::uint64_t> skipped_{0};
  std::mutex note_mu_;
  std::string slope_note_;
};

void Battery::graph_checks(const std::string& recipe) {
  std::optional<BuiltGraph> built;
  try {
    built = build_recipe(recipe);
  } catch (const GraphError& e) {
    if (recipe.rfind("gnp:", 0) == 0) {
      ++skipped_;
      return;
    }
    throw;
  }
  const Graph& g = built->graph;
  const bool want_r = on("r-bound") || on("potentials") || on("messages");
  std::map<AlgorithmKind, std::uint32_t> rounds;
  std::optional<RunTrace> r_trace;

  auto run_r = [&] {
    auto t0 = Clock::now();
    RunHooks hooks;
    hooks.potentials = on("potentials");
    Outcome o = attempt(spec(AlgorithmKind::kR), g, hooks);
    if (on("potentials")) {
      if (o.hook.rfind("potential:", 0) == 0) {
        tally("potentials").fail(recipe + ": " + o.error, since(t0));
        o = attempt(spec(AlgorithmKind::kR), g, RunHooks{});
      } else if (o.trace) {
        tally("potentials").pass(since(t0));
      }
    }
    return o;
  };

  if (on("correctness")) {
    for (AlgorithmKind kind : kAllAlgorithms) {
      const auto t0 = Clock::now();
      Outcome o = kind == AlgorithmKind::kR ? run_r() : attempt(spec(kind), g, RunHooks{});
      std::string why = o.error;
      if (o.trace) {
        if (auto bad = verify_final(o.trace->final_forest, g, is_min_labeling(kind))) {
          why = "vertex " + std::to_string(bad->vertex) + ": " + bad->reason;
        }
        rounds[kind] = o.trace->round_count();
        if (kind == AlgorithmKind::kR) r_trace = std::move(o.trace);
      }
      if (why.empty()) {
        tally("correctness").pass(since(t0));
      } else {
        tally("correctness").fail(recipe + " " + std::string(to_string(kind)) + ": " + why,
                                  since(t0));
      }
    }
  } else if (want_r) {
    Outcome o = run_r();
    if (o.trace) r_trace = std::move(o.trace);
  }

  if (want_r && !r_trace) {
    for (const char* name : {"r-bound", "messages"}) {
      if (on(name)) tally(name).fail(recipe + ": R run failed");
    }
  } else if (r_trace) {
    if (on("r-bound")) {
      const std::uint32_t bound = r_round_bound(g.n());
      if (r_trace->round_count() <= bound) {
        tally("r-bound").pass();
      } else {
        tally("r-bound").fail(recipe + ": " + std::to_string(r_trace->round_count()) +
                              " rounds > bound " + std::to_string(bound));
      }
    }
    if (on("messages")) {
      const std::uint64_t cap = 8ull * g.m() * r_trace->round_count();
      if (r_trace->total.messages <= cap) {
        tally("messages").pass();
      } else {
        tally("messages").fail(recipe + ": " + std::to_string(r_trace->total.messages) +
                               " messages > 8 m rounds = " + std::to_string(cap));
      }
    }
  }

  std::optional<std::uint32_t> a_rounds;
  if (on("colors") || on("diameter")) {
    const auto t0 = Clock::now();
    AlgorithmSpec s = spec(AlgorithmKind::kA);
    s.loop_mode = LoopMode::kRetainLoop;
    RunHooks hooks = on("colors") ? RunHooks::all() : RunHooks{};
    Outcome o = attempt(s, g, hooks);
    if (o.trace) a_rounds = o.trace->round_count();
    if (on("colors")) {
      if (o.trace) {
        tally("colors").pass(since(t0));
      } else {
        tally("colors").fail(recipe + ": " + o.error, since(t0));
      }
    }
  }

  if (on("diameter")) {
    const auto t0 = Clock::now();
    auto rounds_of = [&](AlgorithmKind kind) -> std::optional<std::uint32_t> {
      if (auto it = rounds.find(kind); it != rounds.end()) return it->second;
      Outcome o = attempt(spec(kind), g, RunHooks{});
      if (o.trace) return o.trace->round_count();
      return std::nullopt;
    };
    const std::optional<std::uint32_t> e = rounds_of(AlgorithmKind::kE);
    const std::optional<std::uint32_t> srt = rounds_of(AlgorithmKind::kSRT);
    std::optional<std::uint32_t> d = built->diameter;
    const std::uint32_t lower = d ? *d : diameter_lower_bound(g);
    auto fits = [&](std::uint32_t dd) {
      return e && srt && a_rounds && *e <= dd + 1 && *srt <= dd + 1 && *a_rounds <= dd + 2;
    };
    bool ok = fits(lower);
    if (!ok && !d && g.n() <= kDiameterLimit) {
      d = diameter(g);
      ok = fits(*d);
    }
    if (ok) {
      tally("diameter").pass(since(t0));
    } else {
      auto show = [](std::optional<std::uint32_t> v) {
        return v ? std::to_string(*v) : std::string("failed");
      };
      tally("diameter").fail(recipe + ": d=" + (d ? std::to_string(*d) : ">=" + std::to_string(lower)) +
                                 " E=" + show(e) + " A=" + show(a_rounds) + " SRT=" + show(srt),
                             since(t0));
    }
  }

  if (on("lockstep")) {
    for (auto [x, y] : {std::pair{AlgorithmKind::kR, AlgorithmKind::kRA},
                        std::pair{AlgorithmKind::kS, AlgorithmKind::kSA}}) {
      const auto t0 = Clock::now();
      try {
        const LockstepResult r = run_lockstep(spec(x), spec(y), g);
        if (r.equal()) {
          tally("lockstep").pass(since(t0));
        } else {
          tally("lockstep").fail(recipe + " " + std::string(to_string(x)) + "/" +
                                     std::string(to_string(y)) + ": " + r.divergence->describe(),
                                 since(t0));
        }
      } catch (const std::exception& ex) {
        tally("lockstep").fail(recipe + ": " + ex.what(), since(t0));
      }
    }
  }
}

void Battery::distance_checks() {
  const unsigned top = opt_.suite == SuiteSize::kFull ? 12 : 8;
  for (unsigned i = 1; i <= top; ++i) {
    const Graph g = path_graph((Vertex{1} << i) + 1);
    for (AlgorithmKind kind : kAllAlgorithms) {
      const auto t0 = Clock::now();
      RunHooks hooks;
      hooks.distance = [](Vertex u, Vertex v) -> std::uint64_t { return u > v ? u - v : v - u; };
      Outcome o = attempt(spec(kind), g, hooks);
      const std::string name = "path:" + std::to_string(g.n()) + " " + std::string(to_string(kind));
      if (!o.trace) {
        tally("distance").fail(name + ": " + o.error, since(t0));
      } else if (o.trace->total.waves < i) {
        tally("distance").fail(name + ": " + std::to_string(o.trace->total.waves) +
                                   " waves < lg d = " + std::to_string(i),
                               since(t0));
      } else {
        tally("distance").pass(since(t0));
      }
    }
  }
}

void Battery::tightness_check() {
  const auto t0 = Clock::now();
  const unsigned top = opt_.suite == SuiteSize::kFull ? 8 : 6;
  const std::vector<TightnessPoint> pts = tightness_series(2, top);
  Tally& t = tally("tightness");
  const TightnessPoint* k3 = nullptr;
  for (const TightnessPoint& p : pts) {
    if (p.k == 3) k3 = &p;
  }
  std::ostringstream series;
  std::vector<double> x, y;
  for (const TightnessPoint& p : pts) {
    series << " k=" << p.k << ":" << p.total << "/" << p.effective;
    x.push_back(static_cast<double>(p.k) * p.k);
    y.push_back(static_cast<double>(p.total));
  }
  bool ok = true;
  for (const TightnessPoint& p : pts) {
    // total(k) >= (total(3) / 9) k^2, compared exactly.
    if (9 * p.total < k3->total * p.k * p.k) {
      ok = false;
      t.fail("k=" + std::to_string(p.k) + ": S(k)=" + std::to_string(p.total) + " < " +
             std::to_string(k3->total) + "/9 k^2");
    }
  }
  double second = 0;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    second += static_cast<double>(pts[i + 1].total) - 2.0 * static_cast<double>(pts[i].total) +
              static_cast<double>(pts[i - 1].total);
  }
  second /= static_cast<double>(pts.size() - 2);
  if (second < 0) {
    ok = false;
    t.fail("mean second difference " + std::to_string(second) + " < 0");
  }
  const LinearFit fit = fit_line(x, y);
  if (fit.r2 < 0.95) {
    ok = false;
    t.fail("R^2 of S(k) against k^2 is " + std::to_string(fit.r2));
  }
  if (ok) t.pass();
  std::ostringstream s;
  s << "total/effective passes" << series.str() << "; c=" << k3->total << "/9"
    << " mean second difference=" << second << " R^2=" << fit.r2;
  t.result().summary = s.str();
  t.time(since(t0));
}

void Battery::divergence_check() {
  const auto t0 = Clock::now();
  Tally& t = tally("divergence");
  SearchOptions so;
  so.max_n = opt_.suite == SuiteSize::kFull ? opt_.divergence_max_n
                                            : std::min<Vertex>(opt_.divergence_max_n, 8);
  so.budget = opt_.divergence_budget;
  so.workers = std::max(1u, opt_.jobs);
  AlgorithmSpec a = spec(AlgorithmKind::kA), p = spec(AlgorithmKind::kP);
  const SearchResult r = divergence_search(a, p, so);
  if (r.status != SearchStatus::kFound) {
    t.fail("search up to n=" + std::to_string(so.max_n) + ": " + to_string(r.status) + " after " +
               std::to_string(r.examined) + " graphs",
           since(t0));
    return;
  }
  const LockstepResult confirm = run_lockstep(a, p, *r.witness);
  if (confirm.equal()) {
    t.fail("witness did not diverge on re-run", since(t0));
    return;
  }
  std::ostringstream s;
  s << "witness n=" << r.witness->n() << " m=" << r.witness->m() << " edges";
  for (const Edge& e : r.witness->edges()) s << " (" << e.v << "," << e.w << ")";
  s << " after " << r.examined << " graphs; " << confirm.divergence->describe();
  t.result().summary = s.str();
  t.pass(since(t0));
}

void Battery::slope_report() {
  const unsigned top = opt_.suite == SuiteSize::kFull ? 14 : 10;
  std::vector<double> x, y;
  for (unsigned i = 3; i <= top; ++i) {
    const Graph g = path_graph((Vertex{1} << i) + 1);
    const RunTrace t = cclab::run(spec(AlgorithmKind::kR), g);
    x.push_back(std::log2(static_cast<double>(g.n())));
    y.push_back(t.round_count());
    const std::uint32_t bound = r_round_bound(g.n());
    if (t.round_count() > bound) {
      tally("r-bound").fail("path:" + std::to_string(g.n()) + ": " +
                            std::to_string(t.round_count()) + " rounds > " +
                            std::to_string(bound));
    } else {
      tally("r-bound").pass();
    }
  }
  const LinearFit fit = fit_line(x, y);
  std::ostringstream s;
  s << "rounds vs lg n on path:2^{3.." << top << "}+1: slope " << fit.slope << " (R^2 "
    << fit.r2 << ")";
  if (!std::isfinite(fit.slope)) tally("r-bound").fail("slope is not finite");
  slope_note_ = s.str();
}

std::vector<CheckResult> Battery::run() {
  const bool graph_level = on("correctness") || on("lockstep") || on("r-bound") ||
                           on("potentials") || on("diameter") || on("messages") ||
                           on("colors");
  if (graph_level) {
    const std::vector<std::string> recipes = suite_recipes(opt_.suite);
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::string first_error;
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < recipes.size();) {
        try {
          graph_checks(recipes[i]);
        } catch (const std::exception& e) {
          std::lock_guard lock(err_mu);
          if (first_error.empty()) first_error = recipes[i] + ": " + e.what();
        }
      }
    };
    const unsigned jobs = std::max(1u, opt_.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (std::thread& t : pool) t.join();
    }
    if (!first_error.empty()) throw std::runtime_error(first_error);
  }
  if (on("r-bound")) slope_report();
  if (on("distance")) distance_checks();
  if (on("tightness")) tightness_check();
  if (on("divergence")) divergence_check();

  std::vector<CheckResult> out;
  for (std::string_view n : kCheckNames) {
    if (!on(std::string(n))) continue;
    CheckResult& r = tally(std::string(n)).result();
    if (r.summary.empty()) {
      std::ostringstream s;
      s << r.cases << " cases, " << r.failures << " failures";
      if (n == "r-bound" && !slope_note_.empty()) s << "; " << slope_note_;
      if (graph_level && skipped_ && n == "correctness") {
        s << "; " << skipped_ << " gnp draws without edges skipped";
      }
      r.summary = s.str();
    }
    if (r.cases == 0) {
      r.passed = false;
      r.summary += " (nothing checked)";
    }
    if (opt_.on_result) opt_.on_result(r);
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_battery(const BatteryOptions& options) {
  return Battery(options).run();
}

}  // namespace cclab
