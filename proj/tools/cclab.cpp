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


// cclab: run, sweep, verify and generate.
// Exit codes: 0 ok, 1 check failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cclab/battery.hpp"
#include "cclab/drivers.hpp"
#include "cclab/graph.hpp"
#include "cclab/oracle.hpp"
#include "cclab/recipe.hpp"
#include "cclab/trace_io.hpp"

namespace fs = std::filesystem;
using namespace cclab;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("CCLAB_OUT_DIR"); env && *env) return env;
  return {};
}

fs::path resolve(const fs::path& dir, const std::string& file) {
  const fs::path p(file);
  return p.is_absolute() || dir.empty() ? p : dir / p;
}

// Write to a sibling temporary, then rename over the target.
void write_atomically(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path.string());
    out << text;
    if (!out) throw UsageError("write failed: " + path.string());
  }
  fs::rename(tmp, path);
}

struct Source {
  std::string recipe;
  std::string file;

  BuiltGraph load() const {
    if (!recipe.empty()) return build_recipe(recipe);
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open " + file);
    return {parse_edge_list(in), file, std::nullopt};
  }
};

struct SpecFlags {
  std::uint32_t shortcuts = 1;
  std::string loop = "delete";
  bool strengthened = false;
  std::uint64_t seed = 0;
  bool spanning = false;
  std::optional<std::uint32_t> skip_round;

  void add(CLI::App* app) {
    app->add_option("--shortcuts", shortcuts, "Shortcut steps per round (P E A R RA)")
        ->check(CLI::PositiveNumber);
    app->add_option("--loop-mode", loop, "Edges whose ends coincide: delete or retain")
        ->check(CLI::IsMember({"delete", "retain"}));
    app->add_flag("--strengthened-deletion", strengthened,
                  "RA: also delete edges that become parent arcs");
    app->add_option("--seed", seed, "Policy seed (SV AS REIF)");
    app->add_flag("--spanning-forest", spanning, "Record spanning forest edges (R RA)");
    app->add_option("--skip-shortcut-round", skip_round, "Fault injection: skip shortcuts in round");
  }

  AlgorithmSpec make(AlgorithmKind kind, std::uint64_t seed_override) const {
    AlgorithmSpec s;
    s.kind = kind;
    if (kind == AlgorithmKind::kP || kind == AlgorithmKind::kE || kind == AlgorithmKind::kA ||
        kind == AlgorithmKind::kR || kind == AlgorithmKind::kRA) {
      s.shortcuts_per_round = shortcuts;
    }
    if (alters_edges(kind)) s.loop_mode = loop == "retain" ? LoopMode::kRetainLoop : LoopMode::kDelete;
    s.strengthened_deletion = strengthened;
    s.policy_seed = uses_policy(kind) ? seed_override : 0;
    s.record_spanning_forest =
        spanning && (kind == AlgorithmKind::kR || kind == AlgorithmKind::kRA);
    s.skip_shortcut_in_round = skip_round;
    try {
      s.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return s;
  }
};

RunHooks hooks_for(const std::string& preset) {
  if (preset == "all") return RunHooks::all();
  if (preset == "none") return RunHooks::none();
  return RunHooks{};
}

struct Attempt {
  std::optional<RunTrace> trace;
  std::string status = "ok";
  std::string detail;
};

Attempt execute(const AlgorithmSpec& spec, const Graph& g, const RunHooks& hooks) {
  Attempt a;
  try {
    a.trace = run(spec, g, hooks);
    if (auto bad = verify_final(a.trace->final_forest, g, is_min_labeling(spec.kind))) {
      a.status = "verify";
      a.detail = "vertex " + std::to_string(bad->vertex) + ": " + bad->reason;
    }
  } catch (const HookViolation& e) {
    a.status = "hook:" + e.hook();
    a.detail = e.what();
  } catch (const RoundLimitExceeded& e) {
    a.status = "round-limit";
    a.detail = e.what();
  }
  return a;
}

SummaryRow row_of(const Attempt& a, const BuiltGraph& b, const AlgorithmSpec& spec) {
  if (a.trace) return summarize(*a.trace, b.recipe, b.diameter, a.status);
  SummaryRow r;
  r.graph = b.recipe;
  r.algorithm = spec.describe();
  r.n = b.graph.n();
  r.m = b.graph.m();
  r.d = b.diameter;
  r.status = a.status;
  return r;
}

std::string slug(std::string s) {
  for (char& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-') c = '_';
  }
  return s;
}

// ---- run

struct RunCmd {
  Source src;
  std::string alg;
  SpecFlags flags;
  std::string hooks = "default";
  std::string json, csv, dir;
  bool exact_diameter = false;
  bool quiet = false;

  int operator()() const {
    const BuiltGraph b = src.load();
    const AlgorithmKind kind = parse_algorithm(alg);
    const AlgorithmSpec spec = flags.make(kind, flags.seed);
    const Attempt a = execute(spec, b.graph, hooks_for(hooks));
    SummaryRow row = row_of(a, b, spec);
    if (exact_diameter && !row.d) row.d = diameter(b.graph);

    const fs::path base = out_dir(dir);
    std::string json_file = json, csv_file = csv;
    if (!base.empty()) {
      const std::string stem = "run-" + slug(row.algorithm) + "-" + slug(b.recipe);
      if (json_file.empty()) json_file = stem + ".json";
      if (csv_file.empty()) csv_file = stem + ".csv";
    }
    if (!json_file.empty() && a.trace) {
      write_atomically(resolve(base, json_file), trace_to_json(*a.trace, 2) + "\n");
    }
    if (!csv_file.empty()) write_atomically(resolve(base, csv_file), csv_header() + csv_row(row));
    if (!quiet) std::cout << csv_header() << csv_row(row);
    if (a.status != "ok") {
      std::cerr << "cclab: " << a.status << ": " << a.detail << "\n";
      return kCheckFailed;
    }
    return kOk;
  }
};

// ---- sweep

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  std::vector<std::uint64_t> out;
  const std::string pattern = text.find("..") != std::string::npos ? "{" + text + "}" : text;
  for (const std::string& s : expand_braces(pattern)) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        out.push_back(std::stoull(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw UsageError("bad seed list '" + text + "'");
      }
    }
  }
  return out;
}

struct SweepCmd {
  std::vector<std::string> algs;
  std::vector<std::string> recipes;
  std::string seeds = "0";
  SpecFlags flags;
  std::string hooks = "default";
  std::string csv, dir;
  unsigned jobs = 1;

  int operator()() const {
    std::vector<AlgorithmKind> kinds;
    for (const std::string& a : algs) {
      if (a == "all") {
        kinds.insert(kinds.end(), kAllAlgorithms.begin(), kAllAlgorithms.end());
      } else {
        kinds.push_back(parse_algorithm(a));
      }
    }
    std::vector<std::string> expanded;
    for (const std::string& r : recipes) {
      for (std::string& e : expand_braces(r)) expanded.push_back(std::move(e));
    }
    const std::vector<std::uint64_t> seed_list = parse_seed_range(seeds);

    struct Job {
      std::size_t graph;
      AlgorithmSpec spec;
    };
    std::vector<Job> jobs_list;
    for (std::size_t gi = 0; gi < expanded.size(); ++gi) {
      for (AlgorithmKind k : kinds) {
        if (uses_policy(k)) {
          for (std::uint64_t s : seed_list) jobs_list.push_back({gi, flags.make(k, s)});
        } else {
          jobs_list.push_back({gi, flags.make(k, 0)});
        }
      }
    }

    // Graphs are built lazily and shared between the runs that need them.
    std::vector<std::optional<BuiltGraph>> graphs(expanded.size());
    std::vector<std::string> build_errors(expanded.size());
    std::vector<std::once_flag> once(expanded.size());
    auto graph = [&](std::size_t gi) -> const BuiltGraph* {
      std::call_once(once[gi], [&] {
        try {
          graphs[gi] = build_recipe(expanded[gi]);
        } catch (const std::exception& e) {
          build_errors[gi] = e.what();
        }
      });
      return graphs[gi] ? &*graphs[gi] : nullptr;
    };

    std::vector<std::string> rows(jobs_list.size());
    std::vector<bool> failed(jobs_list.size(), false);
    const RunHooks h = hooks_for(hooks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < jobs_list.size();) {
        const Job& j = jobs_list[i];
        const BuiltGraph* b = graph(j.graph);
        if (!b) {
          SummaryRow r;
          r.graph = expanded[j.graph];
          r.algorithm = j.spec.describe();
          r.status = "skipped";
          rows[i] = csv_row(r);
          continue;
        }
        const Attempt a = execute(j.spec, b->graph, h);
        rows[i] = csv_row(row_of(a, *b, j.spec));
        failed[i] = a.status != "ok";
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::string text = csv_header();
    std::size_t bad = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      text += rows[i];
      bad += failed[i];
    }
    const fs::path base = out_dir(dir);
    if (!csv.empty()) {
      write_atomically(resolve(base, csv), text);
    } else if (!base.empty()) {
      write_atomically(base / "sweep.csv", text);
    } else {
      std::cout << text;
    }
    for (std::size_t gi = 0; gi < expanded.size(); ++gi) {
      if (!build_errors[gi].empty()) {
        std::cerr << "cclab: skipped " << expanded[gi] << ": " << build_errors[gi] << "\n";
      }
    }
    if (bad) {
      std::cerr << "cclab: " << bad << " of " << rows.size() << " runs failed\n";
      return kCheckFailed;
    }
    return kOk;
  }
};

// ---- verify

struct VerifyCmd {
  std::vector<std::string> only;
  std::string suite = "full";
  std::string fault;
  std::uint32_t fault_round = 3;
  unsigned jobs = 1;
  Vertex max_n = 13;
  std::uint64_t budget = 20'000'000;
  std::string json, dir;

  int operator()() const {
    BatteryOptions o;
    o.suite = suite == "quick" ? SuiteSize::kQuick : SuiteSize::kFull;
    for (const std::string& s : only) {
      std::stringstream ss(s);
      std::string part;
      while (std::getline(ss, part, ',')) {
        if (!part.empty()) o.only.insert(part);
      }
    }
    if (!fault.empty()) o.skip_shortcut = fault_round;
    o.jobs = jobs;
    o.divergence_max_n = max_n;
    o.divergence_budget = budget;
    o.on_result = [](const CheckResult& r) {
      std::cout << std::left << std::setw(12) << r.name << (r.passed ? "PASS  " : "FAIL  ")
                << std::right << std::fixed << std::setprecision(1) << std::setw(7)
                << r.seconds << "s  " << r.summary << "\n";
      for (const std::string& d : r.details) std::cout << "    " << d << "\n";
      std::cout.flush();
    };
    std::vector<CheckResult> results;
    try {
      results = run_battery(o);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    bool ok = true;
    nlohmann::json doc = nlohmann::json::array();
    for (const CheckResult& r : results) {
      ok = ok && r.passed;
      doc.push_back({{"name", r.name},
                     {"passed", r.passed},
                     {"cases", r.cases},
                     {"failures", r.failures},
                     {"summary", r.summary},
                     {"details", r.details}});
    }
    if (!json.empty()) write_atomically(resolve(out_dir(dir), json), doc.dump(2) + "\n");
    std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
    return ok ? kOk : kCheckFailed;
  }
};

// ---- generate

struct GenerateCmd {
  std::string recipe;
  std::string out, dir;

  int operator()() const {
    const BuiltGraph b = build_recipe(recipe);
    const std::vector<std::string> header = {"cclab generate recipe=" + recipe};
    const std::string text = to_edge_list(b.graph, header);
    if (out.empty()) {
      std::cout << text;
    } else {
      write_atomically(resolve(out_dir(dir), out), text);
    }
    return kOk;
  }
};

void add_source(CLI::App* app, Source& src) {
  auto* r = app->add_option("--recipe", src.recipe, "Graph recipe, e.g. path:1025 or gnp:200,0.03,9");
  auto* f = app->add_option("--file", src.file, "Edge-list file");
  r->excludes(f);
  f->excludes(r);
  app->callback([app, r, f] {
    if (r->count() + f->count() != 1) {
      throw CLI::ValidationError("exactly one of --recipe or --file is required");
    }
    (void)app;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cclab: concurrent labeling connected-components simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cclab 0.1.0");

  RunCmd run_cmd;
  auto* run_app = app.add_subcommand("run", "Run one algorithm on one graph");
  add_source(run_app, run_cmd.src);
  run_app->add_option("--alg", run_cmd.alg, "Algorithm: P E A R RA S SA SRT SV AS REIF")->required();
  run_cmd.flags.add(run_app);
  run_app->add_option("--hooks", run_cmd.hooks, "Hook preset")
      ->check(CLI::IsMember({"default", "all", "none"}));
  run_app->add_option("--json", run_cmd.json, "JSON trace output");
  run_app->add_option("--csv", run_cmd.csv, "CSV summary output");
  run_app->add_option("--out-dir", run_cmd.dir, "Output directory (default $CCLAB_OUT_DIR)");
  run_app->add_flag("--diameter", run_cmd.exact_diameter, "Compute the exact diameter column");
  run_app->add_flag("-q,--quiet", run_cmd.quiet, "Do not print the summary");

  SweepCmd sweep_cmd;
  auto* sweep_app = app.add_subcommand("sweep", "Run algorithms over a grid of recipes");
  sweep_app->add_option("--alg", sweep_cmd.algs, "Algorithms, or 'all'")
      ->required()
      ->delimiter(',');
  sweep_app->add_option("--recipe", sweep_cmd.recipes, "Recipes with brace expansion")
      ->required();
  sweep_app->add_option("--seeds", sweep_cmd.seeds, "Policy seeds, e.g. 1..5 or 1,2,7");
  sweep_cmd.flags.add(sweep_app);
  sweep_app->add_option("--hooks", sweep_cmd.hooks, "Hook preset")
      ->check(CLI::IsMember({"default", "all", "none"}));
  sweep_app->add_option("--csv", sweep_cmd.csv, "CSV output");
  sweep_app->add_option("--out-dir", sweep_cmd.dir, "Output directory (default $CCLAB_OUT_DIR)");
  sweep_app->add_option("-j,--jobs", sweep_cmd.jobs, "Worker threads")->check(CLI::PositiveNumber);

  VerifyCmd verify_cmd;
  auto* verify_app = app.add_subcommand("verify", "Run the verification battery");
  verify_app->add_option("--only", verify_cmd.only, "Checks to run (repeat or comma-separate)");
  verify_app->add_option("--suite", verify_cmd.suite, "Suite size")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_app->add_option("--inject-fault", verify_cmd.fault, "Fault to inject")
      ->check(CLI::IsMember({"skip-shortcut"}));
  verify_app->add_option("--fault-round", verify_cmd.fault_round, "Round of the injected fault")
      ->check(CLI::PositiveNumber);
  verify_app->add_option("-j,--jobs", verify_cmd.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_app->add_option("--divergence-max-n", verify_cmd.max_n, "Largest witness size searched")
      ->check(CLI::Range(2, 13));
  verify_app->add_option("--divergence-budget", verify_cmd.budget, "Graphs examined at most");
  verify_app->add_option("--json", verify_cmd.json, "JSON report output");
  verify_app->add_option("--out-dir", verify_cmd.dir, "Output directory (default $CCLAB_OUT_DIR)");

  GenerateCmd gen_cmd;
  auto* gen_app = app.add_subcommand("generate", "Write a recipe graph as an edge list");
  gen_app->add_option("--recipe", gen_cmd.recipe, "Graph recipe")->required();
  gen_app->add_option("--out", gen_cmd.out, "Output file (default stdout)");
  gen_app->add_option("--out-dir", gen_cmd.dir, "Output directory (default $CCLAB_OUT_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_app) return run_cmd();
    if (*sweep_app) return sweep_cmd();
    if (*verify_app) return verify_cmd();
    if (*gen_app) return gen_cmd();
  } catch (const UsageError& e) {
    std::cerr << "cclab: " << e.what() << "\n";
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "cclab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cclab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "cclab: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
