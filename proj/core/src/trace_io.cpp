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


#include "cclab/trace_io.hpp"

#include <json.hpp>
#include <sstream>

namespace cclab {

using nlohmann::json;

namespace {

json tree_json(const TreePotential& t) {
  json j = {{"root", t.root},   {"size", t.size},     {"height", t.height},
            {"flat", t.flat},   {"active", t.active}, {"phi", t.phi}};
  if (t.previous) j["previous_phi"] = *t.previous;
  return j;
}

json round_json(const RoundRecord& r) {
  json j = {{"round", r.round},
            {"waves", r.cost.waves},
            {"messages", r.cost.messages},
            {"changed", r.changed},
            {"shortcut_iterations", r.shortcut_iterations},
            {"effective_shortcuts", r.effective_shortcuts},
            {"tree_count", r.tree_count},
            {"active_trees", r.active_trees},
            {"colors", {{"green", r.green}, {"red", r.red}}}};
  j["potential_total"] = r.potential ? json(*r.potential) : json(nullptr);
  if (!r.coins.empty()) {
    std::string heads;
    for (std::size_t v = 1; v < r.coins.size(); ++v) heads.push_back(r.coins[v] ? 'H' : 'T');
    j["coins"] = heads;
  }
  if (!r.snapshots.empty()) j["snapshots"] = r.snapshots;
  if (!r.forest.empty()) j["forest"] = r.forest;
  if (!r.trees.empty()) {
    json trees = json::array();
    for (const TreePotential& t : r.trees) trees.push_back(tree_json(t));
    j["trees"] = std::move(trees);
  }
  return j;
}

}  // namespace

std::string trace_to_json(const RunTrace& t, int indent) {
  const AlgorithmSpec& s = t.spec;
  json options = {{"shortcuts_per_round", s.shortcuts_per_round},
                  {"loop_mode", s.loop_mode == LoopMode::kRetainLoop ? "retain" : "delete"},
                  {"strengthened_deletion", s.strengthened_deletion},
                  {"record_spanning_forest", s.record_spanning_forest}};
  if (s.skip_shortcut_in_round) options["skip_shortcut_in_round"] = *s.skip_shortcut_in_round;
  json j;
  j["header"] = {{"algorithm", std::string(to_string(s.kind))},
                 {"n", t.n},
                 {"m", t.m},
                 {"seed", s.policy_seed},
                 {"options", std::move(options)}};
  json rounds = json::array();
  for (const RoundRecord& r : t.rounds) rounds.push_back(round_json(r));
  j["rounds"] = std::move(rounds);
  j["totals"] = {{"rounds", t.round_count()},
                 {"waves", t.total.waves},
                 {"messages", t.total.messages},
                 {"shortcut_iterations", t.shortcut_iterations},
                 {"effective_shortcuts", t.effective_shortcuts}};
  j["final_forest"] = t.final_forest.to_list();
  if (t.spanning_forest) j["spanning_forest"] = *t.spanning_forest;
  if (t.passivity_reconstructed) j["passivity_reconstructed"] = true;
  return j.dump(indent);
}

SummaryRow summarize(const RunTrace& t, std::string graph, std::optional<std::uint32_t> d,
                     std::string status) {
  SummaryRow row;
  row.graph = std::move(graph);
  row.algorithm = t.spec.describe();
  row.n = t.n;
  row.m = t.m;
  row.d = d;
  row.rounds = t.round_count();
  row.waves = t.total.waves;
  row.messages = t.total.messages;
  row.shortcuts = t.shortcut_iterations;
  row.status = std::move(status);
  return row;
}

std::string csv_header() {
  return std::string(kCsvVersion) +
         "\ngraph,algorithm,n,m,d,rounds,waves,messages,shortcuts,status\n";
}

namespace {

std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string csv_row(const SummaryRow& r) {
  std::ostringstream out;
  out << field(r.graph) << ',' << field(r.algorithm) << ',' << r.n << ',' << r.m << ',';
  if (r.d) out << *r.d;
  out << ',' << r.rounds << ',' << r.waves << ',' << r.messages << ',' << r.shortcuts << ','
      << field(r.status) << '\n';
  return out.str();
}

}  // namespace cclab
