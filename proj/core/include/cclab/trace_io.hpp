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


#ifndef CCLAB_TRACE_IO_HPP_
#define CCLAB_TRACE_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "cclab/drivers.hpp"

namespace cclab {

// JSON trace: {"header": {algorithm, n, m, seed, options}, "rounds": [...],
// "totals": {...}, "final_forest": [...], ...}. Forests are 1-indexed
// parent lists. indent < 0 writes a single line.
std::string trace_to_json(const RunTrace& trace, int indent = -1);

inline constexpr std::string_view kCsvVersion = "# cclab summary v1";

struct SummaryRow {
  std::string graph;
  std::string algorithm;
  Vertex n = 0;
  std::size_t m = 0;
  std::optional<std::uint32_t> d;
  std::uint32_t rounds = 0;
  std::uint64_t waves = 0;
  std::uint64_t messages = 0;
  std::uint64_t shortcuts = 0;
  std::string status = "ok";
};

SummaryRow summarize(const RunTrace& trace, std::string graph, std::optional<std::uint32_t> d,
                     std::string status = "ok");

// Version comment line plus the column names, newline-terminated.
std::string csv_header();
std::string csv_row(const SummaryRow& row);

}  // namespace cclab

#endif  // CCLAB_TRACE_IO_HPP_
