// Copyright 2026 The reachpipe Authors
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

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reachpipe/model.hpp"
#include "reachpipe/monitor.hpp"
#include "reachpipe/parser.hpp"
#include "reachpipe/reach.hpp"
#include "reachpipe/sim.hpp"

namespace reachpipe::cli {

inline constexpr int kSchemaVersion = 1;

struct ReportVerdict {
  std::string requirement;  // human-readable, see describe()
  std::string kind;         // rise_time | settling | safety
  std::string var;
  Verdict verdict;
};

struct FlowpipeSummary {
  std::size_t steps = 0;
  double delta = 0.0;
  double bloat = 0.0;
  std::vector<std::pair<std::string, Interval>> final_hull;
};

struct TrajectorySummary {
  std::size_t samples = 0;
  double h = 0.0;
  std::vector<std::pair<std::string, double>> initial;
  std::vector<std::pair<std::string, double>> final;
};

/// Machine-readable record of one command invocation.
struct RunReport {
  std::string tool_version;
  std::string command;
  Config config;  // effective values after flag overrides
  std::vector<std::string> variables;
  std::optional<AffineDynamics> dynamics;
  std::vector<ReportVerdict> verdicts;
  std::optional<FlowpipeSummary> flowpipe;
  std::optional<TrajectorySummary> trajectory;
  /// Wall-clock milliseconds per phase; omitted when empty.
  std::vector<std::pair<std::string, double>> timing_ms;
};

std::string to_json(const RunReport& report);

/// `step,t_lo,t_hi` then `<var>_lo,<var>_hi` per variable; 17 significant digits.
std::string flowpipe_csv(const Flowpipe& fp, const std::vector<std::string>& vars);

std::string flowpipe_json(const Flowpipe& fp, const std::vector<std::string>& vars);

/// `t,<var...>`, one row per sample; 17 significant digits.
std::string trajectory_csv(const Trajectory& traj);

/// Writes through a temporary sibling file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace reachpipe::cli
