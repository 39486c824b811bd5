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

#include <optional>
#include <string>
#include <variant>

#include "reachpipe/reach.hpp"
#include "reachpipe/sim.hpp"

namespace reachpipe {

/// `var` reaches fraction * reference no later than `deadline` (from t = 0).
struct RiseTime {
  std::string var;
  double reference = 0.0;
  double fraction = 0.9;
  double deadline = 0.0;
};

/// `var` enters [(1-eps) ref, (1+eps) ref] and stays there until the end,
/// entering no later than `from_time` when one is given.
struct SettlingBand {
  std::string var;
  double reference = 0.0;
  double epsilon = 0.05;
  std::optional<double> from_time;
};

/// lo <= var <= hi throughout [t1, t2].
struct SafetyBox {
  std::string var;
  double lo = 0.0;
  double hi = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
};

using Requirement = std::variant<RiseTime, SettlingBand, SafetyBox>;

/// Throws Error when a requirement violates its parameter ranges.
void validate(const Requirement& r);

std::string describe(const Requirement& r);
const std::string& requirement_var(const Requirement& r);

enum class Outcome { kVerified, kFalsified, kUnknown };

std::string to_string(Outcome o);

/// Time and bounds that justify a verdict. For Unknown, the segment or
/// sample that blocked a decision.
struct Witness {
  double time = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

struct Verdict {
  Outcome outcome = Outcome::kUnknown;
  Witness witness;
  std::string explanation;
};

Verdict check_rise_time_flowpipe(const Flowpipe& fp, const RiseTime& r);
Verdict check_settling_flowpipe(const Flowpipe& fp, const SettlingBand& r);
Verdict check_safety_flowpipe(const Flowpipe& fp, const SafetyBox& r);
Verdict check_flowpipe(const Flowpipe& fp, const Requirement& r);

/// Exact evaluation on samples; never Unknown.
Verdict check_on_trajectory(const Trajectory& traj, const Requirement& r);

}  // namespace reachpipe
