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

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reachpipe/expr.hpp"
#include "reachpipe/model.hpp"
#include "reachpipe/sets.hpp"

namespace reachpipe {

/// Grammar: expr := term (('+'|'-') term)*, term := number | ident |
/// number '*' ident | ident '*' number. Parentheses and division by
/// literals are tolerated. Repeated variables accumulate.
LinearExpression parse_linear_expr(std::string_view text);

// ---- initial sets ----

/// Per-variable bounds from an `initially` conjunction. Strict inequalities
/// are read as their closure.
class InitialConstraints {
 public:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  void tighten(const std::string& var, double lo, double hi);

  bool has(const std::string& var) const { return bounds_.count(var) != 0; }
  Interval bounds(const std::string& var) const;
  /// Value when the variable is pinned to a single point.
  std::optional<double> fixed_value(const std::string& var) const;
  /// Names in order of first appearance.
  const std::vector<std::string>& names() const { return names_; }

  /// Box over `order`; throws ConfigError when a variable is missing or
  /// unbounded on either side.
  Box to_box(const std::vector<std::string>& order) const;

 private:
  std::map<std::string, Interval> bounds_;
  std::vector<std::string> names_;
};

/// Atoms joined by '&': `num relop ident`, `ident relop num`, `ident == num`,
/// or a chain `num <= ident <= num`. Relops: <=, >=, ==, <, >.
InitialConstraints parse_initial(std::string_view text);

/// Inverse of parse_initial for a box: "lo<=v & v<=hi" or "v==c" per variable.
std::string render_initial(const std::vector<std::string>& names, const Box& box);

// ---- model files ----

struct ModelParseOptions {
  /// Reject elements outside the supported subset instead of skipping them.
  bool strict = false;
};

/// SpaceEx-compatible XML subset: sspaceex / component / param / location
/// (flow, invariant) / bind / map. Layout attributes and notes are ignored,
/// namespaces are dropped.
ModelDocument parse_model(const std::string& xml_text, const ModelParseOptions& opts = {});

/// Serializes a document in the same subset; parse_model(write_model(d)) == d.
std::string write_model(const ModelDocument& doc);

// ---- configuration ----

enum class OutputFormat { kCsv, kJson, kSvg };

std::string to_string(OutputFormat f);

/// One `check.*` line from the configuration.
struct RequirementSpec {
  enum class Kind { kRiseTime, kSettling, kSafety };
  Kind kind = Kind::kRiseTime;
  std::string var;
  /// rise_time: fraction, deadline. settling: epsilon [, from_time].
  /// safety: lo, hi, t1, t2.
  std::vector<double> args;
  std::string text;  // original value, for reports

  friend bool operator==(const RequirementSpec&, const RequirementSpec&) = default;
};

struct Config {
  std::string system;
  std::string initially;
  std::string scenario = "stc";
  double sampling_time = 0.05;
  double time_horizon = 0.0;
  std::vector<std::string> output_variables;
  double max_order = 20.0;
  OutputFormat output_format = OutputFormat::kCsv;
  /// Recorded only; the fixed-step engine does not use it.
  std::optional<double> accuracy;
  /// Name of a model constant or a number; used as the reference value of
  /// rise-time and settling checks.
  std::string reference = "v_ref";
  std::vector<RequirementSpec> checks;
  std::vector<std::string> warnings;

  friend bool operator==(const Config&, const Config&) = default;
};

/// Line-oriented `key = value` with '#' comments. Throws ConfigError.
Config parse_config(std::string_view cfg_text);

/// Renders every recognised key, so parse_config(write_config(c)) equals c
/// up to warnings about keys that were dropped.
std::string write_config(const Config& cfg);

}  // namespace reachpipe
