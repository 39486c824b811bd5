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

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reachpipe/expr.hpp"
#include "reachpipe/matrix.hpp"

namespace reachpipe {

/// Vehicle longitudinal plant m v' + b v = u.
struct PlantParams {
  double mass = 1000.0;  // kg
  double drag = 50.0;    // N s/m
};

/// PI speed controller u = kp (v_ref - v) + ki q with q' = v_ref - v.
struct ControllerParams {
  double kp = 800.0;     // N per m/s
  double ki = 40.0;      // N per m
  double v_ref = 15.0;   // m/s
};

/// x' = a x + b_vec over the ordered state names.
struct AffineDynamics {
  std::vector<std::string> var_names;
  Matrix a;
  Matrix b_vec;

  AffineDynamics() = default;
  AffineDynamics(std::vector<std::string> names, Matrix a, Matrix b_vec);

  std::size_t dimension() const { return var_names.size(); }
  /// Index of `name`, throws Error if absent.
  std::size_t index_of(const std::string& name) const;
};

// ---- component networks ----

struct Param {
  enum class Dynamics { kAny, kConst };

  std::string name;
  std::string type = "real";
  Dynamics dynamics = Dynamics::kAny;
  bool local = false;

  friend bool operator==(const Param&, const Param&) = default;
};

/// Single-location continuous component. `flow` holds v' = expr, `algebraic`
/// holds output equations y == expr (read from the location invariant).
struct BaseComponent {
  std::string id;
  std::vector<Param> params;
  std::vector<std::pair<std::string, Expr>> flow;
  std::vector<std::pair<std::string, Expr>> algebraic;

  const Param* find_param(const std::string& name) const;

  friend bool operator==(const BaseComponent&, const BaseComponent&) = default;
};

/// Right-hand side of a bind map: a parent parameter or a literal.
using BindTarget = std::variant<std::string, double>;

struct Bind {
  std::string component;  // child component id
  std::string instance;   // the "as" name
  std::vector<std::pair<std::string, BindTarget>> map;

  friend bool operator==(const Bind&, const Bind&) = default;
};

struct NetworkComponent {
  std::string id;
  std::vector<Param> params;
  std::vector<Bind> binds;

  const Param* find_param(const std::string& name) const;

  friend bool operator==(const NetworkComponent&, const NetworkComponent&) = default;
};

using Component = std::variant<BaseComponent, NetworkComponent>;

const std::string& component_id(const Component& c);
const std::vector<Param>& component_params(const Component& c);

struct ModelDocument {
  std::string version = "0.2";
  std::vector<Component> components;

  const Component* find(const std::string& id) const;
  /// Component that no bind references; the last such one when several exist.
  std::string default_root() const;

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

/// Checks unique ids, declared flow/map names, existing children, map
/// coverage and acyclicity. Throws ModelError.
void validate(const ModelDocument& doc);

struct FlatModel {
  /// State variable -> derivative, over root-level names and symbolic constants.
  std::map<std::string, LinearExpression> flows;
  /// Root variables in declaration order (states first seen in root params).
  std::vector<std::string> state_order;
  /// Constant parameters: numeric when bound to a literal, nullopt if symbolic.
  std::map<std::string, std::optional<double>> constants;
};

/**
 * Inlines the network under `root_id` into one set of flows.
 *
 * Child parameters are renamed through bind maps; literals are substituted;
 * local parameters of an instance get the qualified name `instance.param`.
 * Output equations of gain/sum blocks are substituted into the flows, so the
 * result references only states and symbolic constants.
 */
FlatModel flatten(const ModelDocument& doc, const std::string& root_id);

/**
 * Assembles a[i][j] = coefficient of order[j] in the flow of order[i] and
 * b_vec[i] = constant + sum of coefficient * const_values. A state with no
 * flow has zero derivative. Throws ModelError naming any unknown reference.
 */
AffineDynamics build_affine(const std::map<std::string, LinearExpression>& flows,
                            const std::map<std::string, double>& const_values,
                            const std::vector<std::string>& order);

/// States needed to evaluate the flows of `seeds`, in `declared` order.
std::vector<std::string> dependency_closure(const std::map<std::string, LinearExpression>& flows,
                                            const std::vector<std::string>& seeds,
                                            const std::vector<std::string>& declared);

/// Default state selection: states that feed back into some flow, closed
/// under dependencies. Falls back to every state with a flow.
std::vector<std::string> feedback_states(const FlatModel& flat);

/// Closed loop over (v, q) with q' = v_ref - v.
AffineDynamics closed_loop_cruise(const PlantParams& p, const ControllerParams& c);

/// u = kp (v_ref - v) + ki q, in newtons.
double control_input(const ControllerParams& c, double v, double q);

}  // namespace reachpipe
