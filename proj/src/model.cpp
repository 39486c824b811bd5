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

#include "reachpipe/model.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "reachpipe/error.hpp"

namespace reachpipe {

AffineDynamics::AffineDynamics(std::vector<std::string> names, Matrix a_in, Matrix b_in)
    : var_names(std::move(names)), a(std::move(a_in)), b_vec(std::move(b_in)) {
  const std::size_t n = var_names.size();
  if (a.rows() != n || a.cols() != n) {
    throw DimensionError("AffineDynamics: a is " + a.shape_string() + " for " +
                         std::to_string(n) + " variables");
  }
  if (b_vec.rows() != n || b_vec.cols() != 1) {
    throw DimensionError("AffineDynamics: b_vec is " + b_vec.shape_string() + " for " +
                         std::to_string(n) + " variables");
  }
  std::set<std::string> seen;
  for (const auto& v : var_names) {
    if (!seen.insert(v).second) throw Error("AffineDynamics: duplicate variable '" + v + "'");
  }
}

std::size_t AffineDynamics::index_of(const std::string& name) const {
  auto it = std::find(var_names.begin(), var_names.end(), name);
  if (it == var_names.end()) throw Error("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - var_names.begin());
}

namespace {

template <typename C>
const Param* find_in(const C& c, const std::string& name) {
  for (const auto& p : c.params) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace

const Param* BaseComponent::find_param(const std::string& name) const {
  return find_in(*this, name);
}

const Param* NetworkComponent::find_param(const std::string& name) const {
  return find_in(*this, name);
}

const std::string& component_id(const Component& c) {
  return std::visit([](const auto& x) -> const std::string& { return x.id; }, c);
}

const std::vector<Param>& component_params(const Component& c) {
  return std::visit([](const auto& x) -> const std::vector<Param>& { return x.params; }, c);
}

const Component* ModelDocument::find(const std::string& id) const {
  for (const auto& c : components) {
    if (component_id(c) == id) return &c;
  }
  return nullptr;
}

std::string ModelDocument::default_root() const {
  std::set<std::string> referenced;
  for (const auto& c : components) {
    if (const auto* net = std::get_if<NetworkComponent>(&c)) {
      for (const auto& b : net->binds) referenced.insert(b.component);
    }
  }
  std::string root;
  for (const auto& c : components) {
    if (!referenced.count(component_id(c))) root = component_id(c);
  }
  if (root.empty()) throw ModelError(ModelError::Kind::kBindCycle, "model has no root component");
  return root;
}

void validate(const ModelDocument& doc) {
  using K = ModelError::Kind;
  std::set<std::string> ids;
  for (const auto& c : doc.components) {
    const auto& id = component_id(c);
    if (!ids.insert(id).second) throw ModelError(K::kDuplicateId, "duplicate component id '" + id + "'");
    std::set<std::string> names;
    for (const auto& p : component_params(c)) {
      if (!names.insert(p.name).second) {
        throw ModelError(K::kDuplicateId,
                         "component '" + id + "': duplicate param '" + p.name + "'");
      }
    }
  }

  for (const auto& c : doc.components) {
    if (const auto* base = std::get_if<BaseComponent>(&c)) {
      auto check_eqs = [&](const auto& eqs, const char* what) {
        for (const auto& [var, rhs] : eqs) {
          const Param* p = base->find_param(var);
          if (!p) {
            throw ModelError(K::kUndeclaredParam, "component '" + base->id + "': " + what +
                                                      " for undeclared param '" + var + "'");
          }
          if (p->dynamics == Param::Dynamics::kConst) {
            throw ModelError(K::kUndeclaredParam, "component '" + base->id + "': " + what +
                                                      " assigns const param '" + var + "'");
          }
          for (const auto& name : identifiers(rhs)) {
            if (!base->find_param(name)) {
              throw ModelError(K::kUndeclaredParam, "component '" + base->id + "': " + what +
                                                        " of '" + var +
                                                        "' references undeclared '" + name + "'");
            }
          }
        }
      };
      check_eqs(base->flow, "flow");
      check_eqs(base->algebraic, "equation");
      continue;
    }
    const auto& net = std::get<NetworkComponent>(c);
    for (const auto& bind : net.binds) {
      const Component* child = doc.find(bind.component);
      if (!child) {
        throw ModelError(K::kUnknownComponent, "network '" + net.id + "' binds unknown component '" +
                                                   bind.component + "'");
      }
      std::set<std::string> mapped;
      for (const auto& [key, target] : bind.map) {
        const auto& cparams = component_params(*child);
        if (std::none_of(cparams.begin(), cparams.end(),
                         [&](const Param& p) { return p.name == key; })) {
          throw ModelError(K::kUndeclaredParam, "bind '" + bind.instance + "' in '" + net.id +
                                                    "' maps unknown child param '" + key + "'");
        }
        if (const auto* parent = std::get_if<std::string>(&target)) {
          if (!net.find_param(*parent)) {
            throw ModelError(K::kUndeclaredParam, "bind '" + bind.instance + "' in '" + net.id +
                                                      "' maps to undeclared param '" + *parent +
                                                      "'");
          }
        }
        mapped.insert(key);
      }
      for (const auto& p : component_params(*child)) {
        if (!p.local && !mapped.count(p.name)) {
          throw ModelError(K::kUnboundParameter, "bind '" + bind.instance + "' in '" + net.id +
                                                     "' leaves param '" + p.name + "' of '" +
                                                     bind.component + "' unbound");
        }
      }
    }
  }

  // Bind cycles: depth-first search with an on-stack marker.
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  std::function<void(const std::string&)> visit = [&](const std::string& id) {
    int& s = state[id];
    if (s == 1) throw ModelError(K::kBindCycle, "bind cycle through component '" + id + "'");
    if (s == 2) return;
    s = 1;
    if (const auto* net = std::get_if<NetworkComponent>(doc.find(id))) {
      for (const auto& b : net->binds) visit(b.component);
    }
    state[id] = 2;
  };
  for (const auto& c : doc.components) visit(component_id(c));
}

namespace {

using Resolved = BindTarget;  // flattened name or literal

struct Collector {
  const ModelDocument& doc;
  FlatModel out;
  std::map<std::string, LinearExpression> algebraic;
  std::vector<std::string> flow_order;

  Expr resolve_ident(const std::map<std::string, Resolved>& binding, const std::string& name) {
    const Resolved& r = binding.at(name);
    if (const auto* lit = std::get_if<double>(&r)) return Expr::number(*lit);
    return Expr::ident(std::get<std::string>(r));
  }

  void record_constant(const std::string& key, const std::string& qualified, double value) {
    auto it = out.constants.find(key);
    if (it == out.constants.end()) {
      out.constants[key] = value;
    } else if (!it->second || *it->second != value) {
      out.constants[qualified] = value;
    }
  }

  void drive(const std::string& instance, const std::map<std::string, Resolved>& binding,
             const std::string& var, const Expr& rhs, bool is_flow) {
    const Resolved& target = binding.at(var);
    if (std::holds_alternative<double>(target)) {
      throw ModelError(ModelError::Kind::kDuplicateDriver,
                       "instance '" + instance + "' assigns '" + var + "', which is bound to a literal");
    }
    const std::string& name = std::get<std::string>(target);
    if (out.flows.count(name) || algebraic.count(name)) {
      throw ModelError(ModelError::Kind::kDuplicateDriver,
                       "variable '" + name + "' is driven by more than one component");
    }
    LinearExpression lin = linearize(
        substitute(rhs, [&](const std::string& n) { return resolve_ident(binding, n); }));
    if (is_flow) {
      out.flows.emplace(name, std::move(lin));
      flow_order.push_back(name);
    } else {
      algebraic.emplace(name, std::move(lin));
    }
  }

  void instantiate(const std::string& id, const std::string& prefix,
                   const std::map<std::string, Resolved>& binding) {
    const Component* comp = doc.find(id);
    const std::string instance = prefix.empty() ? id : prefix.substr(0, prefix.size() - 1);
    if (const auto* base = std::get_if<BaseComponent>(comp)) {
      for (const auto& [var, rhs] : base->flow) drive(instance, binding, var, rhs, true);
      for (const auto& [var, rhs] : base->algebraic) drive(instance, binding, var, rhs, false);
      return;
    }
    const auto& net = std::get<NetworkComponent>(*comp);
    for (const auto& bind : net.binds) {
      const Component* child = doc.find(bind.component);
      const std::string child_prefix = prefix + bind.instance + ".";
      std::map<std::string, Resolved> child_binding;
      for (const auto& [key, target] : bind.map) {
        Resolved r = std::holds_alternative<double>(target)
                         ? target
                         : binding.at(std::get<std::string>(target));
        child_binding[key] = r;
        if (const auto* lit = std::get_if<double>(&r)) {
          const Param* p = nullptr;
          for (const auto& cp : component_params(*child)) {
            if (cp.name == key) p = &cp;
          }
          if (p && p->dynamics == Param::Dynamics::kConst) {
            record_constant(key, child_prefix + key, *lit);
          }
        }
      }
      for (const auto& p : component_params(*child)) {
        if (child_binding.count(p.name)) continue;
        // validate() guarantees only locals reach this point.
        child_binding[p.name] = child_prefix + p.name;
      }
      instantiate(bind.component, child_prefix, child_binding);
    }
  }

  LinearExpression eliminate(const std::string& name, std::map<std::string, int>& state,
                             std::map<std::string, LinearExpression>& done) {
    if (auto it = done.find(name); it != done.end()) return it->second;
    int& s = state[name];
    if (s == 1) {
      throw ModelError(ModelError::Kind::kAlgebraicLoop,
                       "algebraic loop through '" + name + "'");
    }
    s = 1;
    LinearExpression result = expand(algebraic.at(name), state, done);
    state[name] = 2;
    done[name] = result;
    return result;
  }

  LinearExpression expand(const LinearExpression& e, std::map<std::string, int>& state,
                          std::map<std::string, LinearExpression>& done) {
    LinearExpression r;
    r.constant = e.constant;
    for (const auto& [name, c] : e.coefficients) {
      if (algebraic.count(name)) {
        r += eliminate(name, state, done).scaled(c);
      } else {
        r.coefficients[name] += c;
      }
    }
    return r;
  }
};

}  // namespace

FlatModel flatten(const ModelDocument& doc, const std::string& root_id) {
  validate(doc);
  const Component* root = doc.find(root_id);
  if (!root) {
    throw ModelError(ModelError::Kind::kUnknownComponent, "root component '" + root_id + "' not found");
  }
  Collector col{doc, {}, {}, {}};
  std::map<std::string, Resolved> binding;
  for (const auto& p : component_params(*root)) {
    binding[p.name] = p.name;
    if (p.dynamics == Param::Dynamics::kConst) col.out.constants[p.name] = std::nullopt;
  }
  col.instantiate(root_id, "", binding);

  std::map<std::string, int> state;
  std::map<std::string, LinearExpression> done;
  for (auto& [var, flow] : col.out.flows) flow = col.expand(flow, state, done);

  // Root declaration order first, then qualified locals in discovery order.
  for (const auto& p : component_params(*root)) {
    if (col.out.flows.count(p.name)) col.out.state_order.push_back(p.name);
  }
  for (const auto& v : col.flow_order) {
    if (std::find(col.out.state_order.begin(), col.out.state_order.end(), v) ==
        col.out.state_order.end()) {
      col.out.state_order.push_back(v);
    }
  }
  return std::move(col.out);
}

AffineDynamics build_affine(const std::map<std::string, LinearExpression>& flows,
                            const std::map<std::string, double>& const_values,
                            const std::vector<std::string>& order) {
  const std::size_t n = order.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(order[i], i).second) {
      throw ModelError(ModelError::Kind::kDuplicateId, "variable '" + order[i] + "' listed twice");
    }
  }
  Matrix a(n, n);
  std::vector<double> b(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = flows.find(order[i]);
    if (it == flows.end()) continue;
    const LinearExpression& f = it->second;
    b[i] = f.constant;
    for (const auto& [name, c] : f.coefficients) {
      if (auto j = index.find(name); j != index.end()) {
        a(i, j->second) += c;
      } else if (auto k = const_values.find(name); k != const_values.end()) {
        b[i] += c * k->second;
      } else if (c != 0.0) {
        throw ModelError(ModelError::Kind::kUnknownName,
                         "flow of '" + order[i] + "' references unknown name '" + name + "'");
      }
    }
  }
  return AffineDynamics(order, std::move(a), Matrix::column(b));
}

std::vector<std::string> dependency_closure(const std::map<std::string, LinearExpression>& flows,
                                            const std::vector<std::string>& seeds,
                                            const std::vector<std::string>& declared) {
  std::set<std::string> picked;
  std::vector<std::string> work;
  for (const auto& s : seeds) {
    if (flows.count(s) && picked.insert(s).second) work.push_back(s);
  }
  while (!work.empty()) {
    const std::string v = work.back();
    work.pop_back();
    for (const auto& [name, c] : flows.at(v).coefficients) {
      if (c != 0.0 && flows.count(name) && picked.insert(name).second) work.push_back(name);
    }
  }
  std::vector<std::string> out;
  for (const auto& d : declared) {
    if (picked.count(d)) out.push_back(d);
  }
  return out;
}

std::vector<std::string> feedback_states(const FlatModel& flat) {
  std::vector<std::string> seeds;
  for (const auto& [var, f] : flat.flows) {
    for (const auto& [name, c] : f.coefficients) {
      if (c != 0.0 && flat.flows.count(name)) seeds.push_back(name);
    }
  }
  auto out = dependency_closure(flat.flows, seeds, flat.state_order);
  if (out.empty()) out = flat.state_order;
  return out;
}

AffineDynamics closed_loop_cruise(const PlantParams& p, const ControllerParams& c) {
  if (!(p.mass > 0.0) || !(p.drag >= 0.0)) throw Error("closed_loop_cruise: need m > 0 and b >= 0");
  if (!(c.kp >= 0.0) || !(c.ki >= 0.0)) throw Error("closed_loop_cruise: gains must be >= 0");
  Matrix a{{-(p.drag + c.kp) / p.mass, c.ki / p.mass}, {-1.0, 0.0}};
  const std::vector<double> b{c.kp * c.v_ref / p.mass, c.v_ref};
  return AffineDynamics({"v", "q"}, std::move(a), Matrix::column(b));
}

double control_input(const ControllerParams& c, double v, double q) {
  return c.kp * (c.v_ref - v) + c.ki * q;
}

}  // namespace reachpipe
