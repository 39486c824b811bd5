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

#include "reachpipe/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "../lexer.hpp"
#include "reachpipe/cli/plot.hpp"
#include "reachpipe/cli/report.hpp"
#include "reachpipe/error.hpp"
#include "reachpipe/monitor.hpp"
#include "reachpipe/parser.hpp"
#include "reachpipe/reach.hpp"
#include "reachpipe/sim.hpp"

#ifndef REACHPIPE_VERSION
#define REACHPIPE_VERSION "0.0.0"
#endif

namespace reachpipe::cli {
namespace {

/// Unreadable files and bad command-line values.
class InputError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string model;
  std::string config;
  std::optional<double> delta;
  std::optional<double> horizon;
  std::string output;
  std::vector<std::string> plot;
  std::string svg;
  std::string report;
  std::string x0;
  bool no_timing = false;
  bool strict = false;
};

class Stopwatch {
 public:
  void lap(const std::string& phase) {
    const auto now = std::chrono::steady_clock::now();
    laps_.emplace_back(phase, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }
  std::vector<std::pair<std::string, double>> finish() {
    double total = 0.0;
    for (const auto& [_, ms] : laps_) total += ms;
    auto out = laps_;
    out.emplace_back("total", total);
    return out;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, double>> laps_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

// Everything derived from the model and configuration before analysis.
struct Prepared {
  ModelDocument doc;
  Config cfg;
  FlatModel flat;
  std::map<std::string, double> consts;
  AffineDynamics dyn;
  Box init;
  std::vector<std::string> output_vars;
  std::vector<Requirement> requirements;
  std::vector<std::string> requirement_kinds;
};

std::map<std::string, double> resolve_constants(const FlatModel& flat,
                                                const InitialConstraints* ic) {
  std::map<std::string, double> consts;
  for (const auto& [name, value] : flat.constants) {
    if (value) consts[name] = *value;
    else if (ic && ic->fixed_value(name)) consts[name] = *ic->fixed_value(name);
  }
  // Inputs pinned in the initial set that have no flow behave as constants.
  if (ic) {
    for (const auto& name : ic->names()) {
      if (!flat.flows.count(name) && ic->fixed_value(name)) consts[name] = *ic->fixed_value(name);
    }
  }
  return consts;
}

std::vector<std::string> state_order(const FlatModel& flat, const std::vector<std::string>& outputs) {
  std::vector<std::string> seeds;
  for (const auto& v : outputs) {
    if (is_time_axis(v)) continue;
    if (!flat.flows.count(v)) {
      throw ConfigError(ConfigError::Kind::kBadValue,
                        "output variable '" + v + "' is not a state of the flattened model");
    }
    seeds.push_back(v);
  }
  if (seeds.empty()) return feedback_states(flat);
  return dependency_closure(flat.flows, seeds, flat.state_order);
}

double resolve_reference(const Config& cfg, const std::map<std::string, double>& consts) {
  double v = 0.0;
  if (detail::parse_number(cfg.reference, v)) return v;
  auto it = consts.find(cfg.reference);
  if (it == consts.end()) {
    throw ConfigError(ConfigError::Kind::kBadValue,
                      "reference '" + cfg.reference + "' is neither a number nor a model constant");
  }
  return it->second;
}

Prepared prepare(const Options& opts, Stopwatch& sw, std::ostream& err) {
  Prepared p;
  p.doc = parse_model(read_file(opts.model), {opts.strict});
  p.cfg = parse_config(read_file(opts.config));
  if (opts.delta) p.cfg.sampling_time = *opts.delta;
  if (opts.horizon) p.cfg.time_horizon = *opts.horizon;
  for (const auto& w : p.cfg.warnings) err << "warning: " << opts.config << ": " << w << "\n";
  if (!(p.cfg.sampling_time > 0.0) || !(p.cfg.time_horizon >= p.cfg.sampling_time)) {
    throw ConfigError(ConfigError::Kind::kBadValue, "need 0 < delta <= horizon");
  }
  sw.lap("parse");

  p.flat = flatten(p.doc, p.cfg.system);
  const InitialConstraints ic = parse_initial(p.cfg.initially);
  p.consts = resolve_constants(p.flat, &ic);
  const auto order = state_order(p.flat, p.cfg.output_variables);
  p.dyn = build_affine(p.flat.flows, p.consts, order);
  p.init = ic.to_box(order);
  for (const auto& v : p.cfg.output_variables) {
    if (!is_time_axis(v)) p.output_vars.push_back(v);
  }
  if (p.output_vars.empty()) p.output_vars = order;

  for (const auto& spec : p.cfg.checks) {
    if (std::find(order.begin(), order.end(), spec.var) == order.end()) {
      throw ConfigError(ConfigError::Kind::kBadValue,
                        "check on '" + spec.var + "', which is not an analysed state");
    }
    switch (spec.kind) {
      case RequirementSpec::Kind::kRiseTime:
        p.requirements.emplace_back(
            RiseTime{spec.var, resolve_reference(p.cfg, p.consts), spec.args[0], spec.args[1]});
        p.requirement_kinds.push_back("rise_time");
        break;
      case RequirementSpec::Kind::kSettling: {
        SettlingBand s{spec.var, resolve_reference(p.cfg, p.consts), spec.args[0], std::nullopt};
        if (spec.args.size() > 1) s.from_time = spec.args[1];
        p.requirements.emplace_back(s);
        p.requirement_kinds.push_back("settling");
        break;
      }
      case RequirementSpec::Kind::kSafety:
        p.requirements.emplace_back(
            SafetyBox{spec.var, spec.args[0], spec.args[1], spec.args[2], spec.args[3]});
        p.requirement_kinds.push_back("safety");
        break;
    }
  }
  sw.lap("flatten");
  return p;
}

void check_plot_vars(const Options& opts, const std::vector<std::string>& vars) {
  for (const auto& v : opts.plot) {
    if (!is_time_axis(v) && std::find(vars.begin(), vars.end(), v) == vars.end()) {
      throw InputError("cannot plot '" + v + "': not an analysed state");
    }
  }
}

std::string svg_path(const Options& opts) {
  if (!opts.svg.empty()) return opts.svg;
  std::filesystem::path base = opts.output.empty() ? std::filesystem::path(opts.model).filename()
                                                   : std::filesystem::path(opts.output);
  base.replace_extension();
  return base.string() + "_" + opts.plot[0] + "_" + opts.plot[1] + ".svg";
}

RunReport base_report(const std::string& command, const Prepared& p) {
  RunReport r;
  r.tool_version = REACHPIPE_VERSION;
  r.command = command;
  r.config = p.cfg;
  r.variables = p.dyn.var_names;
  r.dynamics = p.dyn;
  return r;
}

void print_verdict(std::ostream& out, const ReportVerdict& v) {
  out << v.requirement << ": " << to_string(v.verdict.outcome) << " (t=" << g6(v.verdict.witness.time)
      << ", bounds=[" << g6(v.verdict.witness.lo) << ", " << g6(v.verdict.witness.hi) << "]) "
      << v.verdict.explanation << "\n";
}

struct ReachRun {
  Prepared prepared;
  Flowpipe flowpipe;
  double bloat = 0.0;
  RunReport report;
};

ReachRun run_reach(const std::string& command, const Options& opts, std::ostream& err) {
  Stopwatch sw;
  ReachRun run;
  run.prepared = prepare(opts, sw, err);
  const Prepared& p = run.prepared;
  check_plot_vars(opts, p.dyn.var_names);

  const ReachSettings settings{p.cfg.sampling_time, p.cfg.time_horizon, p.cfg.max_order, true};
  const std::size_t steps = step_count_for(settings.horizon, settings.delta);
  const Discretization d = discretize(p.dyn, from_box(p.init), settings.delta, settings.bloat_enabled);
  run.flowpipe = propagate(d, steps, settings.max_order);
  run.bloat = d.bloat;
  sw.lap("reach");

  run.report = base_report(command, p);
  for (std::size_t i = 0; i < p.requirements.size(); ++i) {
    run.report.verdicts.push_back({describe(p.requirements[i]), p.requirement_kinds[i],
                                   requirement_var(p.requirements[i]),
                                   check_flowpipe(run.flowpipe, p.requirements[i])});
  }
  sw.lap("check");

  FlowpipeSummary summary{run.flowpipe.step_count(), run.flowpipe.delta, run.bloat, {}};
  for (const auto& v : p.dyn.var_names) {
    summary.final_hull.emplace_back(
        v, coordinate_hull(run.flowpipe.segments.back(), run.flowpipe.index_of(v)));
  }
  run.report.flowpipe = summary;
  if (!opts.no_timing) run.report.timing_ms = sw.finish();
  return run;
}

void write_reach_outputs(const Options& opts, const ReachRun& run) {
  const Prepared& p = run.prepared;
  if (!opts.output.empty()) {
    std::string content;
    switch (p.cfg.output_format) {
      case OutputFormat::kCsv: content = flowpipe_csv(run.flowpipe, p.output_vars); break;
      case OutputFormat::kJson: content = flowpipe_json(run.flowpipe, p.output_vars); break;
      case OutputFormat::kSvg: content = flowpipe_svg(run.flowpipe, "t", p.output_vars.front()); break;
    }
    write_atomic(opts.output, content);
  }
  if (!opts.plot.empty()) write_atomic(svg_path(opts), flowpipe_svg(run.flowpipe, opts.plot[0], opts.plot[1]));
  if (!opts.report.empty()) write_atomic(opts.report, to_json(run.report));
}

void print_reach_summary(std::ostream& out, const ReachRun& run) {
  out << "flowpipe: " << run.flowpipe.step_count() << " segments, delta=" << g6(run.flowpipe.delta)
      << ", bloat=" << g6(run.bloat) << "\n";
  for (const auto& [name, iv] : run.report.flowpipe->final_hull) {
    out << "final " << name << " in [" << g6(iv.lo) << ", " << g6(iv.hi) << "]\n";
  }
}

int cmd_reach(const Options& opts, std::ostream& out, std::ostream& err) {
  const ReachRun run = run_reach("reach", opts, err);
  write_reach_outputs(opts, run);
  print_reach_summary(out, run);
  for (const auto& v : run.report.verdicts) print_verdict(out, v);
  return kExitOk;
}

int cmd_check(const Options& opts, std::ostream& out, std::ostream& err) {
  const ReachRun run = run_reach("check", opts, err);
  if (run.prepared.requirements.empty()) {
    throw ConfigError(ConfigError::Kind::kMissingKey, "configuration has no check.* requirement");
  }
  write_reach_outputs(opts, run);
  bool falsified = false, unknown = false;
  for (const auto& v : run.report.verdicts) {
    print_verdict(out, v);
    falsified |= v.verdict.outcome == Outcome::kFalsified;
    unknown |= v.verdict.outcome == Outcome::kUnknown;
  }
  if (falsified) return kExitFalsified;
  if (unknown) return kExitUnknown;
  return kExitOk;
}

Vector initial_point(const Options& opts, const Prepared& p) {
  Vector x(p.dyn.dimension());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = p.init[i].mid();
  if (opts.x0.empty()) return x;
  for (const auto& [item, _] : detail::split_top(opts.x0, ',')) {
    const auto eq = item.find('=');
    double value = 0.0;
    if (eq == std::string_view::npos ||
        !detail::parse_number(item.substr(eq + 1), value)) {
      throw InputError("--x0 expects name=value pairs, got '" + std::string(item) + "'");
    }
    const std::string name(detail::trim(item.substr(0, eq)));
    const auto& names = p.dyn.var_names;
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw InputError("--x0 names unknown state '" + name + "'");
    x[static_cast<std::size_t>(it - names.begin())] = value;
  }
  return x;
}

int cmd_sim(const Options& opts, std::ostream& out, std::ostream& err) {
  Stopwatch sw;
  const Prepared p = prepare(opts, sw, err);
  check_plot_vars(opts, p.dyn.var_names);
  const Vector x0 = initial_point(opts, p);
  const Trajectory traj = simulate(p.dyn, x0, p.cfg.sampling_time, p.cfg.time_horizon);
  sw.lap("simulate");

  RunReport report = base_report("sim", p);
  for (std::size_t i = 0; i < p.requirements.size(); ++i) {
    report.verdicts.push_back({describe(p.requirements[i]), p.requirement_kinds[i],
                               requirement_var(p.requirements[i]),
                               check_on_trajectory(traj, p.requirements[i])});
  }
  sw.lap("check");
  TrajectorySummary summary{traj.size(), traj.h, {}, {}};
  for (std::size_t i = 0; i < traj.var_names.size(); ++i) {
    summary.initial.emplace_back(traj.var_names[i], traj.states.front()[i]);
    summary.final.emplace_back(traj.var_names[i], traj.states.back()[i]);
  }
  report.trajectory = summary;
  if (!opts.no_timing) report.timing_ms = sw.finish();

  if (!opts.output.empty()) write_atomic(opts.output, trajectory_csv(traj));
  if (!opts.plot.empty()) write_atomic(svg_path(opts), trajectory_svg(traj, opts.plot[0], opts.plot[1]));
  if (!opts.report.empty()) write_atomic(opts.report, to_json(report));

  out << "trajectory: " << traj.size() << " samples, h=" << g6(traj.h) << "\n";
  for (const auto& [name, v] : summary.final) {
    out << name << "(" << g6(traj.times.back()) << ") = " << g6(v) << "\n";
  }
  for (const auto& v : report.verdicts) print_verdict(out, v);
  return kExitOk;
}

void print_tree(std::ostream& out, const ModelDocument& doc, const std::string& id,
                const std::string& instance, int depth) {
  const Component* c = doc.find(id);
  const bool net = std::holds_alternative<NetworkComponent>(*c);
  out << std::string(static_cast<std::size_t>(2 * depth), ' ') << instance;
  if (instance != id) out << " : " << id;
  out << " (" << (net ? "network" : "base") << ")\n";
  if (!net) return;
  for (const auto& b : std::get<NetworkComponent>(*c).binds) {
    print_tree(out, doc, b.component, b.instance, depth + 1);
  }
}

int cmd_info(const Options& opts, std::ostream& out) {
  const ModelDocument doc = parse_model(read_file(opts.model), {opts.strict});
  std::string root = doc.default_root();
  std::optional<Config> cfg;
  std::optional<InitialConstraints> ic;
  if (!opts.config.empty()) {
    cfg = parse_config(read_file(opts.config));
    root = cfg->system;
    ic = parse_initial(cfg->initially);
  }
  const FlatModel flat = flatten(doc, root);
  const auto consts = resolve_constants(flat, ic ? &*ic : nullptr);
  const auto order = state_order(flat, cfg ? cfg->output_variables : std::vector<std::string>{});
  const AffineDynamics dyn = build_affine(flat.flows, consts, order);

  std::size_t bases = 0, networks = 0;
  for (const auto& c : doc.components) {
    (std::holds_alternative<BaseComponent>(c) ? bases : networks)++;
  }
  out << "components: " << bases << " base, " << networks << " network\n";
  print_tree(out, doc, root, root, 0);
  out << "states: " << join(flat.state_order, ", ") << "\n";
  std::vector<std::string> cs;
  for (const auto& [name, v] : flat.constants) cs.push_back(name + "=" + (v ? g6(*v) : "symbolic"));
  out << "constants: " << join(cs, ", ") << "\n";
  out << "variables: " << join(dyn.var_names, ", ") << "\n";
  for (const auto& v : flat.state_order) out << "  " << v << "' = " << to_string(flat.flows.at(v)) << "\n";
  out << "A = [";
  for (std::size_t i = 0; i < dyn.a.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < dyn.a.cols(); ++j) out << (j ? ", " : "") << g6(dyn.a(i, j));
    out << "]";
  }
  out << "]\nb = [";
  for (std::size_t i = 0; i < dyn.b_vec.rows(); ++i) out << (i ? ", " : "") << g6(dyn.b_vec(i, 0));
  out << "]\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reachability analysis and requirement checking for affine control loops", "reachpipe"};
  app.require_subcommand(1);
  app.set_version_flag("--version", REACHPIPE_VERSION);
  Options opts;

  auto add_common = [&](CLI::App* sub, bool config_required) {
    sub->add_option("model", opts.model, "Model file (XML)")->required();
    auto* c = sub->add_option("config", opts.config, "Configuration file (CFG)");
    if (config_required) c->required();
    sub->add_flag("--strict", opts.strict, "Reject unknown XML elements");
  };
  auto add_analysis = [&](CLI::App* sub) {
    sub->add_option("--delta", opts.delta, "Step size in seconds (overrides sampling-time)");
    sub->add_option("--horizon", opts.horizon, "Time horizon in seconds (overrides time-horizon)");
    sub->add_option("--output", opts.output, "Write flowpipe/trajectory data here");
    sub->add_option("--plot", opts.plot, "Plot axes: VX VY (VX may be 'time')")->expected(2);
    sub->add_option("--svg", opts.svg, "SVG path for --plot");
    sub->add_option("--report", opts.report, "Write the JSON run report here");
    sub->add_flag("--no-timing", opts.no_timing, "Leave wall-clock timings out of the report");
  };

  auto* reach = app.add_subcommand("reach", "Compute a flowpipe");
  add_common(reach, true);
  add_analysis(reach);
  auto* sim = app.add_subcommand("sim", "Simulate one trajectory (RK4)");
  add_common(sim, true);
  add_analysis(sim);
  sim->add_option("--x0", opts.x0, "Initial state, e.g. v=0,q=0 (default: centre of initially)");
  auto* check = app.add_subcommand("check", "Compute a flowpipe and check requirements");
  add_common(check, true);
  add_analysis(check);
  auto* info = app.add_subcommand("info", "Print the component tree and flattened dynamics");
  add_common(info, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (reach->parsed()) return cmd_reach(opts, out, err);
    if (sim->parsed()) return cmd_sim(opts, out, err);
    if (check->parsed()) return cmd_check(opts, out, err);
    return cmd_info(opts, out);
  } catch (const SyntaxError& e) {
    err << "error: " << opts.model << (e.line() ? ":" + std::to_string(e.line()) : std::string())
        << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const ConfigError& e) {
    err << "error: " << (opts.config.empty() ? opts.model : opts.config)
        << (e.line() ? ":" + std::to_string(e.line()) : std::string()) << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const ModelError& e) {
    err << "error: " << opts.model << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumericError;
  } catch (const DimensionError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitNumericError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace reachpipe::cli
