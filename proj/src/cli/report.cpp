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

#include "reachpipe/cli/report.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

#include <json.hpp>
#include <unistd.h>

#include "reachpipe/error.hpp"

namespace reachpipe::cli {
namespace {

using ojson = nlohmann::ordered_json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ojson witness_json(const Witness& w) { return ojson{{"time", w.time}, {"lo", w.lo}, {"hi", w.hi}}; }

}  // namespace

std::string to_json(const RunReport& r) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = {{"name", "reachpipe"}, {"version", r.tool_version}};
  j["command"] = r.command;

  const Config& c = r.config;
  ojson cfg;
  cfg["system"] = c.system;
  cfg["initially"] = c.initially;
  cfg["scenario"] = c.scenario;
  cfg["algorithm"] = "fixed-step zonotope";
  cfg["sampling_time"] = c.sampling_time;
  cfg["time_horizon"] = c.time_horizon;
  cfg["output_variables"] = c.output_variables;
  cfg["max_order"] = c.max_order;
  cfg["output_format"] = to_string(c.output_format);
  cfg["accuracy"] = c.accuracy ? ojson(*c.accuracy) : ojson(nullptr);
  cfg["warnings"] = c.warnings;
  j["config"] = cfg;

  j["variables"] = r.variables;
  if (r.dynamics) {
    ojson a = ojson::array();
    for (std::size_t i = 0; i < r.dynamics->a.rows(); ++i) {
      ojson row = ojson::array();
      for (std::size_t k = 0; k < r.dynamics->a.cols(); ++k) row.push_back(r.dynamics->a(i, k));
      a.push_back(row);
    }
    ojson b = ojson::array();
    for (std::size_t i = 0; i < r.dynamics->b_vec.rows(); ++i) b.push_back(r.dynamics->b_vec(i, 0));
    j["dynamics"] = {{"a", a}, {"b", b}};
  }

  ojson verdicts = ojson::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back({{"requirement", v.requirement},
                        {"kind", v.kind},
                        {"var", v.var},
                        {"outcome", to_string(v.verdict.outcome)},
                        {"witness", witness_json(v.verdict.witness)},
                        {"explanation", v.verdict.explanation}});
  }
  j["verdicts"] = verdicts;

  if (r.flowpipe) {
    ojson hull = ojson::object();
    for (const auto& [name, iv] : r.flowpipe->final_hull) hull[name] = {iv.lo, iv.hi};
    j["flowpipe"] = {{"steps", r.flowpipe->steps},
                     {"delta", r.flowpipe->delta},
                     {"bloat", r.flowpipe->bloat},
                     {"final_hull", hull}};
  }
  if (r.trajectory) {
    ojson init = ojson::object(), fin = ojson::object();
    for (const auto& [name, v] : r.trajectory->initial) init[name] = v;
    for (const auto& [name, v] : r.trajectory->final) fin[name] = v;
    j["trajectory"] = {{"samples", r.trajectory->samples},
                       {"h", r.trajectory->h},
                       {"initial", init},
                       {"final", fin}};
  }
  if (!r.timing_ms.empty()) {
    ojson t = ojson::object();
    for (const auto& [phase, ms] : r.timing_ms) t[phase] = ms;
    j["timing_ms"] = t;
  }
  return j.dump(2) + "\n";
}

std::string flowpipe_csv(const Flowpipe& fp, const std::vector<std::string>& vars) {
  std::vector<std::vector<SegmentBounds>> cols;
  cols.reserve(vars.size());
  for (const auto& v : vars) cols.push_back(flowpipe_bounds(fp, v));
  std::string out = "step,t_lo,t_hi";
  for (const auto& v : vars) out += "," + v + "_lo," + v + "_hi";
  out += "\n";
  for (std::size_t k = 0; k < fp.step_count(); ++k) {
    out += std::to_string(k) + "," + g17(fp.t_lo(k)) + "," + g17(fp.t_hi(k));
    for (const auto& c : cols) out += "," + g17(c[k].lo) + "," + g17(c[k].hi);
    out += "\n";
  }
  return out;
}

std::string flowpipe_json(const Flowpipe& fp, const std::vector<std::string>& vars) {
  std::vector<std::vector<SegmentBounds>> cols;
  for (const auto& v : vars) cols.push_back(flowpipe_bounds(fp, v));
  ojson segs = ojson::array();
  for (std::size_t k = 0; k < fp.step_count(); ++k) {
    ojson bounds = ojson::object();
    for (std::size_t i = 0; i < vars.size(); ++i) bounds[vars[i]] = {cols[i][k].lo, cols[i][k].hi};
    segs.push_back({{"step", k}, {"t_lo", fp.t_lo(k)}, {"t_hi", fp.t_hi(k)}, {"bounds", bounds}});
  }
  ojson j{{"variables", vars}, {"delta", fp.delta}, {"segments", segs}};
  return j.dump(2) + "\n";
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t";
  for (const auto& v : traj.var_names) out += "," + v;
  out += "\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    out += g17(traj.times[k]);
    for (double x : traj.states[k]) out += "," + g17(x);
    out += "\n";
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open '" + tmp.string() + "' for writing");
    os << content;
    os.flush();
    if (!os) throw Error("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot move output into '" + path.string() + "'");
  }
}

}  // namespace reachpipe::cli
