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

#include "reachpipe/sim.hpp"

#include <algorithm>
#include <cmath>

#include "reachpipe/error.hpp"
#include "reachpipe/reach.hpp"

namespace reachpipe {

std::size_t Trajectory::index_of(const std::string& var) const {
  auto it = std::find(var_names.begin(), var_names.end(), var);
  if (it == var_names.end()) throw Error("trajectory has no variable '" + var + "'");
  return static_cast<std::size_t>(it - var_names.begin());
}

namespace {

Vector field(const AffineDynamics& dyn, const Vector& x) {
  Vector dx = mat_vec(dyn.a, x);
  for (std::size_t i = 0; i < dx.size(); ++i) dx[i] += dyn.b_vec(i, 0);
  return dx;
}

Vector axpy(const Vector& x, double s, const Vector& d) {
  Vector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + s * d[i];
  return y;
}

}  // namespace

Vector rk4_step(const AffineDynamics& dyn, const Vector& x, double h) {
  if (!(h > 0.0)) throw Error("rk4_step: step must be positive");
  if (x.size() != dyn.dimension()) throw DimensionError("rk4_step: state dimension mismatch");
  const Vector k1 = field(dyn, x);
  const Vector k2 = field(dyn, axpy(x, 0.5 * h, k1));
  const Vector k3 = field(dyn, axpy(x, 0.5 * h, k2));
  const Vector k4 = field(dyn, axpy(x, h, k3));
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

Trajectory simulate(const AffineDynamics& dyn, const Vector& x0, double h, double horizon) {
  if (!(h > 0.0) || !(horizon >= h)) throw Error("simulate: need h > 0 and horizon >= h");
  if (x0.size() != dyn.dimension()) throw DimensionError("simulate: initial state dimension mismatch");
  const std::size_t steps = step_count_for(horizon, h);
  Trajectory tr;
  tr.var_names = dyn.var_names;
  tr.h = h;
  tr.times.reserve(steps + 1);
  tr.states.reserve(steps + 1);
  Vector x = x0;
  tr.times.push_back(0.0);
  tr.states.push_back(x);
  for (std::size_t k = 1; k <= steps; ++k) {
    x = rk4_step(dyn, x, h);
    for (double v : x) {
      if (!std::isfinite(v)) throw NumericError("simulate: state diverged at step " + std::to_string(k));
    }
    tr.times.push_back(static_cast<double>(k) * h);
    tr.states.push_back(x);
  }
  return tr;
}

std::optional<double> rise_time_of(const Trajectory& traj, const std::string& var, double target) {
  const std::size_t i = traj.index_of(var);
  if (traj.size() == 0) return std::nullopt;
  if (traj.states[0][i] >= target) return 0.0;
  for (std::size_t k = 1; k < traj.size(); ++k) {
    const double prev = traj.states[k - 1][i];
    const double cur = traj.states[k][i];
    if (cur >= target) {
      const double frac = (target - prev) / (cur - prev);
      return traj.times[k - 1] + frac * (traj.times[k] - traj.times[k - 1]);
    }
  }
  return std::nullopt;
}

}  // namespace reachpipe
