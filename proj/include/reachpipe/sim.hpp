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
#include <vector>

#include "reachpipe/model.hpp"

namespace reachpipe {

struct Trajectory {
  std::vector<std::string> var_names;
  double h = 0.0;
  std::vector<double> times;
  std::vector<Vector> states;

  std::size_t size() const { return times.size(); }
  std::size_t index_of(const std::string& var) const;
};

/// One classical Runge-Kutta step of x' = a x + b.
Vector rk4_step(const AffineDynamics& dyn, const Vector& x, double h);

/// ceil(horizon / h) + 1 samples at t_k = k h, starting from x0.
Trajectory simulate(const AffineDynamics& dyn, const Vector& x0, double h, double horizon);

/// First time `var` reaches `target`, interpolated linearly between the
/// bracketing samples; 0 if it starts at or above the target.
std::optional<double> rise_time_of(const Trajectory& traj, const std::string& var, double target);

}  // namespace reachpipe
