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

#include <string>

#include "reachpipe/reach.hpp"
#include "reachpipe/sim.hpp"

namespace reachpipe::cli {

/// True for the pseudo-variable naming the time axis ("t" or "time").
bool is_time_axis(const std::string& name);

/// One filled polygon per segment: the interval-hull rectangle of the
/// segment projected on (x, y), where x may be the time axis.
std::string flowpipe_svg(const Flowpipe& fp, const std::string& x, const std::string& y);

/// Polyline of the sampled trajectory on (x, y).
std::string trajectory_svg(const Trajectory& traj, const std::string& x, const std::string& y);

}  // namespace reachpipe::cli
