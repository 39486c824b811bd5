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

#include <cstddef>
#include <string>
#include <vector>

#include "reachpipe/matrix.hpp"
#include "reachpipe/model.hpp"
#include "reachpipe/sets.hpp"

namespace reachpipe {

struct ReachSettings {
  double delta = 0.05;    // s
  double horizon = 10.0;  // s
  double max_order = 20.0;
  bool bloat_enabled = true;
};

/// Segment k over-approximates every reachable state on [k delta, (k+1) delta].
struct Flowpipe {
  std::vector<std::string> var_names;
  double delta = 0.0;
  std::vector<Zonotope> segments;

  std::size_t step_count() const { return segments.size(); }
  double t_lo(std::size_t k) const { return static_cast<double>(k) * delta; }
  double t_hi(std::size_t k) const { return static_cast<double>(k + 1) * delta; }
  std::size_t index_of(const std::string& var) const;
};

struct SegmentBounds {
  double t_lo;
  double t_hi;
  double lo;
  double hi;
};

/// ceil(horizon / delta), ignoring representation noise of the quotient.
std::size_t step_count_for(double horizon, double delta);

/**
 * Interpolation error bound for x' = a x over one step.
 *
 * alpha = (e^{|a| delta} - 1 - |a| delta) / |a|^2 * sup_{x in x0} |a^2 x|,
 * all norms infinity norms, the supremum read off interval_hull(a^2 x0).
 * Every e^{ta} x, t in [0, delta], lies within alpha of the chord from x to
 * e^{delta a} x. Zero when a^2 = 0 (e.g. constant drift).
 */
double bloat_radius(const Matrix& a, const Zonotope& x0, double delta);

/// [[a, b], [0, 0]]: the autonomous form of x' = a x + b on (x, 1).
Matrix augmented_matrix(const AffineDynamics& dyn);

/// x0 lifted to (x, 1).
Zonotope augment(const Zonotope& x0);

struct Discretization {
  std::vector<std::string> var_names;
  double delta = 0.0;
  Matrix phi_aug;        // e^{aug delta}, (n+1) x (n+1)
  Zonotope omega0;       // (n+1)-dimensional, covers [0, delta]
  double bloat = 0.0;    // alpha actually added
};

/// omega0 = ch(x0, phi x0) + alpha-box on the state coordinates.
Discretization discretize(const AffineDynamics& dyn, const Zonotope& x0, double delta,
                          bool bloat_enabled = true);

/// Omega_{k+1} = phi Omega_k for k < steps, order-reduced after each map;
/// the constant coordinate is dropped from the stored segments.
Flowpipe propagate(const Discretization& d, std::size_t steps, double max_order);

Flowpipe compute_flowpipe(const AffineDynamics& dyn, const Box& init, const ReachSettings& settings);

std::vector<SegmentBounds> flowpipe_bounds(const Flowpipe& fp, const std::string& var);

}  // namespace reachpipe
