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

#include "reachpipe/reach.hpp"

#include <algorithm>
#include <cmath>

#include "reachpipe/error.hpp"

namespace reachpipe {

std::size_t Flowpipe::index_of(const std::string& var) const {
  auto it = std::find(var_names.begin(), var_names.end(), var);
  if (it == var_names.end()) throw Error("flowpipe has no variable '" + var + "'");
  return static_cast<std::size_t>(it - var_names.begin());
}

std::size_t step_count_for(double horizon, double delta) {
  if (!(delta > 0.0) || !(horizon >= delta)) {
    throw Error("reach settings need 0 < delta <= horizon");
  }
  const double q = horizon / delta;
  const double r = std::round(q);
  if (std::abs(q - r) <= 1e-9 * std::max(1.0, r)) return static_cast<std::size_t>(r);
  return static_cast<std::size_t>(std::ceil(q));
}

double bloat_radius(const Matrix& a, const Zonotope& x0, double delta) {
  const double norm = inf_norm(a);
  if (norm == 0.0) return 0.0;
  const Box curvature = interval_hull(linear_map(a * a, x0));
  double sup = 0.0;
  for (const auto& iv : curvature.intervals()) sup = std::max({sup, std::abs(iv.lo), std::abs(iv.hi)});
  const double x = norm * delta;
  // e^x - 1 - x without cancellation for small x.
  const double excess = std::expm1(x) - x;
  return excess / (norm * norm) * sup;
}

Matrix augmented_matrix(const AffineDynamics& dyn) {
  const std::size_t n = dyn.dimension();
  Matrix aug(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = dyn.a(i, j);
    aug(i, n) = dyn.b_vec(i, 0);
  }
  return aug;
}

Zonotope augment(const Zonotope& x0) {
  Vector c = x0.center();
  c.push_back(1.0);
  std::vector<Vector> gens;
  gens.reserve(x0.generator_count());
  for (Vector g : x0.generators()) {
    g.push_back(0.0);
    gens.push_back(std::move(g));
  }
  return Zonotope(std::move(c), std::move(gens));
}

Discretization discretize(const AffineDynamics& dyn, const Zonotope& x0, double delta,
                          bool bloat_enabled) {
  const std::size_t n = dyn.dimension();
  if (x0.dimension() != n) {
    throw DimensionError("discretize: initial set has dimension " +
                         std::to_string(x0.dimension()) + ", dynamics " + std::to_string(n));
  }
  if (!(delta > 0.0)) throw Error("discretize: delta must be positive");
  const Matrix aug = augmented_matrix(dyn);
  const Matrix phi = mat_exp(aug, delta);
  const Zonotope lifted = augment(x0);
  Zonotope omega = ch_overapprox(lifted, linear_map(phi, lifted));

  double alpha = 0.0;
  if (bloat_enabled) {
    alpha = bloat_radius(aug, lifted, delta);
    if (!std::isfinite(alpha)) throw NumericError("discretize: bloating radius is not finite");
    if (alpha > 0.0) {
      std::vector<Vector> ball;
      for (std::size_t i = 0; i < n; ++i) {
        Vector g(n + 1, 0.0);
        g[i] = alpha;
        ball.push_back(std::move(g));
      }
      omega = minkowski_sum(omega, Zonotope(Vector(n + 1, 0.0), std::move(ball)));
    }
  }
  return {dyn.var_names, delta, phi, std::move(omega), alpha};
}

Flowpipe propagate(const Discretization& d, std::size_t steps, double max_order) {
  if (steps < 1) throw Error("propagate: need at least one step");
  const std::size_t n = d.var_names.size();
  if (d.phi_aug.rows() != n + 1 || d.omega0.dimension() != n + 1) {
    throw DimensionError("propagate: discretization does not match " + std::to_string(n) +
                         " variables");
  }
  // The constant coordinate stays exactly 1 with no generator support, so the
  // augmented map acts on the state block as x -> phi_xx x + phi_x1.
  const Matrix phi_xx = d.phi_aug.block(0, 0, n, n);
  Vector shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = d.phi_aug(i, n);

  std::vector<Vector> gens;
  gens.reserve(d.omega0.generator_count());
  for (const auto& g : d.omega0.generators()) {
    if (g[n] != 0.0) throw Error("propagate: omega0 has extent in the constant coordinate");
    gens.emplace_back(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n));
  }
  Zonotope current(Vector(d.omega0.center().begin(), d.omega0.center().begin() + static_cast<std::ptrdiff_t>(n)),
                   std::move(gens));
  current = reduce_order(current, max_order);

  Flowpipe fp;
  fp.var_names = d.var_names;
  fp.delta = d.delta;
  fp.segments.reserve(steps);
  fp.segments.push_back(current);
  for (std::size_t k = 1; k < steps; ++k) {
    current = reduce_order(translate(linear_map(phi_xx, current), shift), max_order);
    for (double c : current.center()) {
      if (!std::isfinite(c)) throw NumericError("propagate: flowpipe diverged at step " + std::to_string(k));
    }
    fp.segments.push_back(current);
  }
  return fp;
}

Flowpipe compute_flowpipe(const AffineDynamics& dyn, const Box& init, const ReachSettings& settings) {
  if (init.dimension() != dyn.dimension()) {
    throw DimensionError("compute_flowpipe: initial box has dimension " +
                         std::to_string(init.dimension()) + ", dynamics " +
                         std::to_string(dyn.dimension()));
  }
  const std::size_t steps = step_count_for(settings.horizon, settings.delta);
  const Discretization d = discretize(dyn, from_box(init), settings.delta, settings.bloat_enabled);
  return propagate(d, steps, settings.max_order);
}

std::vector<SegmentBounds> flowpipe_bounds(const Flowpipe& fp, const std::string& var) {
  const std::size_t i = fp.index_of(var);
  Vector dir(fp.var_names.size(), 0.0);
  std::vector<SegmentBounds> out;
  out.reserve(fp.segments.size());
  for (std::size_t k = 0; k < fp.segments.size(); ++k) {
    dir[i] = 1.0;
    const double hi = support(fp.segments[k], dir);
    dir[i] = -1.0;
    const double lo = -support(fp.segments[k], dir);
    dir[i] = 0.0;
    out.push_back({fp.t_lo(k), fp.t_hi(k), lo, hi});
  }
  return out;
}

}  // namespace reachpipe
