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
#include <span>
#include <vector>

#include "reachpipe/matrix.hpp"

namespace reachpipe {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double mid() const { return 0.5 * (lo + hi); }
  double radius() const { return 0.5 * (hi - lo); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Axis-aligned box; lo <= hi and finite in every dimension.
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<Interval> dims);

  std::size_t dimension() const { return dims_.size(); }
  const Interval& operator[](std::size_t i) const { return dims_[i]; }
  std::span<const Interval> intervals() const { return dims_; }

  bool contains(const Box& other) const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Interval> dims_;
};

/// {center + sum_i a_i g_i : a_i in [-1, 1]}.
class Zonotope {
 public:
  Zonotope() = default;
  explicit Zonotope(Vector center, std::vector<Vector> generators = {});

  static Zonotope point(Vector p) { return Zonotope(std::move(p)); }

  std::size_t dimension() const { return center_.size(); }
  std::size_t generator_count() const { return generators_.size(); }
  /// generator_count / dimension; zero for the empty-dimensional zonotope.
  double order() const;

  const Vector& center() const { return center_; }
  const std::vector<Vector>& generators() const { return generators_; }

 private:
  Vector center_;
  std::vector<Vector> generators_;
};

double dot(std::span<const double> a, std::span<const double> b);

/// Midpoint center, one axis generator per non-degenerate dimension.
Zonotope from_box(const Box& b);

Zonotope linear_map(const Matrix& m, const Zonotope& z);

/// Translation by a vector of the same dimension.
Zonotope translate(const Zonotope& z, std::span<const double> offset);

Zonotope minkowski_sum(const Zonotope& z1, const Zonotope& z2);

/// max over z of <x, d>.
double support(const Zonotope& z, std::span<const double> d);

Box interval_hull(const Zonotope& z);

/// Interval of coordinate `i` only; same as interval_hull(z)[i].
Interval coordinate_hull(const Zonotope& z, std::size_t i);

/**
 * Zonotope containing conv(z1 u z2).
 *
 * Generators are paired by index after padding the shorter list with zero
 * vectors: result is <(c1+c2)/2, {(c1-c2)/2, (g1_i+g2_i)/2, (g1_i-g2_i)/2}>.
 */
Zonotope ch_overapprox(const Zonotope& z1, const Zonotope& z2);

/**
 * Girard box reduction.
 *
 * When order exceeds `max_order`, generators are ranked by ||g||_1 - ||g||_inf
 * (stable, ties by index) and the lowest-ranked ones are replaced by their
 * axis-aligned box. The result contains `z` and has order <= max_order.
 */
Zonotope reduce_order(const Zonotope& z, double max_order);

}  // namespace reachpipe
