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

#include "reachpipe/sets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "reachpipe/error.hpp"

namespace reachpipe {
namespace {

void require_dim(std::size_t expected, std::size_t got, const char* op) {
  if (expected != got) {
    throw DimensionError(std::string(op) + ": dimension " + std::to_string(got) +
                         " does not match " + std::to_string(expected));
  }
}

}  // namespace

Box::Box(std::vector<Interval> dims) : dims_(std::move(dims)) {
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const auto& iv = dims_[i];
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
      throw NumericError("Box: non-finite bound in dimension " + std::to_string(i));
    }
    if (iv.lo > iv.hi) {
      throw Error("Box: empty interval in dimension " + std::to_string(i));
    }
  }
}

bool Box::contains(const Box& other) const {
  if (other.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (!dims_[i].contains(other[i])) return false;
  }
  return true;
}

Zonotope::Zonotope(Vector center, std::vector<Vector> generators)
    : center_(std::move(center)), generators_(std::move(generators)) {
  for (const auto& g : generators_) require_dim(center_.size(), g.size(), "Zonotope");
}

double Zonotope::order() const {
  if (center_.empty()) return 0.0;
  return static_cast<double>(generators_.size()) / static_cast<double>(center_.size());
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_dim(a.size(), b.size(), "dot");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Zonotope from_box(const Box& b) {
  const std::size_t n = b.dimension();
  Vector c(n);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = b[i].mid();
    const double r = b[i].radius();
    if (r > 0.0) {
      Vector g(n, 0.0);
      g[i] = r;
      gens.push_back(std::move(g));
    }
  }
  return Zonotope(std::move(c), std::move(gens));
}

Zonotope linear_map(const Matrix& m, const Zonotope& z) {
  require_dim(m.cols(), z.dimension(), "linear_map");
  std::vector<Vector> gens;
  gens.reserve(z.generator_count());
  for (const auto& g : z.generators()) gens.push_back(mat_vec(m, g));
  return Zonotope(mat_vec(m, z.center()), std::move(gens));
}

Zonotope translate(const Zonotope& z, std::span<const double> offset) {
  require_dim(z.dimension(), offset.size(), "translate");
  Vector c = z.center();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += offset[i];
  return Zonotope(std::move(c), z.generators());
}

Zonotope minkowski_sum(const Zonotope& z1, const Zonotope& z2) {
  require_dim(z1.dimension(), z2.dimension(), "minkowski_sum");
  Vector c = z1.center();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += z2.center()[i];
  std::vector<Vector> gens = z1.generators();
  gens.insert(gens.end(), z2.generators().begin(), z2.generators().end());
  return Zonotope(std::move(c), std::move(gens));
}

double support(const Zonotope& z, std::span<const double> d) {
  require_dim(z.dimension(), d.size(), "support");
  double s = dot(z.center(), d);
  for (const auto& g : z.generators()) s += std::abs(dot(g, d));
  return s;
}

Interval coordinate_hull(const Zonotope& z, std::size_t i) {
  if (i >= z.dimension()) {
    throw DimensionError("coordinate_hull: index " + std::to_string(i) + " out of range");
  }
  double r = 0.0;
  for (const auto& g : z.generators()) r += std::abs(g[i]);
  return {z.center()[i] - r, z.center()[i] + r};
}

Box interval_hull(const Zonotope& z) {
  std::vector<Interval> dims(z.dimension());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = coordinate_hull(z, i);
  return Box(std::move(dims));
}

Zonotope ch_overapprox(const Zonotope& z1, const Zonotope& z2) {
  require_dim(z1.dimension(), z2.dimension(), "ch_overapprox");
  const std::size_t n = z1.dimension();
  const std::size_t count = std::max(z1.generator_count(), z2.generator_count());
  const Vector zero(n, 0.0);
  auto gen = [&](const Zonotope& z, std::size_t i) -> const Vector& {
    return i < z.generator_count() ? z.generators()[i] : zero;
  };

  Vector c(n), half_diff(n);
  for (std::size_t k = 0; k < n; ++k) {
    c[k] = 0.5 * (z1.center()[k] + z2.center()[k]);
    half_diff[k] = 0.5 * (z1.center()[k] - z2.center()[k]);
  }
  std::vector<Vector> gens;
  gens.reserve(2 * count + 1);
  gens.push_back(std::move(half_diff));
  for (std::size_t i = 0; i < count; ++i) {
    const Vector& g1 = gen(z1, i);
    const Vector& g2 = gen(z2, i);
    Vector sum(n), diff(n);
    for (std::size_t k = 0; k < n; ++k) {
      sum[k] = 0.5 * (g1[k] + g2[k]);
      diff[k] = 0.5 * (g1[k] - g2[k]);
    }
    gens.push_back(std::move(sum));
    gens.push_back(std::move(diff));
  }
  return Zonotope(std::move(c), std::move(gens));
}

Zonotope reduce_order(const Zonotope& z, double max_order) {
  if (!(max_order >= 1.0)) throw Error("reduce_order: max_order must be >= 1");
  const std::size_t n = z.dimension();
  const std::size_t g = z.generator_count();
  if (n == 0) return z;
  // Small epsilon so that e.g. 2.9999999999 * 3 still admits 9 generators.
  const auto limit = static_cast<std::size_t>(std::floor(max_order * static_cast<double>(n) + 1e-9));
  if (g <= limit) return z;

  const std::size_t keep = limit - n;
  std::vector<double> score(g);
  for (std::size_t i = 0; i < g; ++i) {
    double l1 = 0.0, linf = 0.0;
    for (double v : z.generators()[i]) {
      l1 += std::abs(v);
      linf = std::max(linf, std::abs(v));
    }
    score[i] = l1 - linf;
  }
  std::vector<std::size_t> rank(g);
  std::iota(rank.begin(), rank.end(), 0);
  std::stable_sort(rank.begin(), rank.end(),
                   [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });

  // The first g - keep entries of the ranking are absorbed into the box.
  std::vector<bool> boxed(g, false);
  Vector radius(n, 0.0);
  for (std::size_t r = 0; r < g - keep; ++r) {
    const std::size_t i = rank[r];
    boxed[i] = true;
    for (std::size_t k = 0; k < n; ++k) radius[k] += std::abs(z.generators()[i][k]);
  }

  std::vector<Vector> gens;
  gens.reserve(limit);
  for (std::size_t i = 0; i < g; ++i) {
    if (!boxed[i]) gens.push_back(z.generators()[i]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (radius[k] == 0.0) continue;
    Vector e(n, 0.0);
    e[k] = radius[k];
    gens.push_back(std::move(e));
  }
  return Zonotope(z.center(), std::move(gens));
}

}  // namespace reachpipe
