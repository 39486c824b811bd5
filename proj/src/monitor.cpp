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

#include "reachpipe/monitor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "reachpipe/error.hpp"

namespace reachpipe {
namespace {

// Slack for comparing k * delta against user-given times.
double time_slack(double t) { return 1e-9 * std::max(1.0, std::abs(t)); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

Interval band_of(const SettlingBand& r) {
  const double a = (1.0 - r.epsilon) * r.reference;
  const double b = (1.0 + r.epsilon) * r.reference;
  return {std::min(a, b), std::max(a, b)};
}

Witness witness_of(const SegmentBounds& s) { return {s.t_lo, s.lo, s.hi}; }

}  // namespace

void validate(const Requirement& r) {
  std::visit(
      [](const auto& q) {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, RiseTime>) {
          if (!(q.fraction > 0.0 && q.fraction < 1.0)) throw Error("rise time: fraction must be in (0, 1)");
          if (!(q.deadline > 0.0)) throw Error("rise time: deadline must be positive");
        } else if constexpr (std::is_same_v<T, SettlingBand>) {
          if (!(q.epsilon > 0.0 && q.epsilon <= 1.0)) throw Error("settling: epsilon must be in (0, 1]");
        } else {
          if (q.lo > q.hi) throw Error("safety: lo exceeds hi");
          if (q.t1 > q.t2) throw Error("safety: empty time window");
        }
      },
      r);
}

const std::string& requirement_var(const Requirement& r) {
  return std::visit([](const auto& q) -> const std::string& { return q.var; }, r);
}

std::string describe(const Requirement& r) {
  return std::visit(
      [](const auto& q) -> std::string {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, RiseTime>) {
          return "rise_time(" + q.var + " >= " + fmt(q.fraction * q.reference) + " by t=" +
                 fmt(q.deadline) + ")";
        } else if constexpr (std::is_same_v<T, SettlingBand>) {
          const Interval b = band_of(q);
          std::string s = "settling(" + q.var + " in [" + fmt(b.lo) + ", " + fmt(b.hi) + "]";
          if (q.from_time) s += " from t<=" + fmt(*q.from_time);
          return s + ")";
        } else {
          return "safety(" + q.var + " in [" + fmt(q.lo) + ", " + fmt(q.hi) + "] over [" +
                 fmt(q.t1) + ", " + fmt(q.t2) + "])";
        }
      },
      r);
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kVerified: return "Verified";
    case Outcome::kFalsified: return "Falsified";
    case Outcome::kUnknown: return "Unknown";
  }
  return "Unknown";
}

Verdict check_rise_time_flowpipe(const Flowpipe& fp, const RiseTime& r) {
  validate(r);
  const auto bounds = flowpipe_bounds(fp, r.var);
  const double theta = r.fraction * r.reference;
  const double deadline = r.deadline + time_slack(r.deadline);
  const std::size_t n = bounds.size();

  // Smallest k with lo_j >= theta for every j >= k.
  std::size_t k = n;
  while (k > 0 && bounds[k - 1].lo >= theta) --k;

  if (k < n && bounds[k].t_hi <= deadline) {
    return {Outcome::kVerified, witness_of(bounds[k]),
            r.var + " stays >= " + fmt(theta) + " from t=" + fmt(bounds[k].t_lo)};
  }

  bool all_below = true;
  std::size_t highest = 0;
  for (std::size_t j = 0; j < n && bounds[j].t_lo <= deadline; ++j) {
    if (bounds[j].hi >= theta) all_below = false;
    if (bounds[j].hi > bounds[highest].hi) highest = j;
  }
  if (all_below) {
    return {Outcome::kFalsified, witness_of(bounds[highest]),
            "upper bound of " + r.var + " stays below " + fmt(theta) + " until t=" +
                fmt(r.deadline) + " (max " + fmt(bounds[highest].hi) + ")"};
  }
  const std::size_t block = k == 0 ? 0 : k - 1;
  return {Outcome::kUnknown, witness_of(bounds[block]),
          "lower bound of " + r.var + " is " + fmt(bounds[block].lo) + " < " + fmt(theta) +
              " at t=" + fmt(bounds[block].t_lo)};
}

Verdict check_settling_flowpipe(const Flowpipe& fp, const SettlingBand& r) {
  validate(r);
  const auto bounds = flowpipe_bounds(fp, r.var);
  const Interval band = band_of(r);
  const std::size_t n = bounds.size();

  std::size_t k = n;
  while (k > 0 && band.contains(Interval{bounds[k - 1].lo, bounds[k - 1].hi})) --k;

  const bool in_time = k < n && (!r.from_time || bounds[k].t_lo <= *r.from_time + time_slack(*r.from_time));
  if (k < n && in_time) {
    return {Outcome::kVerified, witness_of(bounds[k]),
            r.var + " stays in [" + fmt(band.lo) + ", " + fmt(band.hi) + "] from t=" +
                fmt(bounds[k].t_lo)};
  }
  const auto& last = bounds.back();
  if (!band.intersects(Interval{last.lo, last.hi})) {
    return {Outcome::kFalsified, witness_of(last),
            r.var + " is in [" + fmt(last.lo) + ", " + fmt(last.hi) + "] at the horizon, outside [" +
                fmt(band.lo) + ", " + fmt(band.hi) + "]"};
  }
  if (k < n) {
    return {Outcome::kUnknown, witness_of(bounds[k]),
            "band entered at t=" + fmt(bounds[k].t_lo) + ", after the required time"};
  }
  return {Outcome::kUnknown, witness_of(last),
          r.var + " hull [" + fmt(last.lo) + ", " + fmt(last.hi) + "] at t=" + fmt(last.t_lo) +
              " overlaps the band edge"};
}

Verdict check_safety_flowpipe(const Flowpipe& fp, const SafetyBox& r) {
  validate(r);
  const auto bounds = flowpipe_bounds(fp, r.var);
  const Interval safe{r.lo, r.hi};
  const double t1 = r.t1 - time_slack(r.t1);
  const double t2 = r.t2 + time_slack(r.t2);

  std::optional<std::size_t> blocking;
  std::optional<std::size_t> first;
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    const auto& s = bounds[k];
    if (s.t_lo > t2 || s.t_hi < t1) continue;
    if (!first) first = k;
    const Interval hull{s.lo, s.hi};
    if (!safe.intersects(hull)) {
      return {Outcome::kFalsified, witness_of(s),
              r.var + " hull [" + fmt(s.lo) + ", " + fmt(s.hi) + "] at t=" + fmt(s.t_lo) +
                  " lies outside [" + fmt(r.lo) + ", " + fmt(r.hi) + "]"};
    }
    if (!blocking && !safe.contains(hull)) blocking = k;
  }
  if (!first) {
    return {Outcome::kUnknown, Witness{r.t1, r.lo, r.hi}, "time window is outside the flowpipe"};
  }
  if (blocking) {
    const auto& s = bounds[*blocking];
    return {Outcome::kUnknown, witness_of(s),
            r.var + " hull [" + fmt(s.lo) + ", " + fmt(s.hi) + "] at t=" + fmt(s.t_lo) +
                " crosses the safe range"};
  }
  if (fp.t_hi(fp.step_count() - 1) < r.t2 - time_slack(r.t2)) {
    return {Outcome::kUnknown, witness_of(bounds.back()), "time window extends past the horizon"};
  }
  double lo = bounds[*first].lo, hi = bounds[*first].hi;
  for (std::size_t k = *first; k < bounds.size() && bounds[k].t_lo <= t2; ++k) {
    lo = std::min(lo, bounds[k].lo);
    hi = std::max(hi, bounds[k].hi);
  }
  return {Outcome::kVerified, Witness{r.t1, lo, hi},
          r.var + " stays in [" + fmt(lo) + ", " + fmt(hi) + "] over the window"};
}

Verdict check_flowpipe(const Flowpipe& fp, const Requirement& r) {
  return std::visit(
      [&](const auto& q) -> Verdict {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, RiseTime>) return check_rise_time_flowpipe(fp, q);
        else if constexpr (std::is_same_v<T, SettlingBand>) return check_settling_flowpipe(fp, q);
        else return check_safety_flowpipe(fp, q);
      },
      r);
}

namespace {

Verdict rise_on_trajectory(const Trajectory& tr, const RiseTime& r) {
  const double theta = r.fraction * r.reference;
  const auto rt = rise_time_of(tr, r.var, theta);
  if (rt && *rt <= r.deadline) {
    return {Outcome::kVerified, Witness{*rt, theta, theta},
            r.var + " reaches " + fmt(theta) + " at t=" + fmt(*rt)};
  }
  const std::size_t i = tr.index_of(r.var);
  double best = tr.states[0][i];
  for (std::size_t k = 0; k < tr.size() && tr.times[k] <= r.deadline; ++k) {
    best = std::max(best, tr.states[k][i]);
  }
  return {Outcome::kFalsified, Witness{rt.value_or(r.deadline), best, best},
          rt ? r.var + " reaches " + fmt(theta) + " only at t=" + fmt(*rt)
             : r.var + " never reaches " + fmt(theta)};
}

Verdict settling_on_trajectory(const Trajectory& tr, const SettlingBand& r) {
  const std::size_t i = tr.index_of(r.var);
  const Interval band = band_of(r);
  std::optional<std::size_t> last_bad;
  for (std::size_t k = tr.size(); k-- > 0;) {
    if (!band.contains(tr.states[k][i])) {
      last_bad = k;
      break;
    }
  }
  if (last_bad && *last_bad + 1 == tr.size()) {
    const double v = tr.states.back()[i];
    return {Outcome::kFalsified, Witness{tr.times.back(), v, v},
            r.var + " = " + fmt(v) + " at the horizon, outside the band"};
  }
  double entry = 0.0;
  if (last_bad) {
    const std::size_t a = *last_bad;
    const double va = tr.states[a][i], vb = tr.states[a + 1][i];
    const double edge = va < band.lo ? band.lo : band.hi;
    entry = tr.times[a] + (edge - va) / (vb - va) * (tr.times[a + 1] - tr.times[a]);
  }
  const double v = tr.states[last_bad ? *last_bad + 1 : 0][i];
  if (r.from_time && entry > *r.from_time) {
    return {Outcome::kFalsified, Witness{entry, v, v},
            r.var + " settles only at t=" + fmt(entry)};
  }
  return {Outcome::kVerified, Witness{entry, v, v},
          r.var + " enters the band at t=" + fmt(entry) + " and stays"};
}

Verdict safety_on_trajectory(const Trajectory& tr, const SafetyBox& r) {
  const std::size_t i = tr.index_of(r.var);
  bool any = false;
  double lo = 0.0, hi = 0.0;
  for (std::size_t k = 0; k < tr.size(); ++k) {
    if (tr.times[k] < r.t1 - time_slack(r.t1) || tr.times[k] > r.t2 + time_slack(r.t2)) continue;
    const double v = tr.states[k][i];
    if (v < r.lo || v > r.hi) {
      return {Outcome::kFalsified, Witness{tr.times[k], v, v},
              r.var + " = " + fmt(v) + " at t=" + fmt(tr.times[k])};
    }
    lo = any ? std::min(lo, v) : v;
    hi = any ? std::max(hi, v) : v;
    any = true;
  }
  if (!any) throw Error("safety window contains no trajectory samples");
  return {Outcome::kVerified, Witness{r.t1, lo, hi},
          r.var + " stays in [" + fmt(lo) + ", " + fmt(hi) + "]"};
}

}  // namespace

Verdict check_on_trajectory(const Trajectory& traj, const Requirement& r) {
  validate(r);
  if (traj.size() == 0) throw Error("empty trajectory");
  return std::visit(
      [&](const auto& q) -> Verdict {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, RiseTime>) return rise_on_trajectory(traj, q);
        else if constexpr (std::is_same_v<T, SettlingBand>) return settling_on_trajectory(traj, q);
        else return safety_on_trajectory(traj, q);
      },
      r);
}

}  // namespace reachpipe
