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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "reachpipe/error.hpp"
#include "reachpipe/monitor.hpp"

namespace reachpipe {
namespace {

const Flowpipe& cruise_flowpipe() {
  static const Flowpipe fp = compute_flowpipe(closed_loop_cruise({}, {}), Box({{0, 2}, {0, 0}}),
                                              {0.025, 10.0, 20.0, true});
  return fp;
}

Trajectory nominal() {
  return simulate(closed_loop_cruise({}, {}), {0.0, 0.0}, 0.001, 10.0);
}

TEST(RiseTimeFlowpipe, VerifiedByFive) {
  const Verdict v = check_rise_time_flowpipe(cruise_flowpipe(), {"v", 15.0, 0.9, 5.0});
  EXPECT_EQ(v.outcome, Outcome::kVerified) << v.explanation;
  EXPECT_GE(v.witness.lo, 13.5);
  EXPECT_GT(v.witness.time, std::log(10.0) / 0.8 - 0.1);
  EXPECT_LE(v.witness.time + 0.025, 5.0);
}

TEST(RiseTimeFlowpipe, FalsifiedByOne) {
  const Verdict v = check_rise_time_flowpipe(cruise_flowpipe(), {"v", 15.0, 0.9, 1.0});
  EXPECT_EQ(v.outcome, Outcome::kFalsified) << v.explanation;
  EXPECT_LT(v.witness.hi, 13.5);
  // v(1) from v0 = 2 is about 9.09; the bound is only a little above that.
  EXPECT_GT(v.witness.hi, 9.09);
  EXPECT_LT(v.witness.hi, 9.3);
}

TEST(RiseTimeFlowpipe, ThresholdBelowInitialSet) {
  const Verdict v = check_rise_time_flowpipe(cruise_flowpipe(), {"v", -10.0, 0.5, 1.0});
  EXPECT_EQ(v.outcome, Outcome::kVerified);
  EXPECT_EQ(v.witness.time, 0.0);
}

TEST(RiseTimeFlowpipe, UnknownWhenSetStraddlesThreshold) {
  // Starting from v0 = 2 the speed reaches 12 near t = 1.88, from v0 = 0 only
  // near t = 2.01.
  const Verdict v = check_rise_time_flowpipe(cruise_flowpipe(), {"v", 15.0, 0.8, 1.95});
  EXPECT_EQ(v.outcome, Outcome::kUnknown) << v.explanation;
}

TEST(SettlingFlowpipe, VerifiedAtFivePercent) {
  const Verdict v = check_settling_flowpipe(cruise_flowpipe(), {"v", 15.0, 0.05, std::nullopt});
  EXPECT_EQ(v.outcome, Outcome::kVerified) << v.explanation;
  EXPECT_GE(v.witness.time, std::log(20.0) / 0.8 - 0.025);
  EXPECT_LE(v.witness.time, 4.7);
  EXPECT_GE(v.witness.lo, 14.25);
}

TEST(SettlingFlowpipe, UnreachableBandFalsified) {
  const Verdict v = check_settling_flowpipe(cruise_flowpipe(), {"v", 105.0, 5.0 / 105.0, std::nullopt});
  EXPECT_EQ(v.outcome, Outcome::kFalsified);
}

TEST(SettlingFlowpipe, WholeRangeBand) {
  // The first segment is bloated slightly below 0, so the suffix starts at k = 1.
  const Verdict v = check_settling_flowpipe(cruise_flowpipe(), {"v", 15.0, 1.0, std::nullopt});
  EXPECT_EQ(v.outcome, Outcome::kVerified);
  EXPECT_LE(v.witness.time, 0.025);
}

TEST(SettlingFlowpipe, TightBandUnknown) {
  const Verdict v = check_settling_flowpipe(cruise_flowpipe(), {"v", 15.0, 0.001, std::nullopt});
  EXPECT_EQ(v.outcome, Outcome::kUnknown);
}

TEST(SettlingFlowpipe, FromTime) {
  EXPECT_EQ(check_settling_flowpipe(cruise_flowpipe(), {"v", 15.0, 0.05, 3.0}).outcome,
            Outcome::kUnknown);
  EXPECT_EQ(check_settling_flowpipe(cruise_flowpipe(), {"v", 15.0, 0.05, 5.0}).outcome,
            Outcome::kVerified);
}

TEST(SafetyFlowpipe, Examples) {
  const Flowpipe& fp = cruise_flowpipe();
  // The bloated first segment dips to about -0.004, so [0, 30] cannot be
  // certified from t = 0; from the second segment on it can.
  EXPECT_EQ(check_safety_flowpipe(fp, {"v", 0, 30, 0, 10}).outcome, Outcome::kUnknown);
  EXPECT_EQ(check_safety_flowpipe(fp, {"v", -0.01, 30, 0, 10}).outcome, Outcome::kVerified);
  EXPECT_EQ(check_safety_flowpipe(fp, {"v", 0, 30, 0.05, 10}).outcome, Outcome::kVerified);
  EXPECT_EQ(check_safety_flowpipe(fp, {"v", 20, 30, 0, 10}).outcome, Outcome::kFalsified);
  EXPECT_EQ(check_safety_flowpipe(fp, {"v", 14, 15, 0, 1}).outcome, Outcome::kFalsified);
  EXPECT_EQ(check_safety_flowpipe(fp, {"v", -1, 30, 5, 20}).outcome, Outcome::kUnknown);
  EXPECT_EQ(check_safety_flowpipe(fp, {"v", -1, 30, 11, 20}).outcome, Outcome::kUnknown);
}

TEST(Monitor, ValidationAndUnknownVariable) {
  EXPECT_THROW(check_rise_time_flowpipe(cruise_flowpipe(), {"v", 15, 1.5, 5}), Error);
  EXPECT_THROW(check_rise_time_flowpipe(cruise_flowpipe(), {"v", 15, 0.9, 0}), Error);
  EXPECT_THROW(check_settling_flowpipe(cruise_flowpipe(), {"v", 15, 0.0, std::nullopt}), Error);
  EXPECT_THROW(check_safety_flowpipe(cruise_flowpipe(), {"v", 2, 1, 0, 1}), Error);
  EXPECT_THROW(check_safety_flowpipe(cruise_flowpipe(), {"v", 0, 1, 2, 1}), Error);
  EXPECT_THROW(check_rise_time_flowpipe(cruise_flowpipe(), {"w", 15, 0.9, 5}), Error);
  EXPECT_THROW(check_on_trajectory(nominal(), RiseTime{"w", 15, 0.9, 5}), Error);
}

TEST(Monitor, Describe) {
  EXPECT_EQ(describe(RiseTime{"v", 15, 0.9, 5}), "rise_time(v >= 13.5 by t=5)");
  EXPECT_EQ(describe(SettlingBand{"v", 15, 0.05, std::nullopt}), "settling(v in [14.25, 15.75])");
  EXPECT_EQ(describe(SafetyBox{"q", 0, 30, 0, 10}), "safety(q in [0, 30] over [0, 10])");
}

TEST(TrajectoryCheck, NominalRun) {
  const Trajectory tr = nominal();
  const Verdict rise = check_on_trajectory(tr, RiseTime{"v", 15, 0.9, 5});
  EXPECT_EQ(rise.outcome, Outcome::kVerified);
  EXPECT_NEAR(rise.witness.time, 2.878231366, 1e-4);
  EXPECT_EQ(check_on_trajectory(tr, RiseTime{"v", 15, 0.9, 2}).outcome, Outcome::kFalsified);

  const Verdict settle = check_on_trajectory(tr, SettlingBand{"v", 15, 0.05, std::nullopt});
  EXPECT_EQ(settle.outcome, Outcome::kVerified);
  EXPECT_NEAR(settle.witness.time, 3.744665342, 1e-4);
  EXPECT_EQ(check_on_trajectory(tr, SettlingBand{"v", 15, 0.05, 3.0}).outcome, Outcome::kFalsified);
  EXPECT_EQ(check_on_trajectory(tr, SettlingBand{"v", 15, 0.0001, std::nullopt}).outcome,
            Outcome::kFalsified);

  EXPECT_EQ(check_on_trajectory(tr, SafetyBox{"v", 0, 30, 0, 10}).outcome, Outcome::kVerified);
  EXPECT_EQ(check_on_trajectory(tr, SafetyBox{"v", 0, 10, 0, 10}).outcome, Outcome::kFalsified);
}

TEST(MonitorProperty, SoundnessCoupling) {
  const Flowpipe& fp = cruise_flowpipe();
  const std::vector<Requirement> reqs{
      RiseTime{"v", 15, 0.9, 5}, RiseTime{"v", 15, 0.9, 1}, SettlingBand{"v", 15, 0.05, std::nullopt},
      SettlingBand{"v", 15, 0.05, 5.0}, SafetyBox{"v", 20, 30, 0, 10}, SafetyBox{"v", -0.01, 30, 0, 10},
      SafetyBox{"q", -1, 19, 0, 10}};
  std::vector<Outcome> set_outcomes;
  for (const auto& r : reqs) set_outcomes.push_back(check_flowpipe(fp, r).outcome);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> v0(0.0, 2.0);
  const AffineDynamics dyn = closed_loop_cruise({}, {});
  for (int s = 0; s < 100; ++s) {
    const Trajectory tr = simulate(dyn, {v0(rng), 0.0}, 0.00025, 10.0);
    for (std::size_t i = 0; i < reqs.size(); ++i) {
      if (set_outcomes[i] == Outcome::kUnknown) continue;
      EXPECT_EQ(check_on_trajectory(tr, reqs[i]).outcome, set_outcomes[i])
          << describe(reqs[i]) << " sample " << s;
    }
  }
}

TEST(MonitorProperty, MonotoneInEpsilonAndDeadline) {
  const Flowpipe& fp = cruise_flowpipe();
  bool verified = false;
  for (double eps = 0.001; eps <= 1.0; eps += 0.001) {
    const bool now = check_settling_flowpipe(fp, {"v", 15, eps, std::nullopt}).outcome == Outcome::kVerified;
    EXPECT_TRUE(!verified || now) << eps;
    verified = verified || now;
  }
  EXPECT_TRUE(verified);
  verified = false;
  for (double d = 0.1; d <= 10.0; d += 0.05) {
    const bool now = check_rise_time_flowpipe(fp, {"v", 15, 0.9, d}).outcome == Outcome::kVerified;
    EXPECT_TRUE(!verified || now) << d;
    verified = verified || now;
  }
  EXPECT_TRUE(verified);
}

TEST(MonitorProperty, Deterministic) {
  const Verdict a = check_flowpipe(cruise_flowpipe(), SettlingBand{"v", 15, 0.05, std::nullopt});
  const Verdict b = check_flowpipe(cruise_flowpipe(), SettlingBand{"v", 15, 0.05, std::nullopt});
  EXPECT_EQ(a.outcome, b.outcome);
  EXPECT_EQ(a.witness.time, b.witness.time);
  EXPECT_EQ(a.explanation, b.explanation);
}

}  // namespace
}  // namespace reachpipe
