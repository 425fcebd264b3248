// Copyright 2026 The Uncloneable Authors
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

#include "uncloneable/moe.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "uncloneable/errors.hpp"
#include "uncloneable/games.hpp"

namespace uncloneable {
namespace {

const double kOptimalOneRound = 0.5 + std::sqrt(2.0) / 4.0;

TEST(MoeTest, BreidbartStrategyValues) {
  EXPECT_NEAR(moe_value(breidbart_moe_strategy(1)), 0.8535533905932737, 1e-12);
  EXPECT_NEAR(moe_value(breidbart_moe_strategy(2)),
              kOptimalOneRound * kOptimalOneRound, 1e-12);
  EXPECT_NEAR(moe_value(to_state_form(breidbart_moe_strategy(1))),
              kOptimalOneRound, 1e-12);
}

TEST(MoeTest, BoundIsPowerOfOneRoundOptimum) {
  EXPECT_NEAR(moe_bound(1), kOptimalOneRound, 1e-15);
  EXPECT_NEAR(moe_bound(3), std::pow(kOptimalOneRound, 3), 1e-15);
}

TEST(MoeTest, TrivialStrategyWinsWithGuessProbability) {
  for (int lambda = 1; lambda <= 3; ++lambda) {
    EXPECT_NEAR(moe_value(trivial_moe_strategy(lambda)), std::ldexp(1.0, -lambda),
                1e-12);
  }
}

TEST(MoeTest, RandomStrategiesStayBelowBound) {
  for (int lambda = 1; lambda <= 2; ++lambda) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const MoeStrategy s = random_moe_strategy(lambda, 2, 3, seed);
      EXPECT_NO_THROW(validate(s));
      EXPECT_LE(moe_value(s), moe_bound(lambda) + 1e-9);
      const MoeChannelStrategy c = random_moe_channel_strategy(lambda, 2, 2, seed);
      EXPECT_NEAR(moe_value(c), moe_value(to_state_form(c)), 1e-9);
      EXPECT_LE(moe_value(c), moe_bound(lambda) + 1e-9);
    }
  }
}

TEST(MoeTest, ValidationRejectsMissingPovms) {
  MoeStrategy s = trivial_moe_strategy(1);
  s.b_povms.pop_back();
  EXPECT_THROW(validate(s), ArgumentError);
}

TEST(SeesawTest, MonotoneAndReachesOneRoundOptimum) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    SeesawOptions o;
    o.seed = seed;
    const SeesawResult r = seesaw_optimize_moe(o);
    for (std::size_t i = 1; i < r.history.size(); ++i) {
      EXPECT_GE(r.history[i], r.history[i - 1] - 1e-12);
    }
    EXPECT_NEAR(r.value, kOptimalOneRound, 1e-8);
    EXPECT_LE(r.value, moe_bound(1) + 1e-9);
    EXPECT_NEAR(moe_value(r.strategy), r.value, 1e-9);
  }
}

TEST(SeesawTest, OneDimensionalRegistersSuffice) {
  SeesawOptions o;
  o.dim_b = 1;
  o.dim_c = 1;
  o.seed = 2;
  EXPECT_NEAR(seesaw_optimize_moe(o).value, kOptimalOneRound, 1e-8);
}

TEST(SeesawTest, TwoRoundsStayBelowBound) {
  SeesawOptions o;
  o.lambda = 2;
  o.seed = 1;
  const SeesawResult r = seesaw_optimize_moe(o);
  EXPECT_LE(r.value, moe_bound(2) + 1e-9);
  EXPECT_GT(r.value, 0.5);
}

TEST(SeesawTest, RejectsUnsupportedSizes) {
  SeesawOptions o;
  o.lambda = 3;
  EXPECT_THROW(seesaw_optimize_moe(o), ArgumentError);
  o.lambda = 1;
  o.max_iterations = 0;
  EXPECT_THROW(seesaw_optimize_moe(o), ArgumentError);
}

TEST(MoeGameTest, ReportCarriesBound) {
  const GameReport r = eval_moe_game(breidbart_moe_strategy(1), "breidbart");
  EXPECT_EQ(r.game, "moe");
  EXPECT_NEAR(r.value, kOptimalOneRound, 1e-12);
  EXPECT_TRUE(r.bound_satisfied);
  EXPECT_THROW(eval_moe_game(trivial_moe_strategy(4)), ArgumentError);
}

}  // namespace
}  // namespace uncloneable
