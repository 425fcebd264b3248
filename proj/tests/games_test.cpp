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

#include "uncloneable/games.hpp"

#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "uncloneable/errors.hpp"

namespace uncloneable {
namespace {

// Frozen from tests/oracles/cloning_values.py.
constexpr double kBreidbart1 = 0.853553390593274;
constexpr double kBreidbart2 = 0.728553390593274;
constexpr double kBreidbart3 = 0.621859216769111;
constexpr double kSplitMeasure2 = 0.25;

GameOptions exact() { return GameOptions{}; }

GameOptions monte_carlo(std::size_t trials, std::uint64_t seed,
                        unsigned threads = 0) {
  GameOptions o;
  o.mode = GameMode::kMonteCarlo;
  o.trials = trials;
  o.seed = seed;
  o.threads = threads;
  return o;
}

TEST(CloningGameTest, BreidbartMatchesBruteForce) {
  const double want[] = {kBreidbart1, kBreidbart2, kBreidbart3};
  for (int lambda = 1; lambda <= 3; ++lambda) {
    const ConjugateEncryption ce(lambda);
    const GameReport r = eval_cloning_game(ce, breidbart_attack(ce),
                                           MessageDistribution::uniform(lambda),
                                           exact());
    EXPECT_NEAR(r.value, want[lambda - 1], 1e-12);
    EXPECT_NEAR(r.bound, std::pow(0.5 + std::sqrt(2.0) / 4, lambda), 1e-12);
    EXPECT_TRUE(r.bound_satisfied);
    EXPECT_EQ(r.std_error, 0.0);
  }
}

TEST(CloningGameTest, SplitMeasureMatchesBruteForce) {
  const ConjugateEncryption ce(2);
  const GameReport r = eval_cloning_game(ce, split_measure_attack(ce),
                                         MessageDistribution::uniform(2), exact());
  EXPECT_NEAR(r.value, kSplitMeasure2, 1e-12);
}

TEST(CloningGameTest, ExactCapacityIsEnforced) {
  const ConjugateEncryption ce(8);
  EXPECT_THROW(eval_cloning_game(ce, breidbart_attack(ce),
                                 MessageDistribution::uniform(8), exact()),
               CapacityError);
}

TEST(CloningGameTest, MonteCarloIsReproducible) {
  const ConjugateEncryption ce(3);
  const CloningAttack a = breidbart_attack(ce);
  const MessageDistribution u = MessageDistribution::uniform(3);
  const GameReport one = eval_cloning_game(ce, a, u, monte_carlo(3000, 8, 1));
  const GameReport four = eval_cloning_game(ce, a, u, monte_carlo(3000, 8, 4));
  const GameReport again = eval_cloning_game(ce, a, u, monte_carlo(3000, 8, 4));
  EXPECT_EQ(one.value, four.value);
  EXPECT_EQ(four.value, again.value);
  const GameReport other = eval_cloning_game(ce, a, u, monte_carlo(3000, 9, 4));
  EXPECT_NE(one.value, other.value);
  EXPECT_LT(std::abs(one.value - kBreidbart3), 4 * one.std_error);
  EXPECT_THROW(eval_cloning_game(ce, a, u, monte_carlo(0, 1)), ArgumentError);
}

TEST(CloningGameTest, MinEntropyExperiment) {
  const ConjugateEncryption ce(2);
  const BitString heavy = BitString::zeros(2);
  const GameReport r =
      min_entropy_experiment(ce, guess_attack(ce, heavy), 1.0, exact());
  EXPECT_EQ(r.game, "min_entropy");
  EXPECT_NEAR(r.value, 0.5, 1e-12);
  EXPECT_LE(r.value, r.bound + 1e-9);
  EXPECT_THROW(min_entropy_experiment(ce, guess_attack(ce, heavy), 3.0, exact()),
               ArgumentError);
}

TEST(MessageDistributionTest, Families) {
  const MessageDistribution u = MessageDistribution::uniform(3);
  EXPECT_NEAR(u.min_entropy(), 3.0, 1e-12);
  EXPECT_EQ(u.message_bits(), 3);
  const MessageDistribution p = MessageDistribution::point_mass(BitString(5, 3));
  EXPECT_NEAR(p.min_entropy(), 0.0, 1e-12);
  for (double h : {0.0, 0.5, 1.0, 2.3, 4.0}) {
    const MessageDistribution d = MessageDistribution::min_entropy_family(4, h);
    double sum = 0.0;
    for (const auto& [m, q] : d.table()) sum += q;
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_NEAR(d.min_entropy(), h, 1e-9);
  }
  EXPECT_THROW(MessageDistribution::min_entropy_family(3, 3.5), ArgumentError);
  EXPECT_THROW(MessageDistribution({{BitString(0, 1), 0.7}}, "bad"), ArgumentError);
  Rng rng(1);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(p.sample(rng), BitString(5, 3));
}

TEST(DistinguishingGameTest, ConjugateEncryptionHidesTheBit) {
  const ConjugateEncryption ce(2);
  EXPECT_NEAR(eval_distinguishing_game(ce, random_coin_attack(ce), exact()).value,
              0.5, 1e-12);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GameReport r =
        eval_distinguishing_game(ce, random_distinguishing_attack(ce, seed), exact());
    EXPECT_NEAR(r.value, 0.5, 1e-9);
    EXPECT_TRUE(r.bound_satisfied);
  }
}

TEST(DistinguishingGameTest, LeakedKeyIsANegativeControl) {
  const auto otp = otp_classical(2);
  GameOptions o = exact();
  o.leak_key = true;
  EXPECT_NEAR(eval_distinguishing_game(*otp, leaked_key_attack(otp), o).value, 1.0,
              1e-12);
  EXPECT_THROW(eval_distinguishing_game(*otp, leaked_key_attack(otp), exact()),
               ArgumentError);
}

TEST(CloningDistinguishingGameTest, ReferenceAttacks) {
  const ConjugateEncryption ce(2);
  EXPECT_NEAR(
      eval_cloning_distinguishing_game(ce, fixed_bit_cd_attack(ce, 1), exact()).value,
      0.5, 1e-12);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const GameReport r =
        eval_cloning_distinguishing_game(ce, random_cd_attack(ce, seed), exact());
    EXPECT_LE(r.value, 0.5 + 1e-9);
  }
}

TEST(CloningDistinguishingGameTest, HalfSplitWinsWhenBothHalvesGetTheKey) {
  const ConjugateEncryption ce(2);
  const GameReport r =
      eval_cloning_distinguishing_game(ce, half_split_cd_attack(ce), exact());
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_FALSE(r.bound_satisfied);
  EXPECT_THROW(half_split_cd_attack(ConjugateEncryption(1)), ArgumentError);
}

TEST(BoundCurvesTest, Rows) {
  const auto rows = bound_curves(1, 10);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_NEAR(rows[0].conjugate, kBreidbart1, 1e-12);
  EXPECT_EQ(rows[0].qprf, 1.0);
  EXPECT_EQ(rows[4].ideal, 0.03125);
  EXPECT_NEAR(rows[4].conjugate, 0.453057640848816, 1e-12);
  EXPECT_NEAR(rows[4].qprf, 0.28125, 1e-15);
  EXPECT_NEAR(rows[9].conjugate, 0.205261225931495, 1e-12);
  EXPECT_NEAR(rows[9].qprf, 0.0087890625, 1e-15);
  for (const BoundRow& r : rows) {
    EXPECT_EQ(r.classical, 1.0);
    EXPECT_LE(r.ideal, r.conjugate);
  }
  EXPECT_THROW(bound_curves(0, 3), ArgumentError);
  EXPECT_THROW(bound_curves(4, 3), ArgumentError);
}

TEST(BoundCurvesTest, WitnessCsv) {
  CurveOptions o;
  o.exact_max_n = 3;
  const auto rows = witness_curve(1, 3, o);
  const std::string csv = curve_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,classical,ideal,conjugate,qprf,measured_attack,measured_value");
  EXPECT_NEAR(rows[1].measured_value, kBreidbart2, 1e-12);
  EXPECT_EQ(csv, curve_csv(witness_curve(1, 3, o)));
  o.witness = "nope";
  EXPECT_THROW(witness_curve(1, 2, o), ArgumentError);
}

TEST(XorShiftTest, HoldsForArbitraryTables) {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> table(64);
    for (double& v : table) v = uniform01(rng) * 1e3 - 500.0;
    for (const BitString& s : all_bitstrings(3)) {
      EXPECT_TRUE(xor_shift_identity_check(table, s));
    }
  }
  std::vector<double> one_hot(16, 0.0);
  one_hot[0 * 4 + 1] = 1.0;
  EXPECT_TRUE(xor_shift_identity_check(one_hot, BitString(1, 2)));
  EXPECT_THROW(xor_shift_identity_check(one_hot, BitString(0, 3)), ArgumentError);
}

TEST(GameReportTest, JsonFieldOrderAndCsv) {
  const ConjugateEncryption ce(1);
  const GameReport r = eval_cloning_game(ce, breidbart_attack(ce),
                                         MessageDistribution::uniform(1), exact());
  const auto j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> want = {
      "game",  "scheme",    "attack",     "lambda",          "message_bits",
      "distribution", "mode", "trials",   "value",           "std_error",
      "bound", "bound_name", "bound_satisfied", "bound_heuristic", "seed",
      "oracle_samples", "notes"};
  EXPECT_EQ(keys, want);
  EXPECT_EQ(j["mode"], "exact");
  const std::string row = r.csv_row();
  EXPECT_EQ(row.rfind("cloning,ce,breidbart,1,1,uniform,exact,0,", 0), 0u);
  EXPECT_NE(row.find("\"2^(t-h), t="), std::string::npos);
  EXPECT_EQ(GameReport::csv_header().substr(0, 17), "game,scheme,attac");
  EXPECT_EQ(parse_game_mode("mc"), GameMode::kMonteCarlo);
  EXPECT_THROW(parse_game_mode("fast"), ArgumentError);
}

}  // namespace
}  // namespace uncloneable
