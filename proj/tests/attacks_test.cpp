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

#include "uncloneable/attacks.hpp"

#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "uncloneable/errors.hpp"
#include "uncloneable/games.hpp"

namespace uncloneable {
namespace {

GameOptions exact() { return GameOptions{}; }

GameOptions monte_carlo(std::size_t trials, std::uint64_t seed) {
  GameOptions o;
  o.mode = GameMode::kMonteCarlo;
  o.trials = trials;
  o.seed = seed;
  return o;
}

TEST(CloningAttackTest, CopyOnlyForClassicalCiphertexts) {
  EXPECT_THROW(copy_attack(std::make_shared<ConjugateEncryption>(2)),
               UnsupportedError);
  const auto otp = otp_classical(2);
  const GameReport r = eval_cloning_game(*otp, copy_attack(otp),
                                         MessageDistribution::uniform(2), exact());
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(CloningAttackTest, ConstructorsValidateScheme) {
  EXPECT_THROW(split_measure_attack(ConjugateEncryption(3)), ArgumentError);
  EXPECT_THROW(breidbart_attack(*otp_classical(2)), UnsupportedError);
  EXPECT_THROW(guess_attack(ConjugateEncryption(2), BitString(0, 3)),
               ArgumentError);
}

TEST(CloningAttackTest, IncompatibleSchemeRejectedByGame) {
  const ConjugateEncryption ce2(2);
  const ConjugateEncryption ce3(3);
  EXPECT_THROW(eval_cloning_game(ce3, breidbart_attack(ce2),
                                 MessageDistribution::uniform(3), exact()),
               ArgumentError);
}

TEST(CloningAttackTest, GuessWinsOnPointMass) {
  const ConjugateEncryption ce(3);
  const BitString m = BitString::parse("101");
  const GameReport r = eval_cloning_game(ce, guess_attack(ce, m),
                                         MessageDistribution::point_mass(m), exact());
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(CloningAttackTest, SplitInstrumentMustBeTracePreserving) {
  const Matrix half = 0.5 * Matrix::Identity(2, 2);
  EXPECT_THROW(SplitInstrument({{BitString(), {half}}}, 2, 2, 1), ValidityError);
  EXPECT_THROW(SplitInstrument({}, 2, 2, 1), ArgumentError);
  EXPECT_NO_THROW(SplitInstrument({{BitString(), {Matrix::Identity(2, 2)}}}, 2, 2, 1));
}

TEST(TransformTest, ProducesValidInstrumentsAndDecoders) {
  const ConjugateEncryption ce(2);
  const CloningAttack t = transform_cd_to_cloning(random_cd_attack(ce, 4));
  const KrausChannel ch = t.split(std::nullopt).as_channel();
  Matrix sum = Matrix::Zero(4, 4);
  for (const Matrix& k : ch.kraus()) sum += k.adjoint() * k;
  EXPECT_LT((sum - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(TransformTest, ConstantMessageWinsWithItsProbability) {
  // The transformed constant-message attack wins exactly when m = m*.
  const ConjugateEncryption ce(2);
  const BitString m_star = BitString::parse("10");
  const CloningAttack t =
      transform_cd_to_cloning(constant_message_cd_attack(ce, m_star));
  const MessageDistribution point = MessageDistribution::point_mass(m_star);
  EXPECT_NEAR(eval_cloning_game(ce, t, point, exact()).value, 1.0, 1e-12);
  const MessageDistribution uniform = MessageDistribution::uniform(2);
  EXPECT_NEAR(eval_cloning_game(ce, t, uniform, exact()).value, 0.25, 1e-12);
}

TEST(TransformTest, RandomCdRejectsClassicalCiphertexts) {
  FceOptions opts;
  opts.lambda = 2;
  opts.message_bits = 2;
  opts.oracle_samples = 2;
  EXPECT_THROW(random_cd_attack(FConjugateEncryption(opts), 1), UnsupportedError);
}

TEST(CloningAttackTest, SamplerViewAgreesWithSplitView) {
  const ConjugateEncryption ce(2);
  const CloningAttack b = breidbart_attack(ce);
  ASSERT_TRUE(static_cast<bool>(b.sampler));
  const MessageDistribution u = MessageDistribution::uniform(2);
  const double exact_value = eval_cloning_game(ce, b, u, exact()).value;
  CloningAttack split_only = b;
  split_only.sampler = nullptr;
  const GameReport via_sampler = eval_cloning_game(ce, b, u, monte_carlo(20000, 3));
  const GameReport via_split =
      eval_cloning_game(ce, split_only, u, monte_carlo(20000, 3));
  EXPECT_LT(std::abs(via_sampler.value - exact_value), 4 * via_sampler.std_error);
  EXPECT_LT(std::abs(via_split.value - exact_value), 4 * via_split.std_error);
}

TEST(GenDecompositionTest, SplitsByMessage) {
  const ConjugateEncryption ce(2);
  const CloningDistinguishingAttack a = half_split_cd_attack(ce);
  const auto branches = decompose_gen(*a.gen, a.dim_s, a.message_bits);
  double total = 0.0;
  for (const GenBranch& b : branches) {
    EXPECT_EQ(b.message.length(), 2);
    total += b.probability;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  double side_total = 0.0;
  for (const auto& [p, v] : side_marginal(*a.gen, a.dim_s, a.message_bits)) {
    side_total += p;
  }
  EXPECT_NEAR(side_total, 1.0, 1e-12);
}

}  // namespace
}  // namespace uncloneable
