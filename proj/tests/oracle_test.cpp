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

#include "uncloneable/oracle.hpp"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "uncloneable/errors.hpp"
#include "uncloneable/hash.hpp"

namespace uncloneable {
namespace {

TEST(HashTest, KnownDigests) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const auto out = shake256({}, 4);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0], 0x46);
  EXPECT_EQ(out[1], 0xb9);
}

TEST(RandomOracleTest, DeterministicPerSeed) {
  const RandomOracle a(expand_seed(7), 6, 10);
  const RandomOracle b(expand_seed(7), 6, 10);
  const RandomOracle c(expand_seed(8), 6, 10);
  int differ = 0;
  for (const BitString& x : all_bitstrings(6)) {
    EXPECT_EQ(a.eval(x), b.eval(x));
    EXPECT_EQ(a.eval(x).length(), 10);
    differ += a.eval(x) != c.eval(x);
  }
  EXPECT_GT(differ, 55);
}

TEST(RandomOracleTest, ReprogramTouchesOnePoint) {
  const RandomOracle h(expand_seed(1), 4, 3);
  const BitString x = BitString::parse("0101");
  const BitString y = h.eval(x) ^ BitString::parse("111");
  const RandomOracle g = h.reprogram(x, y);
  EXPECT_EQ(g.eval(x), y);
  for (const BitString& z : all_bitstrings(4)) {
    if (z != x) EXPECT_EQ(g.eval(z), h.eval(z));
  }
  EXPECT_EQ(h.patches().size(), 0u);
  EXPECT_THROW(h.reprogram(x, BitString(0, 2)), ArgumentError);
  EXPECT_THROW(h.eval(BitString(0, 3)), ArgumentError);
}

TEST(RandomOracleTest, ReprogramOrderIndependentOnDistinctPoints) {
  const RandomOracle h(expand_seed(2), 3, 3);
  const BitString x1(1, 3), x2(6, 3), y1(5, 3), y2(2, 3);
  const RandomOracle a = h.reprogram(x1, y1).reprogram(x2, y2);
  const RandomOracle b = h.reprogram(x2, y2).reprogram(x1, y1);
  for (const BitString& z : all_bitstrings(3)) EXPECT_EQ(a.eval(z), b.eval(z));
}

TEST(RandomOracleTest, EveryFunctionReachableByPatching) {
  // All 16 functions {0,1}^2 -> {0,1} arise from one base oracle.
  const RandomOracle base(expand_seed(3), 2, 1);
  std::set<std::uint64_t> seen;
  for (std::uint64_t code = 0; code < 16; ++code) {
    RandomOracle h = base;
    for (const BitString& x : all_bitstrings(2)) {
      h = h.reprogram(x, BitString((code >> x.value()) & 1, 1));
    }
    std::uint64_t got = 0;
    for (const BitString& x : all_bitstrings(2)) got |= h.eval(x).value() << x.value();
    EXPECT_EQ(got, code);
    seen.insert(got);
  }
  EXPECT_EQ(seen.size(), 16u);
}

TEST(RandomOracleTest, OutputBitsLookUnbiased) {
  const RandomOracle h(expand_seed(4), 12, 1);
  int ones = 0;
  for (const BitString& x : all_bitstrings(12)) ones += h.eval(x).value();
  EXPECT_NEAR(ones / 4096.0, 0.5, 5 * std::sqrt(0.25 / 4096));
}

TEST(RandomOracleTest, FamilyMembersDiffer) {
  const auto family = oracle_family(9, 4, 8, 8);
  ASSERT_EQ(family.size(), 4u);
  EXPECT_NE(family[0].seed(), family[1].seed());
  EXPECT_THROW(oracle_family(9, 0, 8, 8), ArgumentError);
  EXPECT_THROW(RandomOracle(expand_seed(0), 0, 4), ArgumentError);
}

TEST(QprfTest, DeterministicAndKeyed) {
  const QprfKey k1{BitString::parse("101101")};
  const QprfKey k2{BitString::parse("101100")};
  int differ = 0;
  for (const BitString& x : all_bitstrings(6)) {
    EXPECT_EQ(qprf_eval(k1, x, 8), qprf_eval(k1, x, 8));
    differ += qprf_eval(k1, x, 8) != qprf_eval(k2, x, 8);
  }
  EXPECT_GT(differ, 60);
  EXPECT_THROW(qprf_eval(k1, BitString(0, 5), 8), ArgumentError);
  const RandomOracle f = RandomOracle::from_qprf(k1, 8);
  EXPECT_TRUE(f.is_qprf());
  EXPECT_EQ(f.eval(BitString(3, 6)), qprf_eval(k1, BitString(3, 6), 8));
}

TEST(QprfTest, OutputBitsLookUnbiased) {
  const QprfKey k{BitString::parse("0011010111")};
  int ones = 0;
  for (const BitString& x : all_bitstrings(10)) ones += qprf_eval(k, x, 1).value();
  EXPECT_NEAR(ones / 1024.0, 0.5, 5 * std::sqrt(0.25 / 1024));
}

TEST(OracleUnitaryTest, MapsBasisStates) {
  const RandomOracle h(expand_seed(5), 2, 2);
  for (const BitString& x : all_bitstrings(2)) {
    for (const BitString& y : all_bitstrings(2)) {
      const PureState out = oracle_unitary_apply(
          h, PureState::basis(x.concat(y)), {0, 1}, {2, 3});
      const BitString want = x.concat(y ^ h.eval(x));
      EXPECT_NEAR(std::abs(out.amplitudes()(static_cast<Eigen::Index>(want.value()))),
                  1.0, 1e-12);
    }
  }
}

TEST(OracleUnitaryTest, InvolutionAndLinearity) {
  const RandomOracle h(expand_seed(6), 2, 1);
  Rng rng(6);
  const PureState psi = random_pure_state(8, rng);
  const PureState once = oracle_unitary_apply(h, psi, {1, 2}, {0});
  EXPECT_NEAR(once.amplitudes().norm(), 1.0, 1e-12);
  const PureState twice = oracle_unitary_apply(h, once, {1, 2}, {0});
  EXPECT_LT((twice.amplitudes() - psi.amplitudes()).norm(), 1e-12);

  const PureState a = PureState::basis(BitString(1, 3));
  const PureState b = PureState::basis(BitString(6, 3));
  const PureState sum(std::sqrt(0.5) * (a.amplitudes() + b.amplitudes()));
  const Vector lhs = oracle_unitary_apply(h, sum, {1, 2}, {0}).amplitudes();
  const Vector rhs =
      std::sqrt(0.5) * (oracle_unitary_apply(h, a, {1, 2}, {0}).amplitudes() +
                        oracle_unitary_apply(h, b, {1, 2}, {0}).amplitudes());
  EXPECT_LT((lhs - rhs).norm(), 1e-12);
}

TEST(OracleUnitaryTest, RejectsBadRegisters) {
  const RandomOracle h(expand_seed(6), 2, 1);
  const PureState psi = PureState::basis(BitString(0, 3));
  EXPECT_THROW(oracle_unitary_apply(h, psi, {0}, {1}), ArgumentError);
  EXPECT_THROW(oracle_unitary_apply(h, psi, {0, 1}, {1}), ArgumentError);
  EXPECT_THROW(oracle_unitary_apply(h, psi, {0, 3}, {2}), ArgumentError);
}

}  // namespace
}  // namespace uncloneable
