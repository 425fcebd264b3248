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

#include "uncloneable/schemes.hpp"

#include <cmath>
#include <memory>

#include <gtest/gtest.h>

#include "uncloneable/errors.hpp"

namespace uncloneable {
namespace {

Matrix average_ciphertext(const QecmScheme& scheme, const BitString& m) {
  const std::size_t dim = dimension_for_qubits(scheme.quantum_qubits());
  Matrix avg = Matrix::Zero(static_cast<Eigen::Index>(dim),
                            static_cast<Eigen::Index>(dim));
  for (const WeightedKey& wk : scheme.keys_exact()) {
    for (const WeightedCiphertext& wc : scheme.enc_exact(wk.key, m)) {
      avg += wk.probability * wc.probability * wc.ciphertext.quantum_part.projector();
    }
  }
  return avg;
}

void expect_correct(const QecmScheme& scheme) {
  for (const WeightedKey& wk : scheme.keys_exact()) {
    for (const BitString& m : all_bitstrings(scheme.message_bits())) {
      for (const WeightedCiphertext& wc : scheme.enc_exact(wk.key, m)) {
        const Distribution d = scheme.dec_distribution(wk.key, wc.ciphertext);
        ASSERT_TRUE(d.contains(m));
        EXPECT_NEAR(d.at(m), 1.0, 1e-12);
      }
    }
  }
}

TEST(ConjugateEncryptionTest, EncodesPaddedMessageInKeyBasis) {
  Key key;
  key.pad = BitString::parse("01");
  key.theta = BitString::parse("10");
  const Ciphertext ct = ce_enc(key, BitString::parse("01"));
  EXPECT_FALSE(ct.classical_part.has_value());
  EXPECT_NEAR(std::abs(ct.quantum_part.amplitudes().dot(
                  wiesner_state(BitString::parse("00"), key.theta).amplitudes())),
              1.0, 1e-12);
  EXPECT_THROW(ce_enc(key, BitString::parse("011")), ArgumentError);
}

TEST(ConjugateEncryptionTest, CorrectAndSized) {
  for (int lambda = 1; lambda <= 3; ++lambda) {
    const ConjugateEncryption ce(lambda);
    EXPECT_EQ(ce.key_bits(), 2 * lambda);
    EXPECT_EQ(ce.quantum_qubits(), lambda);
    EXPECT_EQ(ce.ciphertext_size(), lambda);
    EXPECT_EQ(ce.key_support_size(), std::size_t{1} << (2 * lambda));
    expect_correct(ce);
  }
  EXPECT_THROW(ConjugateEncryption(0), ArgumentError);
}

TEST(ConjugateEncryptionTest, WrongBasisDecodesAtRandom) {
  Key key;
  key.pad = BitString(0, 1);
  key.theta = BitString(0, 1);
  Key other = key;
  other.theta = BitString(1, 1);
  const Distribution d = ce_dec(other, ce_enc(key, BitString(1, 1)));
  EXPECT_NEAR(d.at(BitString(0, 1)), 0.5, 1e-12);
  EXPECT_NEAR(d.at(BitString(1, 1)), 0.5, 1e-12);
}

TEST(ConjugateEncryptionTest, AverageCiphertextIsMaximallyMixed) {
  const ConjugateEncryption ce(2);
  for (const BitString& m : all_bitstrings(2)) {
    const Matrix avg = average_ciphertext(ce, m);
    EXPECT_LT((avg - 0.25 * Matrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ConjugateEncryptionTest, KeygenLooksUniform) {
  const ConjugateEncryption ce(1);
  Rng rng(12);
  std::vector<int> counts(4, 0);
  const int trials = 8000;
  for (int i = 0; i < trials; ++i) {
    const Key k = ce.keygen(rng);
    ++counts[k.pad.concat(k.theta).value()];
  }
  const double sigma = std::sqrt(trials * 0.25 * 0.75);
  for (int c : counts) EXPECT_LT(std::abs(c - trials / 4.0), 5 * sigma);
}

TEST(OneTimePadTest, CorrectAndCiphertextIndependentOfMessage) {
  const OneTimePad otp(3);
  EXPECT_EQ(otp.quantum_qubits(), 0);
  EXPECT_EQ(otp.classical_bits(), 3);
  expect_correct(otp);
  for (const BitString& m : all_bitstrings(3)) {
    std::vector<double> dist(8, 0.0);
    for (const WeightedKey& wk : otp.keys_exact()) {
      for (const WeightedCiphertext& wc : otp.enc_exact(wk.key, m)) {
        dist[wc.ciphertext.classical_part->value()] += wk.probability * wc.probability;
      }
    }
    for (double p : dist) EXPECT_NEAR(p, 0.125, 1e-12);
  }
  EXPECT_EQ(otp_classical(2)->name(), "otp");
}

TEST(FConjugateEncryptionTest, QprfRoundTrip) {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Key key = fce_keygen(6, 4, rng);
    const BitString m = random_bitstring(rng, 4);
    const Ciphertext ct = fce_enc(key, m, rng);
    ASSERT_TRUE(ct.classical_part.has_value());
    EXPECT_EQ(ct.classical_part->length(), 4);
    const Distribution d = fce_dec(key, ct);
    EXPECT_NEAR(d.at(m), 1.0, 1e-12);
  }
}

TEST(FConjugateEncryptionTest, ZeroFunctionReducesToWiesnerEncoding) {
  Key key;
  key.pad = BitString(0, 2);
  key.theta = BitString::parse("01");
  key.function = RandomOracle(expand_seed(0), 2, 2);
  for (const BitString& x : all_bitstrings(2)) {
    key.function = key.function->reprogram(x, BitString(0, 2));
  }
  const BitString m = BitString::parse("10");
  const BitString x = BitString::parse("11");
  const Ciphertext ct = fce_enc_with_randomness(key, m, x);
  EXPECT_EQ(*ct.classical_part, m);
  EXPECT_NEAR(std::abs(ct.quantum_part.amplitudes().dot(
                  wiesner_state(x, key.theta).amplitudes())),
              1.0, 1e-12);
}

TEST(FConjugateEncryptionTest, OracleModelIsCorrect) {
  FceOptions opts;
  opts.lambda = 2;
  opts.message_bits = 2;
  opts.oracle_samples = 4;
  const FConjugateEncryption fce(opts);
  EXPECT_EQ(fce.classical_bits(), 2);
  EXPECT_EQ(fce.quantum_qubits(), 2);
  EXPECT_EQ(fce.enc_randomness_size(), 4u);
  expect_correct(fce);
}

TEST(FConjugateEncryptionTest, ClassicalPartLooksUniform) {
  FceOptions opts;
  opts.lambda = 6;
  opts.message_bits = 2;
  opts.model = PrfModel::kQprf;
  const FConjugateEncryption fce(opts);
  Rng rng(17);
  std::vector<int> counts(4, 0);
  const int trials = 8000;
  const BitString m(0, 2);
  for (int i = 0; i < trials; ++i) {
    const Key key = fce.keygen(rng);
    ++counts[fce.enc(key, m, rng).classical_part->value()];
  }
  const double sigma = std::sqrt(trials * 0.25 * 0.75);
  for (int c : counts) EXPECT_LT(std::abs(c - trials / 4.0), 5 * sigma);
}

TEST(SchemeTest, RejectsWrongMessageLength) {
  const ConjugateEncryption ce(2);
  Rng rng(1);
  const Key key = ce.keygen(rng);
  EXPECT_THROW(ce.enc(key, BitString(0, 3), rng), ArgumentError);
}

}  // namespace
}  // namespace uncloneable
