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
#include <string>

#include "uncloneable/errors.hpp"

namespace uncloneable {

namespace {

void check_lambda(int lambda) {
  if (lambda < 1) throw ArgumentError("lambda must be at least 1");
  dimension_for_qubits(lambda);
}

void check_key(const Key& key, int lambda, bool needs_theta) {
  if (key.pad.length() != lambda ||
      (needs_theta && key.theta.length() != lambda)) {
    throw ArgumentError("key has wrong length for lambda = " +
                        std::to_string(lambda));
  }
}

// Distribution of the theta-basis measurement outcome r of the quantum part.
std::vector<double> basis_outcomes(const Key& key, const Ciphertext& ct) {
  if (ct.quantum_part.qubit_count() != key.theta.length()) {
    throw ArgumentError("ciphertext has " +
                        std::to_string(ct.quantum_part.qubit_count()) +
                        " qubits, key expects " +
                        std::to_string(key.theta.length()));
  }
  return wiesner_distribution(ct.quantum_part, key.theta);
}

const RandomOracle& function_of(const Key& key) {
  if (!key.function) {
    throw ArgumentError("F-conjugate key carries no function f(s, .)");
  }
  return *key.function;
}

}  // namespace

// --- QecmScheme ------------------------------------------------------------

QecmScheme::QecmScheme(int lambda, int message_bits)
    : lambda_(lambda), message_bits_(message_bits) {
  check_lambda(lambda);
  if (message_bits < 1 || message_bits > 24) {
    throw ArgumentError("message size must be in [1, 24]");
  }
}

void QecmScheme::check_message(const BitString& m) const {
  if (m.length() != message_bits_) {
    throw ArgumentError("message has " + std::to_string(m.length()) +
                        " bits, scheme expects " +
                        std::to_string(message_bits_));
  }
}

std::vector<WeightedCiphertext> QecmScheme::enc_exact(
    const Key& key, const BitString& m) const {
  Rng unused(0);
  return {{1.0, enc(key, m, unused)}};
}

BitString QecmScheme::dec(const Key& key, const Ciphertext& ct,
                          Rng& rng) const {
  const Distribution d = dec_distribution(key, ct);
  std::vector<double> w;
  std::vector<BitString> labels;
  for (const auto& [m, p] : d) {
    labels.push_back(m);
    w.push_back(p);
  }
  return labels[sample_index(w, rng)];
}

// --- Conjugate encryption --------------------------------------------------

Key ce_keygen(int lambda, Rng& rng) {
  check_lambda(lambda);
  Key key;
  key.pad = random_bitstring(rng, lambda);
  key.theta = random_bitstring(rng, lambda);
  return key;
}

Ciphertext ce_enc(const Key& key, const BitString& m) {
  if (m.length() != key.pad.length() || m.length() != key.theta.length()) {
    throw ArgumentError("ce_enc: |m|, |r| and |theta| must agree");
  }
  Ciphertext ct;
  ct.quantum_part = wiesner_state(m ^ key.pad, key.theta);
  return ct;
}

Distribution ce_dec(const Key& key, const Ciphertext& ct) {
  const std::vector<double> p = basis_outcomes(key, ct);
  const int n = key.theta.length();
  Distribution out;
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (p[c] <= 0.0) continue;
    out[BitString(c, n) ^ key.pad] += p[c];
  }
  return out;
}

ConjugateEncryption::ConjugateEncryption(int lambda)
    : QecmScheme(lambda, lambda) {}

Key ConjugateEncryption::keygen(Rng& rng) const {
  return ce_keygen(lambda(), rng);
}

std::size_t ConjugateEncryption::key_support_size() const {
  return std::size_t{1} << (2 * lambda());
}

std::vector<WeightedKey> ConjugateEncryption::keys_exact() const {
  std::vector<WeightedKey> out;
  const double p = 1.0 / static_cast<double>(key_support_size());
  for (const BitString& r : all_bitstrings(lambda())) {
    for (const BitString& theta : all_bitstrings(lambda())) {
      out.push_back({p, Key{r, theta, std::nullopt}});
    }
  }
  return out;
}

Ciphertext ConjugateEncryption::enc(const Key& key, const BitString& m,
                                    Rng&) const {
  check_message(m);
  check_key(key, lambda(), true);
  return ce_enc(key, m);
}

Distribution ConjugateEncryption::dec_distribution(const Key& key,
                                                   const Ciphertext& ct) const {
  check_key(key, lambda(), true);
  return ce_dec(key, ct);
}

double ConjugateEncryption::uncloneable_exponent() const {
  return lambda() * std::log2(1.0 + 1.0 / std::sqrt(2.0));
}

// --- F-conjugate encryption ------------------------------------------------

Key fce_keygen(int lambda, int message_bits, Rng& rng) {
  check_lambda(lambda);
  Key key;
  key.pad = random_bitstring(rng, lambda);
  key.theta = random_bitstring(rng, lambda);
  key.function = RandomOracle::from_qprf(QprfKey{key.pad}, message_bits);
  return key;
}

Ciphertext fce_enc_with_randomness(const Key& key, const BitString& m,
                                   const BitString& x) {
  const RandomOracle& f = function_of(key);
  if (x.length() != key.theta.length() || f.in_bits() != x.length()) {
    throw ArgumentError("fce_enc: |x| must equal |theta| = lambda");
  }
  if (m.length() != f.out_bits()) {
    throw ArgumentError("fce_enc: message has " + std::to_string(m.length()) +
                        " bits, f outputs " + std::to_string(f.out_bits()));
  }
  Ciphertext ct;
  ct.classical_part = m ^ f.eval(x);
  ct.quantum_part = wiesner_state(x, key.theta);
  ct.randomness = x;
  return ct;
}

Ciphertext fce_enc(const Key& key, const BitString& m, Rng& rng) {
  return fce_enc_with_randomness(key, m,
                                 random_bitstring(rng, key.theta.length()));
}

Distribution fce_dec(const Key& key, const Ciphertext& ct) {
  const RandomOracle& f = function_of(key);
  if (!ct.classical_part || ct.classical_part->length() != f.out_bits()) {
    throw ArgumentError("fce_dec: ciphertext lacks an n-bit classical part");
  }
  const std::vector<double> p = basis_outcomes(key, ct);
  const int lambda = key.theta.length();
  Distribution out;
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (p[r] <= 0.0) continue;
    out[*ct.classical_part ^ f.eval(BitString(r, lambda))] += p[r];
  }
  return out;
}

FConjugateEncryption::FConjugateEncryption(const FceOptions& options)
    : QecmScheme(options.lambda, options.message_bits), options_(options) {
  if (options.model == PrfModel::kRandomOracle) {
    family_ = oracle_family(options.oracle_seed, options.oracle_samples,
                            options.lambda, options.message_bits);
  }
}

Key FConjugateEncryption::keygen(Rng& rng) const {
  if (options_.model == PrfModel::kQprf) {
    return fce_keygen(lambda(), message_bits(), rng);
  }
  Key key;
  key.pad = BitString::zeros(lambda());
  key.theta = random_bitstring(rng, lambda());
  key.function = family_[uniform_below(rng, family_.size())];
  return key;
}

std::size_t FConjugateEncryption::key_support_size() const {
  const std::size_t thetas = std::size_t{1} << lambda();
  return options_.model == PrfModel::kQprf ? thetas * thetas
                                           : thetas * family_.size();
}

std::vector<WeightedKey> FConjugateEncryption::keys_exact() const {
  std::vector<WeightedKey> out;
  const double p = 1.0 / static_cast<double>(key_support_size());
  if (options_.model == PrfModel::kQprf) {
    for (const BitString& s : all_bitstrings(lambda())) {
      const RandomOracle f =
          RandomOracle::from_qprf(QprfKey{s}, message_bits());
      for (const BitString& theta : all_bitstrings(lambda())) {
        out.push_back({p, Key{s, theta, f}});
      }
    }
    return out;
  }
  for (const RandomOracle& h : family_) {
    for (const BitString& theta : all_bitstrings(lambda())) {
      out.push_back({p, Key{BitString::zeros(lambda()), theta, h}});
    }
  }
  return out;
}

Ciphertext FConjugateEncryption::enc(const Key& key, const BitString& m,
                                     Rng& rng) const {
  check_message(m);
  check_key(key, lambda(), true);
  return fce_enc(key, m, rng);
}

std::vector<WeightedCiphertext> FConjugateEncryption::enc_exact(
    const Key& key, const BitString& m) const {
  check_message(m);
  check_key(key, lambda(), true);
  std::vector<WeightedCiphertext> out;
  const double p = 1.0 / static_cast<double>(enc_randomness_size());
  for (const BitString& x : all_bitstrings(lambda())) {
    out.push_back({p, fce_enc_with_randomness(key, m, x)});
  }
  return out;
}

std::size_t FConjugateEncryption::enc_randomness_size() const {
  return std::size_t{1} << lambda();
}

Distribution FConjugateEncryption::dec_distribution(
    const Key& key, const Ciphertext& ct) const {
  check_key(key, lambda(), true);
  return fce_dec(key, ct);
}

double FConjugateEncryption::uncloneable_exponent() const {
  return std::log2(9.0);
}

// --- One-time pad ----------------------------------------------------------

OneTimePad::OneTimePad(int lambda) : QecmScheme(lambda, lambda) {}

Key OneTimePad::keygen(Rng& rng) const {
  return Key{random_bitstring(rng, lambda()), BitString(), std::nullopt};
}

std::size_t OneTimePad::key_support_size() const {
  return std::size_t{1} << lambda();
}

std::vector<WeightedKey> OneTimePad::keys_exact() const {
  std::vector<WeightedKey> out;
  const double p = 1.0 / static_cast<double>(key_support_size());
  for (const BitString& k : all_bitstrings(lambda())) {
    out.push_back({p, Key{k, BitString(), std::nullopt}});
  }
  return out;
}

Ciphertext OneTimePad::enc(const Key& key, const BitString& m, Rng&) const {
  check_message(m);
  check_key(key, lambda(), false);
  Ciphertext ct;
  ct.classical_part = m ^ key.pad;
  return ct;
}

Distribution OneTimePad::dec_distribution(const Key& key,
                                          const Ciphertext& ct) const {
  check_key(key, lambda(), false);
  if (!ct.classical_part || ct.classical_part->length() != lambda()) {
    throw ArgumentError("otp: ciphertext lacks a lambda-bit classical part");
  }
  return {{*ct.classical_part ^ key.pad, 1.0}};
}

double OneTimePad::uncloneable_exponent() const {
  return static_cast<double>(message_bits());
}

std::shared_ptr<const QecmScheme> otp_classical(int lambda) {
  return std::make_shared<OneTimePad>(lambda);
}

}  // namespace uncloneable
