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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uncloneable/bitstring.hpp"
#include "uncloneable/oracle.hpp"
#include "uncloneable/quantum.hpp"
#include "uncloneable/random.hpp"

namespace uncloneable {

/// Decryption key of any shipped scheme.
///
/// `pad` is r (conjugate), s (F-conjugate) or k (one-time pad). `function`
/// is the F-conjugate scheme's f(s, .), either the qPRF itself or a sampled
/// random oracle standing in for it; adversaries in the oracle model must
/// only query it, never read `pad`.
struct Key {
  BitString pad;
  BitString theta;
  std::optional<RandomOracle> function;
};

/// Classical and quantum parts kept separate. `quantum_part` is the
/// zero-qubit state [1] for purely classical ciphertexts. `randomness`
/// records the F-conjugate scheme's per-encryption x.
struct Ciphertext {
  std::optional<BitString> classical_part;
  PureState quantum_part = PureState(Vector::Ones(1));
  std::optional<BitString> randomness;
};

struct WeightedKey {
  double probability;
  Key key;
};

struct WeightedCiphertext {
  double probability;
  Ciphertext ciphertext;
};

using Distribution = std::map<BitString, double>;

/// Key-gen / enc / dec triple with declared sizes.
class QecmScheme {
 public:
  virtual ~QecmScheme() = default;

  virtual std::string name() const = 0;
  int lambda() const { return lambda_; }
  int message_bits() const { return message_bits_; }
  virtual int key_bits() const = 0;
  /// Qubits in the quantum part of a ciphertext.
  virtual int quantum_qubits() const = 0;
  /// Bits in the classical part of a ciphertext.
  virtual int classical_bits() const = 0;
  /// ell(lambda): total ciphertext size counting classical bits as qubits.
  int ciphertext_size() const { return quantum_qubits() + classical_bits(); }

  virtual Key keygen(Rng& rng) const = 0;
  /// Support of the key distribution with probabilities.
  virtual std::vector<WeightedKey> keys_exact() const = 0;
  virtual std::size_t key_support_size() const = 0;

  virtual Ciphertext enc(const Key& key, const BitString& m,
                         Rng& rng) const = 0;
  /// Every outcome of the encryption randomness with its probability.
  virtual std::vector<WeightedCiphertext> enc_exact(const Key& key,
                                                    const BitString& m) const;
  virtual std::size_t enc_randomness_size() const { return 1; }

  /// Full output distribution of decryption.
  virtual Distribution dec_distribution(const Key& key,
                                        const Ciphertext& ct) const = 0;
  /// One sampled decryption.
  BitString dec(const Key& key, const Ciphertext& ct, Rng& rng) const;

  /// Message-recovery exponent t such that the scheme's uncloneable bound
  /// is 2^{-n+t}.
  virtual double uncloneable_exponent() const = 0;

 protected:
  QecmScheme(int lambda, int message_bits);
  void check_message(const BitString& m) const;

 private:
  int lambda_;
  int message_bits_;
};

// --- Conjugate encryption --------------------------------------------------

Key ce_keygen(int lambda, Rng& rng);
/// Quantum part |(m xor r)^theta>; no classical part.
Ciphertext ce_enc(const Key& key, const BitString& m);
/// Measures in basis theta and XORs r; full distribution.
Distribution ce_dec(const Key& key, const Ciphertext& ct);

class ConjugateEncryption final : public QecmScheme {
 public:
  explicit ConjugateEncryption(int lambda);
  std::string name() const override { return "ce"; }
  int key_bits() const override { return 2 * lambda(); }
  int quantum_qubits() const override { return lambda(); }
  int classical_bits() const override { return 0; }
  Key keygen(Rng& rng) const override;
  std::vector<WeightedKey> keys_exact() const override;
  std::size_t key_support_size() const override;
  Ciphertext enc(const Key& key, const BitString& m, Rng& rng) const override;
  Distribution dec_distribution(const Key& key,
                                const Ciphertext& ct) const override;
  double uncloneable_exponent() const override;
};

// --- F-conjugate encryption ------------------------------------------------

enum class PrfModel {
  /// f(s, x) is the SHAKE256 qPRF.
  kQprf,
  /// f(s, .) replaced by a random oracle drawn from a seeded family.
  kRandomOracle,
};

struct FceOptions {
  int lambda = 4;
  int message_bits = 4;
  PrfModel model = PrfModel::kRandomOracle;
  /// Size of the sampled oracle family (oracle model only).
  int oracle_samples = 64;
  std::uint64_t oracle_seed = 0;
};

/// Samples s and theta uniformly; function is the qPRF f(s, .).
Key fce_keygen(int lambda, int message_bits, Rng& rng);
/// Samples x; classical part m xor f(s, x), quantum part |x^theta>.
Ciphertext fce_enc(const Key& key, const BitString& m, Rng& rng);
Ciphertext fce_enc_with_randomness(const Key& key, const BitString& m,
                                   const BitString& x);
/// Measures in basis theta to get r and outputs c xor f(s, r).
Distribution fce_dec(const Key& key, const Ciphertext& ct);

class FConjugateEncryption final : public QecmScheme {
 public:
  explicit FConjugateEncryption(const FceOptions& options);
  std::string name() const override { return "fce"; }
  const FceOptions& options() const { return options_; }
  int key_bits() const override { return 2 * lambda(); }
  int quantum_qubits() const override { return lambda(); }
  int classical_bits() const override { return message_bits(); }
  Key keygen(Rng& rng) const override;
  std::vector<WeightedKey> keys_exact() const override;
  std::size_t key_support_size() const override;
  Ciphertext enc(const Key& key, const BitString& m, Rng& rng) const override;
  std::vector<WeightedCiphertext> enc_exact(const Key& key,
                                            const BitString& m) const override;
  std::size_t enc_randomness_size() const override;
  Distribution dec_distribution(const Key& key,
                                const Ciphertext& ct) const override;
  double uncloneable_exponent() const override;

 private:
  FceOptions options_;
  std::vector<RandomOracle> family_;
};

// --- Classical one-time pad ------------------------------------------------

class OneTimePad final : public QecmScheme {
 public:
  explicit OneTimePad(int lambda);
  std::string name() const override { return "otp"; }
  int key_bits() const override { return lambda(); }
  int quantum_qubits() const override { return 0; }
  int classical_bits() const override { return lambda(); }
  Key keygen(Rng& rng) const override;
  std::vector<WeightedKey> keys_exact() const override;
  std::size_t key_support_size() const override;
  Ciphertext enc(const Key& key, const BitString& m, Rng& rng) const override;
  Distribution dec_distribution(const Key& key,
                                const Ciphertext& ct) const override;
  double uncloneable_exponent() const override;
};

std::shared_ptr<const QecmScheme> otp_classical(int lambda);

}  // namespace uncloneable
