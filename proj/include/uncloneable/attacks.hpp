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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uncloneable/bitstring.hpp"
#include "uncloneable/quantum.hpp"
#include "uncloneable/random.hpp"
#include "uncloneable/schemes.hpp"

namespace uncloneable {

/// One outcome of a splitting instrument: a classical string handed to both
/// decoders together with the Kraus operators (dim_b * dim_c x dim_in) that
/// produce the B (x) C register for that outcome.
struct SplitBranch {
  BitString broadcast;
  std::vector<Matrix> kraus;
};

/// Splitting map with classical side output. Summed over every branch the
/// Kraus operators are trace preserving; dropping the broadcast labels gives
/// an ordinary CPTP map into H_B (x) H_C.
class SplitInstrument {
 public:
  /// Throws ArgumentError on shape mismatch and ValidityError unless the
  /// operators of all branches together satisfy sum K^dag K = I.
  SplitInstrument(std::vector<SplitBranch> branches, std::size_t dim_in,
                  std::size_t dim_b, std::size_t dim_c);

  const std::vector<SplitBranch>& branches() const { return branches_; }
  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_b() const { return dim_b_; }
  std::size_t dim_c() const { return dim_c_; }

  KrausChannel as_channel() const;

 private:
  std::vector<SplitBranch> branches_;
  std::size_t dim_in_;
  std::size_t dim_b_;
  std::size_t dim_c_;
};

/// Chooses the splitting instrument after seeing the ciphertext's classical
/// part; acts on the quantum part (prefixed by the side register S for
/// cloning-distinguishing attacks).
using SplitFn =
    std::function<SplitInstrument(const std::optional<BitString>& classical)>;

/// Keyed decoder: the measurement a party applies to its register once the
/// key is revealed, given the broadcast string.
using DecoderFn =
    std::function<Povm(const Key& key, const BitString& broadcast)>;

/// Output pair (m_B, m_C) of one Monte Carlo run of a cloning attack.
using CloningSampler = std::function<std::pair<BitString, BitString>(
    const Ciphertext& ct, const Key& key, Rng& rng)>;

/// Splitting map plus two keyed decoders.
struct CloningAttack {
  std::string name;
  /// Scheme name this attack targets; empty for scheme-agnostic attacks.
  std::string target;
  int quantum_qubits = 0;
  int message_bits = 0;
  std::size_t dim_b = 1;
  std::size_t dim_c = 1;
  SplitFn split;
  DecoderFn decode_b;
  DecoderFn decode_c;
  /// Direct sampler used by Monte Carlo evaluation when set. Must agree in
  /// distribution with the (split, decode_b, decode_c) view.
  CloningSampler sampler;
};

/// gen prepares S (x) M, split acts on S (x) T, decoders output one bit.
struct CloningDistinguishingAttack {
  std::string name;
  std::string target;
  int quantum_qubits = 0;
  int message_bits = 0;
  std::size_t dim_s = 1;
  std::size_t dim_b = 1;
  std::size_t dim_c = 1;
  std::shared_ptr<const DensityOperator> gen;
  SplitFn split;
  DecoderFn decode_b;
  DecoderFn decode_c;
};

/// gen prepares S (x) M; the final measurement acts on S (x) T and outputs
/// one bit. `leaked_key` is non-null only in negative-control runs.
using DistinguisherFn = std::function<Povm(
    const std::optional<BitString>& classical, const Key* leaked_key)>;

struct DistinguishingAttack {
  std::string name;
  int quantum_qubits = 0;
  int message_bits = 0;
  std::size_t dim_s = 1;
  std::shared_ptr<const DensityOperator> gen;
  DistinguisherFn measure;
};

/// Conditional side-register states after measuring gen's M register.
struct GenBranch {
  BitString message;
  double probability;
  /// Spectral decomposition of the normalised S state: (weight, vector).
  std::vector<std::pair<double, Vector>> side_states;
};

/// Splits gen on S (x) M into branches per computational outcome of M.
std::vector<GenBranch> decompose_gen(const DensityOperator& gen,
                                     std::size_t dim_s, int message_bits);
/// Spectral decomposition of Tr_M gen.
std::vector<std::pair<double, Vector>> side_marginal(
    const DensityOperator& gen, std::size_t dim_s, int message_bits);

/// Throws ArgumentError/UnsupportedError if `attack` cannot run against
/// `scheme`.
void check_compatible(const CloningAttack& attack, const QecmScheme& scheme);
void check_compatible(const CloningDistinguishingAttack& attack,
                      const QecmScheme& scheme);
void check_compatible(const DistinguishingAttack& attack,
                      const QecmScheme& scheme);

/// Samples (m_B, m_C) through the instrument/decoder view for a pure input
/// on the split's input space.
std::pair<BitString, BitString> sample_split_outputs(
    const SplitInstrument& inst, const Vector& input, const DecoderFn& b,
    const DecoderFn& c, const Key& key, Rng& rng);

/// Probability that the split followed by the decoders outputs the pair
/// (want_b, want_c) on a pure input.
double split_success(const SplitInstrument& inst, const Vector& input,
                     const DecoderFn& b, const DecoderFn& c, const Key& key,
                     const BitString& want_b, const BitString& want_c);

// --- Cloning attacks -------------------------------------------------------

/// Duplicates a classical ciphertext; both sides run the scheme's decryption.
/// UnsupportedError for schemes with a quantum ciphertext part.
CloningAttack copy_attack(std::shared_ptr<const QecmScheme> scheme);

/// Discards the ciphertext; both sides output m0.
CloningAttack guess_attack(const QecmScheme& scheme, const BitString& m0);

/// Measures every ciphertext qubit in the Breidbart basis and broadcasts the
/// outcome c; each side outputs c xor r. Conjugate encryption only.
CloningAttack breidbart_attack(const QecmScheme& scheme);

/// B keeps the first half of the qubits and C the second; each measures in
/// its half of theta and zero-pads the half it cannot see. Conjugate
/// encryption with even lambda only.
CloningAttack split_measure_attack(const QecmScheme& scheme);

/// Builds a cloning attack from a cloning-distinguishing attack: measure
/// gen's M register to get m', run the original split on (S, ciphertext),
/// forward m' to both sides; a decoded bit 0 becomes 0^n, bit 1 becomes m'.
/// Its uniform-message cloning value is at least the original
/// cloning-distinguishing value divided by 2^{n-1}.
CloningAttack transform_cd_to_cloning(const CloningDistinguishingAttack& a);

// --- Cloning-distinguishing attacks ----------------------------------------

/// Submits m = 0^n; both decoders output `bit` regardless of input.
CloningDistinguishingAttack fixed_bit_cd_attack(const QecmScheme& scheme,
                                                int bit);

/// gen always emits m_star; both decoders always output 1.
CloningDistinguishingAttack constant_message_cd_attack(
    const QecmScheme& scheme, const BitString& m_star);

/// Submits 1^n and hands the first ceil(n/2) ciphertext qubits to B and the
/// rest to C; each side decodes its half with the key and answers 1 iff the
/// half is all ones. Distinguishes conjugate encryption perfectly for n >= 2.
CloningDistinguishingAttack half_split_cd_attack(const QecmScheme& scheme);

/// Random gen on one side qubit, random split channel and random keyed
/// decoders, reproducible from `seed`. Schemes without a classical
/// ciphertext part only.
CloningDistinguishingAttack random_cd_attack(const QecmScheme& scheme,
                                             std::uint64_t seed);

// --- Distinguishing attacks ------------------------------------------------

/// Outputs a uniformly random bit.
DistinguishingAttack random_coin_attack(const QecmScheme& scheme);

/// Negative control: submits 1^n and decrypts with the leaked key, answering
/// 1 iff the plaintext is nonzero. Requires a game run with key leakage.
DistinguishingAttack leaked_key_attack(std::shared_ptr<const QecmScheme> scheme);

/// Random gen and random measurement on S (x) T, reproducible from `seed`.
DistinguishingAttack random_distinguishing_attack(const QecmScheme& scheme,
                                                  std::uint64_t seed);

}  // namespace uncloneable
