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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "uncloneable/bitstring.hpp"
#include "uncloneable/quantum.hpp"

namespace uncloneable {

using OracleSeed = std::array<std::uint8_t, 32>;

/// Expands a 64-bit experiment seed into a 256-bit oracle seed.
OracleSeed expand_seed(std::uint64_t seed, std::uint64_t stream = 0);

/// qPRF key s in {0,1}^lambda.
struct QprfKey {
  BitString s;
};

/// Keyed extendable-output function f(s, x) in {0,1}^out_bits.
///
/// Instantiated with SHAKE256 over a domain-separated encoding of
/// (lambda, s, x, out_bits). |s| must equal |x|.
BitString qprf_eval(const QprfKey& key, const BitString& x, int out_bits);

/// Lazily defined function H: {0,1}^in_bits -> {0,1}^out_bits.
///
/// Every table entry is a hash of (seed, input), so evaluation is a pure
/// function of (seed, patches, input) and never depends on query order.
/// Values are immutable; reprogram() returns a new oracle.
class RandomOracle {
 public:
  /// Throws ArgumentError unless 1 <= in_bits, out_bits <= 64.
  RandomOracle(const OracleSeed& seed, int in_bits, int out_bits);

  /// The function x -> f(key.s, x), usable wherever an oracle is.
  static RandomOracle from_qprf(const QprfKey& key, int out_bits);

  int in_bits() const { return in_bits_; }
  int out_bits() const { return out_bits_; }
  const OracleSeed& seed() const { return seed_; }
  bool is_qprf() const { return qprf_key_.has_value(); }
  const std::map<BitString, BitString>& patches() const { return patches_; }

  /// H(x); throws ArgumentError if |x| != in_bits.
  BitString eval(const BitString& x) const;

  /// H_{x,y}: equal to this oracle except at x, where it outputs y.
  RandomOracle reprogram(const BitString& x, const BitString& y) const;

 private:
  OracleSeed seed_{};
  int in_bits_;
  int out_bits_;
  std::optional<QprfKey> qprf_key_;
  std::map<BitString, BitString> patches_;
};

/// `count` independent oracles derived from one experiment seed.
std::vector<RandomOracle> oracle_family(std::uint64_t seed, int count,
                                        int in_bits, int out_bits);

/// Applies O^H: |x>_Q |y>_R -> |x>_Q |y xor H(x)>_R to `state`.
///
/// `query` lists in_bits qubit indices (MSB first) and `response` lists
/// out_bits indices; the two must be disjoint. Other qubits are untouched.
PureState oracle_unitary_apply(const RandomOracle& h, const PureState& state,
                               const std::vector<int>& query,
                               const std::vector<int>& response);

}  // namespace uncloneable
