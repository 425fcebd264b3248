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

#include <set>
#include <string>
#include <string_view>

#include "uncloneable/errors.hpp"
#include "uncloneable/hash.hpp"

namespace uncloneable {

namespace {

constexpr std::string_view kOracleDomain = "uncloneable/random-oracle/v1";
constexpr std::string_view kQprfDomain = "uncloneable/qprf-shake256/v1";
constexpr std::string_view kSeedDomain = "uncloneable/seed-expand/v1";

void append(std::vector<std::uint8_t>& buf, std::string_view s) {
  buf.insert(buf.end(), s.begin(), s.end());
}

void append(std::vector<std::uint8_t>& buf, const BitString& b) {
  const auto bytes = b.to_bytes();
  buf.insert(buf.end(), bytes.begin(), bytes.end());
}

void append_u64(std::vector<std::uint8_t>& buf, std::uint64_t v) {
  for (int i = 7; i >= 0; --i) {
    buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

// First `bits` bits of the digest, MSB first.
BitString truncate(const std::vector<std::uint8_t>& digest, int bits) {
  std::uint64_t v = 0;
  for (int i = 0; i < bits; ++i) {
    const int byte = digest[static_cast<std::size_t>(i / 8)];
    v = (v << 1) | static_cast<std::uint64_t>((byte >> (7 - i % 8)) & 1);
  }
  return BitString(v, bits);
}

void check_bits(int bits, const char* what) {
  if (bits < 1 || bits > BitString::kMaxLength) {
    throw ArgumentError(std::string(what) + " must be in [1, 64], got " +
                        std::to_string(bits));
  }
}

}  // namespace

OracleSeed expand_seed(std::uint64_t seed, std::uint64_t stream) {
  std::vector<std::uint8_t> buf;
  append(buf, kSeedDomain);
  append_u64(buf, seed);
  append_u64(buf, stream);
  const auto digest = shake256(buf, 32);
  OracleSeed out{};
  std::copy(digest.begin(), digest.end(), out.begin());
  return out;
}

BitString qprf_eval(const QprfKey& key, const BitString& x, int out_bits) {
  if (key.s.length() != x.length()) {
    throw ArgumentError("qprf_eval: key has " +
                        std::to_string(key.s.length()) + " bits, input has " +
                        std::to_string(x.length()));
  }
  check_bits(key.s.length(), "qPRF key length");
  check_bits(out_bits, "qPRF output length");
  std::vector<std::uint8_t> buf;
  append(buf, kQprfDomain);
  append(buf, key.s);
  append(buf, x);
  append_u64(buf, static_cast<std::uint64_t>(out_bits));
  return truncate(shake256(buf, static_cast<std::size_t>((out_bits + 7) / 8)),
                  out_bits);
}

RandomOracle::RandomOracle(const OracleSeed& seed, int in_bits, int out_bits)
    : seed_(seed), in_bits_(in_bits), out_bits_(out_bits) {
  check_bits(in_bits, "oracle input length");
  check_bits(out_bits, "oracle output length");
}

RandomOracle RandomOracle::from_qprf(const QprfKey& key, int out_bits) {
  RandomOracle h(OracleSeed{}, key.s.length(), out_bits);
  h.qprf_key_ = key;
  return h;
}

BitString RandomOracle::eval(const BitString& x) const {
  if (x.length() != in_bits_) {
    throw ArgumentError("oracle input has " + std::to_string(x.length()) +
                        " bits, expected " + std::to_string(in_bits_));
  }
  if (auto it = patches_.find(x); it != patches_.end()) return it->second;
  if (qprf_key_) return qprf_eval(*qprf_key_, x, out_bits_);
  std::vector<std::uint8_t> buf;
  append(buf, kOracleDomain);
  buf.insert(buf.end(), seed_.begin(), seed_.end());
  append_u64(buf, static_cast<std::uint64_t>(in_bits_));
  append_u64(buf, static_cast<std::uint64_t>(out_bits_));
  append(buf, x);
  return truncate(shake256(buf, static_cast<std::size_t>((out_bits_ + 7) / 8)),
                  out_bits_);
}

RandomOracle RandomOracle::reprogram(const BitString& x,
                                     const BitString& y) const {
  if (x.length() != in_bits_ || y.length() != out_bits_) {
    throw ArgumentError("reprogram: expected |x| = " +
                        std::to_string(in_bits_) + ", |y| = " +
                        std::to_string(out_bits_));
  }
  RandomOracle out = *this;
  out.patches_[x] = y;
  return out;
}

std::vector<RandomOracle> oracle_family(std::uint64_t seed, int count,
                                        int in_bits, int out_bits) {
  if (count < 1) throw ArgumentError("oracle family must be nonempty");
  std::vector<RandomOracle> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out.emplace_back(expand_seed(seed, static_cast<std::uint64_t>(i)), in_bits,
                     out_bits);
  }
  return out;
}

PureState oracle_unitary_apply(const RandomOracle& h, const PureState& state,
                               const std::vector<int>& query,
                               const std::vector<int>& response) {
  const int n = state.qubit_count();
  if (static_cast<int>(query.size()) != h.in_bits() ||
      static_cast<int>(response.size()) != h.out_bits()) {
    throw ArgumentError("oracle_unitary_apply: register sizes do not match "
                        "the oracle's input/output lengths");
  }
  std::set<int> seen;
  for (int q : query) {
    if (q < 0 || q >= n || !seen.insert(q).second) {
      throw ArgumentError("oracle_unitary_apply: bad query qubit index");
    }
  }
  for (int r : response) {
    if (r < 0 || r >= n || !seen.insert(r).second) {
      throw ArgumentError(
          "oracle_unitary_apply: response qubit out of range or overlapping");
    }
  }
  const auto bit_of = [n](std::size_t idx, int qubit) {
    return static_cast<int>((idx >> (n - 1 - qubit)) & 1);
  };
  // O^H permutes basis states, so each output amplitude is one input amplitude.
  std::map<std::uint64_t, BitString> cache;
  const Vector& a = state.amplitudes();
  Vector out = Vector::Zero(a.size());
  for (std::size_t idx = 0; idx < state.dim(); ++idx) {
    std::uint64_t x = 0;
    for (int q : query) x = (x << 1) | static_cast<std::uint64_t>(bit_of(idx, q));
    auto it = cache.find(x);
    if (it == cache.end()) {
      it = cache.emplace(x, h.eval(BitString(x, h.in_bits()))).first;
    }
    const BitString& hx = it->second;
    std::size_t target = idx;
    for (int j = 0; j < h.out_bits(); ++j) {
      if (hx[j]) target ^= std::size_t{1} << (n - 1 - response[static_cast<std::size_t>(j)]);
    }
    out(static_cast<Eigen::Index>(target)) = a(static_cast<Eigen::Index>(idx));
  }
  return PureState(std::move(out));
}

}  // namespace uncloneable
