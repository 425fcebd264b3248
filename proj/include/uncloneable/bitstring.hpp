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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace uncloneable {

/// Fixed-length bit string of at most 64 bits.
///
/// Position 0 is the first character of the textual form and the most
/// significant bit of value(), so value() is also the computational-basis
/// index of the matching register state.
class BitString {
 public:
  static constexpr int kMaxLength = 64;

  BitString() = default;
  /// Throws ArgumentError if length is out of range or value has bits
  /// above length.
  BitString(std::uint64_t value, int length);

  static BitString zeros(int length);
  static BitString ones(int length);
  /// Parses a string of '0'/'1' characters.
  static BitString parse(std::string_view text);

  int length() const { return length_; }
  std::uint64_t value() const { return value_; }
  bool empty() const { return length_ == 0; }

  /// Bit at string position i (0-based).
  int operator[](int i) const;
  BitString with_bit(int i, int bit) const;

  int weight() const;
  BitString operator^(const BitString& other) const;
  /// Positions [begin, begin + count).
  BitString slice(int begin, int count) const;
  /// this followed by other.
  BitString concat(const BitString& other) const;

  std::string to_string() const;
  std::vector<std::uint8_t> to_bytes() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::uint64_t value_ = 0;
  int length_ = 0;
};

/// All strings of the given length in increasing value order.
std::vector<BitString> all_bitstrings(int length);

}  // namespace uncloneable
