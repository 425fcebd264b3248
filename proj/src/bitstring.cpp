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

#include "uncloneable/bitstring.hpp"

#include <bit>

#include "uncloneable/errors.hpp"

namespace uncloneable {

namespace {

std::uint64_t mask(int length) {
  return length == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

}  // namespace

BitString::BitString(std::uint64_t value, int length)
    : value_(value), length_(length) {
  if (length < 0 || length > kMaxLength) {
    throw ArgumentError("BitString length must be in [0, 64], got " +
                        std::to_string(length));
  }
  if ((value & ~mask(length)) != 0) {
    throw ArgumentError("BitString value has bits beyond length " +
                        std::to_string(length));
  }
}

BitString BitString::zeros(int length) { return BitString(0, length); }

BitString BitString::ones(int length) {
  return BitString(mask(length), length);
}

BitString BitString::parse(std::string_view text) {
  if (text.size() > kMaxLength) throw ArgumentError("bit string too long");
  std::uint64_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ArgumentError("bit string may only contain '0' and '1': " +
                          std::string(text));
    }
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitString(v, static_cast<int>(text.size()));
}

int BitString::operator[](int i) const {
  if (i < 0 || i >= length_) throw ArgumentError("bit index out of range");
  return static_cast<int>((value_ >> (length_ - 1 - i)) & 1);
}

BitString BitString::with_bit(int i, int bit) const {
  if (i < 0 || i >= length_) throw ArgumentError("bit index out of range");
  const std::uint64_t m = std::uint64_t{1} << (length_ - 1 - i);
  return BitString(bit ? (value_ | m) : (value_ & ~m), length_);
}

int BitString::weight() const { return std::popcount(value_); }

BitString BitString::operator^(const BitString& other) const {
  if (length_ != other.length_) {
    throw ArgumentError("XOR of bit strings of lengths " +
                        std::to_string(length_) + " and " +
                        std::to_string(other.length_));
  }
  return BitString(value_ ^ other.value_, length_);
}

BitString BitString::slice(int begin, int count) const {
  if (begin < 0 || count < 0 || begin + count > length_) {
    throw ArgumentError("slice out of range");
  }
  const int shift = length_ - begin - count;
  return BitString((value_ >> shift) & mask(count), count);
}

BitString BitString::concat(const BitString& other) const {
  const int total = length_ + other.length_;
  if (total > kMaxLength) throw ArgumentError("concatenation exceeds 64 bits");
  const std::uint64_t head = other.length_ == 64 ? 0 : value_ << other.length_;
  return BitString(head | other.value_, total);
}

std::string BitString::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  std::vector<std::uint8_t> out(8);
  for (int i = 0; i < 8; ++i) {
    out[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(value_ >> (8 * (7 - i)));
  }
  out.push_back(static_cast<std::uint8_t>(length_));
  return out;
}

std::vector<BitString> all_bitstrings(int length) {
  if (length < 0 || length > 24) {
    throw ArgumentError("refusing to enumerate bit strings of length " +
                        std::to_string(length));
  }
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << length);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << length); ++v) {
    out.emplace_back(v, length);
  }
  return out;
}

}  // namespace uncloneable
