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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uncloneable {

/// SHAKE256 extendable-output hash of `input`, `out_len` bytes.
std::vector<std::uint8_t> shake256(std::span<const std::uint8_t> input,
                                   std::size_t out_len);

/// Lower-case hex SHA-256 digest.
std::string sha256_hex(std::string_view input);

}  // namespace uncloneable
