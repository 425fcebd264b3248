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

#include <cstdint>
#include <random>

#include "uncloneable/bitstring.hpp"

namespace uncloneable {

using Rng = std::mt19937_64;

/// SplitMix64 finaliser; used to derive independent per-trial seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed for trial `index` of a run seeded with `seed`. Depends only on
/// (seed, index), never on scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double uniform01(Rng& rng);

/// Uniform integer in [0, bound).
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

BitString random_bitstring(Rng& rng, int length);

}  // namespace uncloneable
