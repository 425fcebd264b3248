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

#include <stdexcept>
#include <string>

namespace uncloneable {

/// Bad argument: size mismatch, out-of-range index, invalid parameter.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact enumeration or register size exceeds what dense simulation allows.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation is not defined for the given scheme or attack combination.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructed object violates a physical validity invariant
/// (trace preservation, positivity, normalisation).
class ValidityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uncloneable
