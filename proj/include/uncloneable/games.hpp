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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "uncloneable/attacks.hpp"
#include "uncloneable/bitstring.hpp"
#include "uncloneable/moe.hpp"
#include "uncloneable/schemes.hpp"

namespace uncloneable {

enum class GameMode { kExact, kMonteCarlo };

std::string to_string(GameMode mode);
/// Accepts "exact", "mc" and "monte_carlo"; ArgumentError otherwise.
GameMode parse_game_mode(const std::string& text);

/// Largest number of (message, key, encryption randomness) branches exact
/// mode will enumerate.
inline constexpr std::size_t kMaxExactBranches = 1'000'000;

struct GameOptions {
  GameMode mode = GameMode::kExact;
  std::size_t trials = 10'000;
  std::uint64_t seed = 0;
  /// Hands the key to distinguishers (negative-control runs only).
  bool leak_key = false;
  /// Worker threads for Monte Carlo; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

/// Message distribution over n-bit strings.
class MessageDistribution {
 public:
  /// Probabilities must be nonnegative and sum to 1 within 1e-12.
  MessageDistribution(std::map<BitString, double> table, std::string name);

  static MessageDistribution uniform(int n);
  static MessageDistribution point_mass(const BitString& m);
  /// Mass 2^-h on `heavy` (0^n by default) and the rest spread evenly over
  /// the other messages, so the min-entropy is exactly h. 0 <= h <= n.
  static MessageDistribution min_entropy_family(
      int n, double h, std::optional<BitString> heavy = std::nullopt);

  const std::map<BitString, double>& table() const { return table_; }
  const std::string& name() const { return name_; }
  int message_bits() const { return message_bits_; }
  double min_entropy() const;
  BitString sample(Rng& rng) const;

 private:
  std::map<BitString, double> table_;
  std::string name_;
  int message_bits_ = 0;
  std::vector<BitString> labels_;
  std::vector<double> cumulative_;
};

struct GameReport {
  std::string game;
  std::string scheme;
  std::string attack;
  int lambda = 0;
  int message_bits = 0;
  std::string distribution;
  GameMode mode = GameMode::kExact;
  /// Monte Carlo trials; 0 in exact mode.
  std::size_t trials = 0;
  double value = 0.0;
  double std_error = 0.0;
  double bound = 1.0;
  std::string bound_name;
  bool bound_satisfied = true;
  /// Bound checks cover the evaluated attack only.
  bool bound_heuristic = true;
  std::uint64_t seed = 0;
  /// Sampled oracle family size; 0 when no oracle is involved.
  int oracle_samples = 0;
  std::string notes;

  /// Fields in the order above.
  nlohmann::ordered_json to_json() const;
  static std::string csv_header();
  std::string csv_row() const;
};

/// E_m E_k Pr[both decoders output m].
GameReport eval_cloning_game(const QecmScheme& scheme,
                             const CloningAttack& attack,
                             const MessageDistribution& dist,
                             const GameOptions& options);

/// E_b E_k Pr[the attack outputs b], b = 0 encrypting 0^n and b = 1
/// dephasing the message register before encrypting it.
GameReport eval_distinguishing_game(const QecmScheme& scheme,
                                    const DistinguishingAttack& attack,
                                    const GameOptions& options);

/// E_b E_k Pr[both decoders output b] with the same two encryptions.
GameReport eval_cloning_distinguishing_game(
    const QecmScheme& scheme, const CloningDistinguishingAttack& attack,
    const GameOptions& options);

/// Monogamy game value of either strategy form; lambda <= 3.
GameReport eval_moe_game(const MoeStrategy& strategy,
                         const std::string& name = "state_strategy");
GameReport eval_moe_game(const MoeChannelStrategy& strategy,
                         const std::string& name = "channel_strategy");

struct BoundRow {
  int n;
  double classical;
  double ideal;
  double conjugate;
  double qprf;
};

/// Per n: 1, 2^-n, (1/2 + 1/(2 sqrt 2))^n and min(1, 9 * 2^-n).
std::vector<BoundRow> bound_curves(int n_min, int n_max);

struct CurveOptions {
  /// "ce": Breidbart against conjugate encryption with lambda = n.
  /// "fce": best of the shipped attacks against F-conjugate encryption in
  /// the oracle model with `fce_lambda`.
  std::string witness = "ce";
  std::size_t trials = 10'000;
  std::uint64_t seed = 0;
  int fce_lambda = 8;
  int oracle_samples = 64;
  /// Conjugate-encryption rows up to this n are evaluated exactly.
  int exact_max_n = 5;
};

struct CurveRow {
  BoundRow bounds;
  std::string measured_attack;
  double measured_value = 0.0;
  double measured_std_error = 0.0;
  /// Bound column the witness is compared against.
  double measured_bound = 1.0;
};

/// bound_curves plus one measured witness value per n.
std::vector<CurveRow> witness_curve(int n_min, int n_max,
                                    const CurveOptions& options);
/// Header `n,classical,ideal,conjugate,qprf,measured_attack,measured_value`
/// followed by one line per row.
std::string curve_csv(const std::vector<CurveRow>& rows);

/// Cloning game under the min-entropy-h family; the report's bound is
/// 2^(-h + t) with t the scheme's uncloneability exponent.
GameReport min_entropy_experiment(const QecmScheme& scheme,
                                  const CloningAttack& attack, double h,
                                  const GameOptions& options);

/// Checks E_x f(x, x xor s) == E_x f(x xor s, x) exactly. `table` holds
/// f(a, b) at index a * 2^n + b with n = |s| <= 10.
bool xor_shift_identity_check(const std::vector<double>& table,
                              const BitString& s);

}  // namespace uncloneable
