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

#include "uncloneable/games.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>
#include <utility>

#include "uncloneable/errors.hpp"

namespace uncloneable {

namespace {

constexpr const char* kWitnessNote =
    "heuristic: the bound check covers this attack only, not every "
    "adversary; negligible terms are ignored";

const BitString kBit0 = BitString(0, 1);
const BitString kBit1 = BitString(1, 1);

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_short(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

int oracle_samples_of(const QecmScheme& scheme) {
  if (const auto* fce = dynamic_cast<const FConjugateEncryption*>(&scheme)) {
    if (fce->options().model == PrfModel::kRandomOracle) {
      return fce->options().oracle_samples;
    }
  }
  return 0;
}

std::string scheme_notes(const QecmScheme& scheme) {
  const int samples = oracle_samples_of(scheme);
  if (samples == 0) return kWitnessNote;
  return std::string(kWitnessNote) + "; f(s, .) averaged over " +
         std::to_string(samples) + " sampled random oracles";
}

void check_exact_capacity(std::size_t branches) {
  if (branches > kMaxExactBranches) {
    throw CapacityError("exact mode would enumerate " +
                        std::to_string(branches) + " branches (limit " +
                        std::to_string(kMaxExactBranches) +
                        "); use Monte Carlo mode instead");
  }
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > static_cast<std::size_t>(-1) / a) {
    return static_cast<std::size_t>(-1);
  }
  return a * b;
}

// Counts wins over trials [0, trials); trial t draws from
// Rng(derive_seed(seed, t)) so the total does not depend on the schedule.
template <typename Trial>
std::size_t count_wins(std::size_t trials, std::uint64_t seed,
                       unsigned threads, const Trial& trial) {
  if (trials == 0) throw ArgumentError("Monte Carlo needs at least one trial");
  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, 64));
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, trials));
  std::vector<std::size_t> wins(workers, 0);
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto run = [&](unsigned w) {
    const std::size_t begin = trials * w / workers;
    const std::size_t end = trials * (w + 1) / workers;
    try {
      for (std::size_t t = begin; t < end; ++t) {
        Rng rng(derive_seed(seed, t));
        if (trial(rng)) ++wins[w];
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return std::accumulate(wins.begin(), wins.end(), std::size_t{0});
}

void finish_monte_carlo(GameReport& report, std::size_t wins,
                        std::size_t trials) {
  const double p = static_cast<double>(wins) / static_cast<double>(trials);
  report.trials = trials;
  report.value = p;
  report.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

void finish_bound(GameReport& report) {
  report.value = std::clamp(report.value, 0.0, 1.0);
  report.bound_satisfied =
      report.value <= report.bound + 4.0 * report.std_error + 1e-9;
}

// Caches the split per classical ciphertext part; safe to share between
// Monte Carlo workers since map nodes never move.
class SplitCache {
 public:
  explicit SplitCache(const SplitFn& fn) : fn_(fn) {}
  const SplitInstrument& get(const std::optional<BitString>& classical) {
    const auto key = std::make_pair(classical.has_value(),
                                    classical.value_or(BitString()));
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, fn_(classical)).first;
    return it->second;
  }

 private:
  const SplitFn& fn_;
  std::mutex mutex_;
  std::map<std::pair<bool, BitString>, SplitInstrument> cache_;
};

std::size_t pick(const std::vector<double>& weights, Rng& rng) {
  return sample_index(weights, rng);
}

BitString sample_outcome(const Povm& povm, const Vector& in, Rng& rng) {
  std::vector<double> w;
  for (const auto& [label, e] : povm.elements()) {
    w.push_back(std::max(0.0, in.dot(e * in).real()));
  }
  return povm.elements()[pick(w, rng)].first;
}

// The two encryption experiments shared by the distinguishing games:
// b = 0 keeps gen's side register and encrypts 0^n; b = 1 measures M.
struct GenView {
  std::vector<GenBranch> zero;
  std::vector<GenBranch> one;
};

GenView gen_view(const std::shared_ptr<const DensityOperator>& gen,
                 std::size_t dim_s, int n) {
  if (!gen) throw ArgumentError("attack has no gen state");
  GenView view;
  view.zero.push_back(GenBranch{BitString::zeros(n), 1.0,
                                side_marginal(*gen, dim_s, n)});
  view.one = decompose_gen(*gen, dim_s, n);
  return view;
}

std::vector<double> branch_weights(const std::vector<GenBranch>& branches) {
  std::vector<double> w;
  for (const GenBranch& b : branches) w.push_back(b.probability);
  return w;
}

std::vector<double> side_weights(const GenBranch& branch) {
  std::vector<double> w;
  for (const auto& [mu, v] : branch.side_states) w.push_back(mu);
  return w;
}

std::size_t gen_branch_count(const GenView& view) {
  std::size_t total = 0;
  for (const auto* list : {&view.zero, &view.one}) {
    for (const GenBranch& b : *list) total += b.side_states.size();
  }
  return total;
}

GameReport base_report(const std::string& game, const QecmScheme& scheme,
                       const std::string& attack, const GameOptions& options) {
  GameReport r;
  r.game = game;
  r.scheme = scheme.name();
  r.attack = attack;
  r.lambda = scheme.lambda();
  r.message_bits = scheme.message_bits();
  r.mode = options.mode;
  r.seed = options.seed;
  r.oracle_samples = oracle_samples_of(scheme);
  r.notes = scheme_notes(scheme);
  return r;
}

}  // namespace

std::string to_string(GameMode mode) {
  return mode == GameMode::kExact ? "exact" : "monte_carlo";
}

GameMode parse_game_mode(const std::string& text) {
  if (text == "exact") return GameMode::kExact;
  if (text == "mc" || text == "monte_carlo") return GameMode::kMonteCarlo;
  throw ArgumentError("unknown mode '" + text +
                      "' (expected exact or monte_carlo)");
}

// --- MessageDistribution ---------------------------------------------------

MessageDistribution::MessageDistribution(std::map<BitString, double> table,
                                         std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  if (table_.empty()) throw ArgumentError("message distribution is empty");
  message_bits_ = table_.begin()->first.length();
  double sum = 0.0;
  for (const auto& [m, p] : table_) {
    if (m.length() != message_bits_) {
      throw ArgumentError("message distribution mixes string lengths");
    }
    if (!(p >= 0.0)) {
      throw ArgumentError("negative probability for message " + m.to_string());
    }
    sum += p;
    labels_.push_back(m);
    cumulative_.push_back(sum);
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ArgumentError("message probabilities sum to " + format_double(sum) +
                        ", not 1");
  }
}

MessageDistribution MessageDistribution::uniform(int n) {
  if (n < 1 || n > 20) {
    throw ArgumentError("uniform distribution needs 1 <= n <= 20");
  }
  std::map<BitString, double> table;
  const double p = std::ldexp(1.0, -n);
  for (const BitString& m : all_bitstrings(n)) table[m] = p;
  return MessageDistribution(std::move(table), "uniform");
}

MessageDistribution MessageDistribution::point_mass(const BitString& m) {
  return MessageDistribution({{m, 1.0}}, "point(" + m.to_string() + ")");
}

MessageDistribution MessageDistribution::min_entropy_family(
    int n, double h, std::optional<BitString> heavy) {
  if (n < 1 || n > 20) {
    throw ArgumentError("min-entropy family needs 1 <= n <= 20");
  }
  if (!(h >= 0.0) || h > n) {
    throw ArgumentError("min-entropy h=" + format_short(h) +
                        " must lie in [0, n=" + std::to_string(n) + "]");
  }
  const BitString top = heavy.value_or(BitString::zeros(n));
  if (top.length() != n) throw ArgumentError("heavy message has wrong length");
  const double p_top = std::exp2(-h);
  const double rest = (1.0 - p_top) / (std::ldexp(1.0, n) - 1.0);
  std::map<BitString, double> table;
  for (const BitString& m : all_bitstrings(n)) {
    const double p = m == top ? p_top : rest;
    if (p > 0.0) table[m] = p;
  }
  return MessageDistribution(std::move(table),
                             "min_entropy(h=" + format_short(h) + ")");
}

double MessageDistribution::min_entropy() const {
  double top = 0.0;
  for (const auto& [m, p] : table_) top = std::max(top, p);
  return -std::log2(top);
}

BitString MessageDistribution::sample(Rng& rng) const {
  const double u = uniform01(rng) * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto i = static_cast<std::size_t>(it - cumulative_.begin());
  return labels_[std::min(i, labels_.size() - 1)];
}

// --- GameReport ------------------------------------------------------------

nlohmann::ordered_json GameReport::to_json() const {
  nlohmann::ordered_json j;
  j["game"] = game;
  j["scheme"] = scheme;
  j["attack"] = attack;
  j["lambda"] = lambda;
  j["message_bits"] = message_bits;
  j["distribution"] = distribution;
  j["mode"] = to_string(mode);
  j["trials"] = trials;
  j["value"] = value;
  j["std_error"] = std_error;
  j["bound"] = bound;
  j["bound_name"] = bound_name;
  j["bound_satisfied"] = bound_satisfied;
  j["bound_heuristic"] = bound_heuristic;
  j["seed"] = seed;
  j["oracle_samples"] = oracle_samples;
  j["notes"] = notes;
  return j;
}

std::string GameReport::csv_header() {
  return "game,scheme,attack,lambda,message_bits,distribution,mode,trials,"
         "value,std_error,bound,bound_name,bound_satisfied,bound_heuristic,"
         "seed,oracle_samples,notes";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string GameReport::csv_row() const {
  std::string row;
  const auto add = [&row](const std::string& field) {
    if (!row.empty()) row += ',';
    row += field;
  };
  row = csv_field(game);
  add(csv_field(scheme));
  add(csv_field(attack));
  add(std::to_string(lambda));
  add(std::to_string(message_bits));
  add(csv_field(distribution));
  add(to_string(mode));
  add(std::to_string(trials));
  add(format_double(value));
  add(format_double(std_error));
  add(format_double(bound));
  add(csv_field(bound_name));
  add(bound_satisfied ? "true" : "false");
  add(bound_heuristic ? "true" : "false");
  add(std::to_string(seed));
  add(std::to_string(oracle_samples));
  add(csv_field(notes));
  return row;
}

// --- Cloning game ----------------------------------------------------------

GameReport eval_cloning_game(const QecmScheme& scheme,
                             const CloningAttack& attack,
                             const MessageDistribution& dist,
                             const GameOptions& options) {
  check_compatible(attack, scheme);
  if (dist.message_bits() != scheme.message_bits()) {
    throw ArgumentError("message distribution is over " +
                        std::to_string(dist.message_bits()) +
                        "-bit strings but the scheme encrypts " +
                        std::to_string(scheme.message_bits()) + " bits");
  }
  GameReport report = base_report("cloning", scheme, attack.name, options);
  report.distribution = dist.name();
  const double h = dist.min_entropy();
  const double t = scheme.uncloneable_exponent();
  report.bound = std::exp2(t - h);
  report.bound_name = "2^(t-h), t=" + format_short(t) + ", h=" + format_short(h);

  if (options.mode == GameMode::kExact) {
    check_exact_capacity(saturating_mul(
        saturating_mul(dist.table().size(), scheme.key_support_size()),
        scheme.enc_randomness_size()));
    SplitCache splits(attack.split);
    double value = 0.0;
    for (const WeightedKey& wk : scheme.keys_exact()) {
      for (const auto& [m, pm] : dist.table()) {
        if (pm == 0.0) continue;
        for (const WeightedCiphertext& wc : scheme.enc_exact(wk.key, m)) {
          const SplitInstrument& inst = splits.get(wc.ciphertext.classical_part);
          value += wk.probability * pm * wc.probability *
                   split_success(inst, wc.ciphertext.quantum_part.amplitudes(),
                                 attack.decode_b, attack.decode_c, wk.key, m,
                                 m);
        }
      }
    }
    report.value = value;
  } else {
    SplitCache splits(attack.split);
    const std::size_t wins = count_wins(
        options.trials, options.seed, options.threads, [&](Rng& rng) {
          const BitString m = dist.sample(rng);
          const Key key = scheme.keygen(rng);
          const Ciphertext ct = scheme.enc(key, m, rng);
          std::pair<BitString, BitString> out;
          if (attack.sampler) {
            out = attack.sampler(ct, key, rng);
          } else {
            out = sample_split_outputs(splits.get(ct.classical_part),
                                       ct.quantum_part.amplitudes(),
                                       attack.decode_b, attack.decode_c, key,
                                       rng);
          }
          return out.first == m && out.second == m;
        });
    finish_monte_carlo(report, wins, options.trials);
  }
  finish_bound(report);
  return report;
}

// --- Distinguishing games --------------------------------------------------

GameReport eval_distinguishing_game(const QecmScheme& scheme,
                                    const DistinguishingAttack& attack,
                                    const GameOptions& options) {
  check_compatible(attack, scheme);
  GameReport report =
      base_report("distinguishing", scheme, attack.name, options);
  report.distribution = "gen";
  report.bound = 0.5;
  report.bound_name = "1/2";
  const int n = scheme.message_bits();
  const GenView view = gen_view(attack.gen, attack.dim_s, n);
  const auto measurement = [&](const Ciphertext& ct, const Key& key) {
    const Povm povm =
        attack.measure(ct.classical_part, options.leak_key ? &key : nullptr);
    const std::size_t want =
        attack.dim_s * static_cast<std::size_t>(ct.quantum_part.dim());
    if (povm.dim() != want) {
      throw ArgumentError("distinguisher POVM acts on dimension " +
                          std::to_string(povm.dim()) + ", expected " +
                          std::to_string(want));
    }
    return povm;
  };

  if (options.mode == GameMode::kExact) {
    check_exact_capacity(
        saturating_mul(saturating_mul(gen_branch_count(view),
                                      scheme.key_support_size()),
                       scheme.enc_randomness_size()));
    double value = 0.0;
    for (const WeightedKey& wk : scheme.keys_exact()) {
      for (int b = 0; b < 2; ++b) {
        const BitString want = b ? kBit1 : kBit0;
        for (const GenBranch& branch : b ? view.one : view.zero) {
          for (const WeightedCiphertext& wc :
               scheme.enc_exact(wk.key, branch.message)) {
            const Matrix e =
                measurement(wc.ciphertext, wk.key).element(want);
            for (const auto& [mu, v] : branch.side_states) {
              const Vector in =
                  kron(v, wc.ciphertext.quantum_part.amplitudes());
              value += 0.5 * wk.probability * branch.probability *
                       wc.probability * mu * in.dot(e * in).real();
            }
          }
        }
      }
    }
    report.value = value;
  } else {
    const std::vector<double> one_w = branch_weights(view.one);
    const std::size_t wins = count_wins(
        options.trials, options.seed, options.threads, [&](Rng& rng) {
          const int b = static_cast<int>(uniform_below(rng, 2));
          const Key key = scheme.keygen(rng);
          const GenBranch& branch =
              b ? view.one[pick(one_w, rng)] : view.zero.front();
          const Vector& side =
              branch.side_states[pick(side_weights(branch), rng)].second;
          const Ciphertext ct = scheme.enc(key, branch.message, rng);
          const Vector in = kron(side, ct.quantum_part.amplitudes());
          return sample_outcome(measurement(ct, key), in, rng) ==
                 (b ? kBit1 : kBit0);
        });
    finish_monte_carlo(report, wins, options.trials);
  }
  finish_bound(report);
  return report;
}

GameReport eval_cloning_distinguishing_game(
    const QecmScheme& scheme, const CloningDistinguishingAttack& attack,
    const GameOptions& options) {
  check_compatible(attack, scheme);
  GameReport report =
      base_report("cloning_distinguishing", scheme, attack.name, options);
  report.distribution = "gen";
  report.bound = 0.5;
  report.bound_name = "1/2";
  const int n = scheme.message_bits();
  const GenView view = gen_view(attack.gen, attack.dim_s, n);

  if (options.mode == GameMode::kExact) {
    check_exact_capacity(
        saturating_mul(saturating_mul(gen_branch_count(view),
                                      scheme.key_support_size()),
                       scheme.enc_randomness_size()));
    SplitCache splits(attack.split);
    double value = 0.0;
    for (const WeightedKey& wk : scheme.keys_exact()) {
      for (int b = 0; b < 2; ++b) {
        const BitString want = b ? kBit1 : kBit0;
        for (const GenBranch& branch : b ? view.one : view.zero) {
          for (const WeightedCiphertext& wc :
               scheme.enc_exact(wk.key, branch.message)) {
            const SplitInstrument& inst =
                splits.get(wc.ciphertext.classical_part);
            for (const auto& [mu, v] : branch.side_states) {
              const Vector in =
                  kron(v, wc.ciphertext.quantum_part.amplitudes());
              value += 0.5 * wk.probability * branch.probability *
                       wc.probability * mu *
                       split_success(inst, in, attack.decode_b,
                                     attack.decode_c, wk.key, want, want);
            }
          }
        }
      }
    }
    report.value = value;
  } else {
    SplitCache splits(attack.split);
    const std::vector<double> one_w = branch_weights(view.one);
    const std::size_t wins = count_wins(
        options.trials, options.seed, options.threads, [&](Rng& rng) {
          const int b = static_cast<int>(uniform_below(rng, 2));
          const Key key = scheme.keygen(rng);
          const GenBranch& branch =
              b ? view.one[pick(one_w, rng)] : view.zero.front();
          const Vector& side =
              branch.side_states[pick(side_weights(branch), rng)].second;
          const Ciphertext ct = scheme.enc(key, branch.message, rng);
          const Vector in = kron(side, ct.quantum_part.amplitudes());
          const auto [ob, oc] =
              sample_split_outputs(splits.get(ct.classical_part), in,
                                   attack.decode_b, attack.decode_c, key, rng);
          const BitString want = b ? kBit1 : kBit0;
          return ob == want && oc == want;
        });
    finish_monte_carlo(report, wins, options.trials);
  }
  finish_bound(report);
  return report;
}

// --- Monogamy game ---------------------------------------------------------

namespace {

GameReport moe_report(int lambda, double value, const std::string& name) {
  GameReport r;
  r.game = "moe";
  r.scheme = "wiesner";
  r.attack = name;
  r.lambda = lambda;
  r.message_bits = lambda;
  r.distribution = "uniform";
  r.mode = GameMode::kExact;
  r.value = value;
  r.bound = moe_bound(lambda);
  r.bound_name = "(1/2+1/(2*sqrt(2)))^lambda";
  r.notes = kWitnessNote;
  finish_bound(r);
  return r;
}

void check_moe_lambda(int lambda) {
  if (lambda < 1 || lambda > 3) {
    throw ArgumentError("monogamy game evaluation supports lambda in [1, 3]");
  }
}

}  // namespace

GameReport eval_moe_game(const MoeStrategy& strategy, const std::string& name) {
  check_moe_lambda(strategy.lambda);
  return moe_report(strategy.lambda, moe_value(strategy), name);
}

GameReport eval_moe_game(const MoeChannelStrategy& strategy,
                         const std::string& name) {
  check_moe_lambda(strategy.lambda);
  return moe_report(strategy.lambda, moe_value(strategy), name);
}

// --- Bound curves, min-entropy, xor shift ----------------------------------

std::vector<BoundRow> bound_curves(int n_min, int n_max) {
  if (n_min < 1) throw ArgumentError("bound curves need n_min >= 1");
  if (n_max < n_min) throw ArgumentError("bound curves need n_max >= n_min");
  std::vector<BoundRow> rows;
  const double base = 0.5 + 1.0 / (2.0 * std::sqrt(2.0));
  for (int n = n_min; n <= n_max; ++n) {
    rows.push_back(BoundRow{n, 1.0, std::ldexp(1.0, -n), std::pow(base, n),
                            std::min(1.0, 9.0 * std::ldexp(1.0, -n))});
  }
  return rows;
}

std::vector<CurveRow> witness_curve(int n_min, int n_max,
                                    const CurveOptions& options) {
  if (options.witness != "ce" && options.witness != "fce") {
    throw ArgumentError("unknown curve witness '" + options.witness +
                        "' (expected ce or fce)");
  }
  std::vector<CurveRow> rows;
  for (const BoundRow& b : bound_curves(n_min, n_max)) {
    CurveRow row{b, "", 0.0, 0.0, 1.0};
    GameOptions game;
    game.trials = options.trials;
    game.seed = derive_seed(options.seed, static_cast<std::uint64_t>(b.n));
    game.threads = 1;
    const MessageDistribution uniform = MessageDistribution::uniform(b.n);
    if (options.witness == "ce") {
      const ConjugateEncryption scheme(b.n);
      game.mode = b.n <= options.exact_max_n ? GameMode::kExact
                                             : GameMode::kMonteCarlo;
      const GameReport r =
          eval_cloning_game(scheme, breidbart_attack(scheme), uniform, game);
      row.measured_attack = "breidbart";
      row.measured_value = r.value;
      row.measured_std_error = r.std_error;
      row.measured_bound = b.conjugate;
    } else {
      FceOptions fo;
      fo.lambda = options.fce_lambda;
      fo.message_bits = b.n;
      fo.oracle_samples = options.oracle_samples;
      fo.oracle_seed = options.seed;
      const FConjugateEncryption scheme(fo);
      game.mode = GameMode::kMonteCarlo;
      const std::vector<CloningAttack> attacks = {
          guess_attack(scheme, BitString::zeros(b.n)),
          transform_cd_to_cloning(
              constant_message_cd_attack(scheme, BitString::ones(b.n)))};
      bool first = true;
      for (const CloningAttack& a : attacks) {
        const GameReport r = eval_cloning_game(scheme, a, uniform, game);
        if (first || r.value > row.measured_value) {
          row.measured_attack = "fce:" + a.name;
          row.measured_value = r.value;
          row.measured_std_error = r.std_error;
          first = false;
        }
      }
      row.measured_bound = b.qprf;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string curve_csv(const std::vector<CurveRow>& rows) {
  std::string out =
      "n,classical,ideal,conjugate,qprf,measured_attack,measured_value\n";
  for (const CurveRow& r : rows) {
    out += std::to_string(r.bounds.n) + "," +
           format_double(r.bounds.classical) + "," +
           format_double(r.bounds.ideal) + "," +
           format_double(r.bounds.conjugate) + "," +
           format_double(r.bounds.qprf) + "," + csv_field(r.measured_attack) +
           "," + format_double(r.measured_value) + "\n";
  }
  return out;
}

GameReport min_entropy_experiment(const QecmScheme& scheme,
                                  const CloningAttack& attack, double h,
                                  const GameOptions& options) {
  const int n = scheme.message_bits();
  if (h > n) {
    throw ArgumentError("min-entropy h=" + format_short(h) +
                        " exceeds the message size n=" + std::to_string(n));
  }
  GameReport report = eval_cloning_game(
      scheme, attack, MessageDistribution::min_entropy_family(n, h), options);
  report.game = "min_entropy";
  return report;
}

bool xor_shift_identity_check(const std::vector<double>& table,
                              const BitString& s) {
  const int n = s.length();
  if (n > 10) throw ArgumentError("xor-shift check supports n <= 10");
  const std::size_t size = std::size_t{1} << n;
  if (table.size() != size * size) {
    throw ArgumentError("table must hold 4^n entries");
  }
  std::vector<double> left, right;
  for (std::size_t x = 0; x < size; ++x) {
    const std::size_t xs = x ^ s.value();
    left.push_back(table[x * size + xs]);
    right.push_back(table[xs * size + x]);
  }
  // Summing both sides in sorted order makes the comparison exact.
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  const double l = std::accumulate(left.begin(), left.end(), 0.0);
  const double r = std::accumulate(right.begin(), right.end(), 0.0);
  return l == r;
}

}  // namespace uncloneable
