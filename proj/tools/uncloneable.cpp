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

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uncloneable/acceptance.hpp"
#include "uncloneable/attacks.hpp"
#include "uncloneable/errors.hpp"
#include "uncloneable/games.hpp"
#include "uncloneable/hash.hpp"
#include "uncloneable/moe.hpp"
#include "uncloneable/schemes.hpp"

namespace {

using nlohmann::ordered_json;
using namespace uncloneable;

constexpr int kExitFailure = 1;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitCapacity = 3;

constexpr const char* kSeedEnv = "UNCLONEABLE_SEED";

// Thrown for anything wrong with the configuration itself.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return 0;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos ||
      text.size() > 20) {
    throw ConfigError(std::string(kSeedEnv) + " must be an unsigned integer");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw ConfigError(std::string(kSeedEnv) + " is out of range");
  }
}

// One subcommand's configuration: defaults, then a JSON file, then flags.
class Config {
 public:
  Config(CLI::App* app, ordered_json defaults)
      : app_(app), values_(std::move(defaults)) {
    for (const auto& [key, value] : values_.items()) {
      std::string flag = "--" + key;
      for (char& c : flag) {
        if (c == '_') c = '-';
      }
      if (value.is_boolean()) {
        flags_[key] = app_->add_flag(flag, bools_[key], key);
      } else {
        flags_[key] = app_->add_option(flag, texts_[key], key);
      }
    }
    app_->add_option("--config", config_path_,
                     "JSON file with any of the keys above");
    app_->add_option("--output", output_, "write output to this file");
  }

  // Applies the config file and explicit flags; unknown keys are errors.
  void resolve() {
    if (!config_path_.empty()) {
      std::ifstream in(config_path_);
      if (!in) throw ConfigError("cannot read config file " + config_path_);
      ordered_json file;
      try {
        file = ordered_json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file is not valid JSON: " +
                          std::string(e.what()));
      }
      if (!file.is_object()) throw ConfigError("config file must hold an object");
      for (const auto& [key, value] : file.items()) {
        if (key == "output") {
          if (!value.is_string()) throw ConfigError("'output' must be a string");
          if (output_.empty()) output_ = value.get<std::string>();
          continue;
        }
        if (!values_.contains(key)) {
          throw ConfigError("unknown config key '" + key + "'");
        }
        set(key, value);
      }
    }
    for (const auto& [key, opt] : flags_) {
      if (opt->count() == 0) continue;
      if (values_[key].is_boolean()) {
        values_[key] = bools_[key];
      } else {
        set(key, parse_text(key, texts_[key]));
      }
    }
  }

  const ordered_json& values() const { return values_; }
  const std::string& output() const { return output_; }
  std::string hash() const { return sha256_hex(values_.dump()); }

  template <typename T>
  T get(const std::string& key) const {
    return values_.at(key).get<T>();
  }

 private:
  // Reads a flag's text as the JSON type of the key's default.
  ordered_json parse_text(const std::string& key, const std::string& text) {
    const ordered_json& def = values_[key];
    if (def.is_string()) return text;
    try {
      std::size_t used = 0;
      if (def.is_number_unsigned()) {
        if (!text.empty() && text[0] == '-') throw std::invalid_argument(text);
        const std::uint64_t v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
      }
      if (def.is_number_integer()) {
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
      }
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("invalid value '" + text + "' for --" + key);
    }
  }

  void set(const std::string& key, const ordered_json& value) {
    const ordered_json& def = values_[key];
    const bool ok =
        (def.is_string() && value.is_string()) ||
        (def.is_boolean() && value.is_boolean()) ||
        (def.is_number_unsigned() && value.is_number_unsigned()) ||
        (def.is_number_integer() && !def.is_number_unsigned() &&
         value.is_number_integer()) ||
        (def.is_number_float() && value.is_number());
    if (!ok) {
      throw ConfigError("config key '" + key + "' has the wrong type");
    }
    values_[key] = def.is_number_float() ? ordered_json(value.get<double>())
                                         : value;
  }

  CLI::App* app_;
  ordered_json values_;
  std::map<std::string, CLI::Option*> flags_;
  std::map<std::string, std::string> texts_;
  std::map<std::string, bool> bools_;
  std::string config_path_;
  std::string output_;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file " + path);
  out << text;
}

ordered_json envelope(const std::string& command, const Config& config) {
  ordered_json j;
  j["command"] = command;
  j["seed"] = config.get<std::uint64_t>("seed");
  j["config_hash"] = config.hash();
  j["config"] = config.values();
  return j;
}

// --- game ------------------------------------------------------------------

std::shared_ptr<const QecmScheme> make_scheme(const Config& c) {
  const std::string name = c.get<std::string>("scheme");
  const int lambda = c.get<int>("lambda");
  if (lambda < 1) throw ConfigError("lambda must be at least 1");
  if (name == "ce") return std::make_shared<ConjugateEncryption>(lambda);
  if (name == "otp") return otp_classical(lambda);
  if (name == "fce") {
    FceOptions o;
    o.lambda = lambda;
    const int n = c.get<int>("message_bits");
    o.message_bits = n == 0 ? lambda : n;
    const std::string model = c.get<std::string>("model");
    if (model == "oracle") {
      o.model = PrfModel::kRandomOracle;
    } else if (model == "qprf") {
      o.model = PrfModel::kQprf;
    } else {
      throw ConfigError("unknown model '" + model + "' (oracle or qprf)");
    }
    o.oracle_samples = c.get<int>("oracles");
    if (o.oracle_samples < 1) throw ConfigError("oracles must be at least 1");
    o.oracle_seed = c.get<std::uint64_t>("oracle_seed");
    return std::make_shared<FConjugateEncryption>(o);
  }
  throw ConfigError("unknown scheme '" + name + "' (ce, fce or otp)");
}

BitString message_param(const Config& c, const QecmScheme& s,
                        const std::string& key, bool ones) {
  const std::string text = c.get<std::string>(key);
  const int n = s.message_bits();
  if (text.empty()) return ones ? BitString::ones(n) : BitString::zeros(n);
  BitString m;
  try {
    m = BitString::parse(text);
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' must be a bit string");
  }
  if (m.length() != n) {
    throw ConfigError("'" + key + "' must have " + std::to_string(n) + " bits");
  }
  return m;
}

CloningDistinguishingAttack make_cd_attack(const std::string& name,
                                           const Config& c,
                                           const QecmScheme& s) {
  if (name == "fixed_bit") {
    const int bit = c.get<int>("attack_bit");
    if (bit != 0 && bit != 1) throw ConfigError("attack_bit must be 0 or 1");
    return fixed_bit_cd_attack(s, bit);
  }
  if (name == "constant_message") {
    return constant_message_cd_attack(s, message_param(c, s, "attack_message", true));
  }
  if (name == "half_split") return half_split_cd_attack(s);
  if (name == "random_cd") {
    return random_cd_attack(s, c.get<std::uint64_t>("attack_seed"));
  }
  throw ConfigError("unknown cloning-distinguishing attack '" + name +
                    "' (fixed_bit, constant_message, half_split, random_cd)");
}

CloningAttack make_cloning_attack(const Config& c,
                                  const std::shared_ptr<const QecmScheme>& s) {
  const std::string name = c.get<std::string>("attack");
  if (name == "copy") return copy_attack(s);
  if (name == "guess") return guess_attack(*s, message_param(c, *s, "attack_message", false));
  if (name == "breidbart") return breidbart_attack(*s);
  if (name == "split_measure") return split_measure_attack(*s);
  const std::string prefix = "transformed_";
  if (name.rfind(prefix, 0) == 0) {
    return transform_cd_to_cloning(
        make_cd_attack(name.substr(prefix.size()), c, *s));
  }
  throw ConfigError("unknown cloning attack '" + name +
                    "' (copy, guess, breidbart, split_measure, or transformed_ "
                    "followed by a cloning-distinguishing attack)");
}

DistinguishingAttack make_distinguishing_attack(
    const Config& c, const std::shared_ptr<const QecmScheme>& s) {
  const std::string name = c.get<std::string>("attack");
  if (name == "random_coin") return random_coin_attack(*s);
  if (name == "leaked_key") return leaked_key_attack(s);
  if (name == "random_distinguisher") {
    return random_distinguishing_attack(*s, c.get<std::uint64_t>("attack_seed"));
  }
  throw ConfigError("unknown distinguishing attack '" + name +
                    "' (random_coin, leaked_key, random_distinguisher)");
}

MessageDistribution make_distribution(const Config& c, const QecmScheme& s) {
  const std::string name = c.get<std::string>("dist");
  const int n = s.message_bits();
  if (name == "uniform") return MessageDistribution::uniform(n);
  if (name == "point") {
    return MessageDistribution::point_mass(message_param(c, s, "point", false));
  }
  if (name == "min_entropy") {
    return MessageDistribution::min_entropy_family(n, c.get<double>("entropy"));
  }
  throw ConfigError("unknown distribution '" + name +
                    "' (uniform, point, min_entropy)");
}

int run_game(const Config& c) {
  const auto scheme = make_scheme(c);
  GameOptions o;
  o.mode = parse_game_mode(c.get<std::string>("mode"));
  const long long trials = c.get<long long>("trials");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  o.trials = static_cast<std::size_t>(trials);
  o.seed = c.get<std::uint64_t>("seed");
  o.leak_key = c.get<bool>("leak_key");
  const std::string game = c.get<std::string>("game");
  GameReport report;
  if (game == "cloning") {
    report = eval_cloning_game(*scheme, make_cloning_attack(c, scheme),
                               make_distribution(c, *scheme), o);
  } else if (game == "min_entropy") {
    report = min_entropy_experiment(*scheme, make_cloning_attack(c, scheme),
                                    c.get<double>("entropy"), o);
  } else if (game == "distinguishing") {
    report = eval_distinguishing_game(*scheme,
                                      make_distinguishing_attack(c, scheme), o);
  } else if (game == "cloning_distinguishing") {
    report = eval_cloning_distinguishing_game(
        *scheme, make_cd_attack(c.get<std::string>("attack"), c, *scheme), o);
  } else {
    throw ConfigError("unknown game '" + game +
                      "' (cloning, min_entropy, distinguishing, "
                      "cloning_distinguishing)");
  }
  ordered_json out = envelope("game", c);
  out["report"] = report.to_json();
  emit(out.dump(2) + "\n", c.output());
  return 0;
}

// --- curve -----------------------------------------------------------------

int run_curve(const Config& c) {
  CurveOptions o;
  o.witness = c.get<std::string>("witness");
  const long long trials = c.get<long long>("trials");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  o.trials = static_cast<std::size_t>(trials);
  o.seed = c.get<std::uint64_t>("seed");
  o.fce_lambda = c.get<int>("fce_lambda");
  o.oracle_samples = c.get<int>("oracles");
  o.exact_max_n = c.get<int>("exact_max_n");
  const int lo = c.get<int>("min");
  const int hi = c.get<int>("max");
  if (lo < 1 || hi < lo) throw ConfigError("need 1 <= min <= max");
  if (hi > 14) throw ConfigError("max is limited to 14");
  const std::string csv = curve_csv(witness_curve(lo, hi, o));
  emit(csv, c.output());
  const ordered_json meta = envelope("curve", c);
  std::cerr << "# seed=" << o.seed << " config_hash=" << c.hash() << "\n";
  if (!c.output().empty()) {
    std::ofstream side(c.output() + ".meta.json", std::ios::binary);
    if (!side) throw ConfigError("cannot write " + c.output() + ".meta.json");
    side << meta.dump(2) << "\n";
  }
  return 0;
}

// --- moe -------------------------------------------------------------------

int run_moe(const Config& c) {
  SeesawOptions base;
  base.lambda = c.get<int>("lambda");
  const int dim_b = c.get<int>("dim_b");
  const int dim_c = c.get<int>("dim_c");
  if (dim_b < 0 || dim_c < 0) throw ConfigError("dimensions must be >= 0");
  base.dim_b = static_cast<std::size_t>(dim_b);
  base.dim_c = static_cast<std::size_t>(dim_c);
  base.max_iterations = c.get<int>("iterations");
  base.tolerance = c.get<double>("tolerance");
  const int restarts = c.get<int>("restarts");
  if (restarts < 1) throw ConfigError("restarts must be at least 1");
  const std::uint64_t seed = c.get<std::uint64_t>("seed");

  ordered_json runs = ordered_json::array();
  std::optional<SeesawResult> best;
  std::uint64_t best_seed = seed;
  for (int i = 0; i < restarts; ++i) {
    SeesawOptions o = base;
    o.seed = seed + static_cast<std::uint64_t>(i);
    SeesawResult r = seesaw_optimize_moe(o);
    ordered_json run;
    run["seed"] = o.seed;
    run["value"] = r.value;
    run["iterations"] = r.iterations;
    run["converged"] = r.converged;
    runs.push_back(run);
    if (!best || r.value > best->value) {
      best_seed = o.seed;
      best = std::move(r);
    }
  }
  const GameReport report = eval_moe_game(best->strategy, "seesaw");
  ordered_json result;
  result["best_value"] = best->value;
  result["bound"] = moe_bound(base.lambda);
  result["bound_satisfied"] = report.bound_satisfied;
  result["best_seed"] = best_seed;
  result["dim_b"] = best->strategy.dim_b;
  result["dim_c"] = best->strategy.dim_c;
  result["history"] = best->history;
  result["runs"] = runs;
  result["report"] = report.to_json();
  ordered_json out = envelope("moe", c);
  out["result"] = result;
  emit(out.dump(2) + "\n", c.output());
  return 0;
}

// --- verify ----------------------------------------------------------------

int run_verify(const Config& c) {
  const bool fast = c.get<bool>("fast");
  std::ostringstream text;
  text << "# verify seed=" << c.get<std::uint64_t>("seed")
       << " config_hash=" << c.hash() << "\n";
  bool all = true;
  for (const CriterionResult& r : run_acceptance(fast)) {
    text << format_result(r) << "\n";
    all &= r.passed;
  }
  emit(text.str(), c.output());
  return all ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Security-game simulator for quantum encryption of classical "
               "messages"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  }

  CLI::App* game = app.add_subcommand("game", "evaluate one security game");
  Config game_cfg(game, ordered_json{{"scheme", "ce"},
                                     {"lambda", 2},
                                     {"message_bits", 0},
                                     {"model", "oracle"},
                                     {"oracles", 64},
                                     {"oracle_seed", std::uint64_t{0}},
                                     {"game", "cloning"},
                                     {"attack", "breidbart"},
                                     {"attack_message", ""},
                                     {"attack_bit", 0},
                                     {"attack_seed", std::uint64_t{0}},
                                     {"dist", "uniform"},
                                     {"point", ""},
                                     {"entropy", 0.0},
                                     {"mode", "exact"},
                                     {"trials", 10000},
                                     {"seed", seed},
                                     {"leak_key", false}});

  CLI::App* curve = app.add_subcommand("curve", "bound curves with witnesses");
  Config curve_cfg(curve, ordered_json{{"min", 1},
                                       {"max", 10},
                                       {"witness", "ce"},
                                       {"trials", 10000},
                                       {"fce_lambda", 8},
                                       {"oracles", 64},
                                       {"exact_max_n", 5},
                                       {"seed", seed}});

  CLI::App* moe = app.add_subcommand("moe", "seesaw search for monogamy game strategies");
  Config moe_cfg(moe, ordered_json{{"lambda", 1},
                                   {"dim_b", 0},
                                   {"dim_c", 0},
                                   {"iterations", 200},
                                   {"tolerance", 1e-10},
                                   {"restarts", 10},
                                   {"seed", seed}});

  CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
  Config verify_cfg(verify, ordered_json{{"fast", false}, {"seed", seed}});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    if (*game) {
      game_cfg.resolve();
      return run_game(game_cfg);
    }
    if (*curve) {
      curve_cfg.resolve();
      return run_curve(curve_cfg);
    }
    if (*moe) {
      moe_cfg.resolve();
      return run_moe(moe_cfg);
    }
    verify_cfg.resolve();
    return run_verify(verify_cfg);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const ArgumentError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const UnsupportedError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
