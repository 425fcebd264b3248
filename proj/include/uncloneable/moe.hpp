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
#include <vector>

#include "uncloneable/quantum.hpp"

namespace uncloneable {

/// Tripartite strategy for the monogamy game: a state on A (lambda qubits)
/// (x) B (x) C and, for every basis choice theta (indexed by its integer
/// value), guessing POVMs for B and C labelled by lambda-bit strings.
struct MoeStrategy {
  int lambda = 1;
  std::size_t dim_b = 1;
  std::size_t dim_c = 1;
  DensityOperator state = DensityOperator::maximally_mixed(2);
  std::vector<Povm> b_povms;
  std::vector<Povm> c_povms;
};

/// The same game played by splitting a Wiesner state with `split` into
/// B (x) C; the POVMs are as in MoeStrategy.
struct MoeChannelStrategy {
  int lambda = 1;
  std::size_t dim_b = 1;
  std::size_t dim_c = 1;
  KrausChannel split = KrausChannel::identity(2);
  std::vector<Povm> b_povms;
  std::vector<Povm> c_povms;
};

/// Throws ArgumentError if dimensions, POVM counts or labels are off.
void validate(const MoeStrategy& s);
void validate(const MoeChannelStrategy& s);

/// E_theta sum_x Tr[(|x^theta><x^theta| (x) B_x (x) C_x) rho].
double moe_value(const MoeStrategy& s);
/// E_theta E_x Tr[(B_x (x) C_x) split(|x^theta><x^theta|)].
double moe_value(const MoeChannelStrategy& s);

/// rho = (Id (x) split)|EPR><EPR|, POVMs unchanged.
MoeStrategy to_state_form(const MoeChannelStrategy& s);

/// Measure each qubit in the Breidbart basis and send the outcome string to
/// both sides (dim_b = dim_c = 2^lambda), who read it out directly.
MoeChannelStrategy breidbart_moe_strategy(int lambda);
/// Both sides always answer 0^lambda.
MoeStrategy trivial_moe_strategy(int lambda, std::size_t dim_b = 1,
                                 std::size_t dim_c = 1);
MoeStrategy random_moe_strategy(int lambda, std::size_t dim_b,
                                std::size_t dim_c, std::uint64_t seed);
MoeChannelStrategy random_moe_channel_strategy(int lambda, std::size_t dim_b,
                                               std::size_t dim_c,
                                               std::uint64_t seed);

/// (1/2 + 1/(2 sqrt 2))^lambda.
double moe_bound(int lambda);

struct SeesawOptions {
  int lambda = 1;
  /// 0 selects 2^lambda.
  std::size_t dim_b = 0;
  std::size_t dim_c = 0;
  int max_iterations = 200;
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
};

struct SeesawResult {
  MoeStrategy strategy;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
  /// Value after every full round; nondecreasing.
  std::vector<double> history;
};

/// Alternating maximisation from random POVMs: the state step takes the top
/// eigenvector of the payoff operator, the POVM steps improve each side's
/// measurement for every theta with the other two fixed. Never throws on
/// non-convergence; `converged` reports it. lambda <= 2.
SeesawResult seesaw_optimize_moe(const SeesawOptions& options);

}  // namespace uncloneable
