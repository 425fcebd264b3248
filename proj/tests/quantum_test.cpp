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

#include "uncloneable/quantum.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "uncloneable/errors.hpp"

namespace uncloneable {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void expect_amplitudes(const PureState& psi, const std::vector<double>& want) {
  ASSERT_EQ(psi.dim(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(std::abs(psi.amplitudes()(static_cast<Eigen::Index>(i)) -
                         Complex(want[i])),
                0.0, 1e-12)
        << "index " << i;
  }
}

Matrix identity(std::size_t d) {
  return Matrix::Identity(static_cast<Eigen::Index>(d),
                          static_cast<Eigen::Index>(d));
}

TEST(WiesnerStateTest, SingleQubitCases) {
  expect_amplitudes(wiesner_state(BitString(0, 1), BitString(0, 1)), {1, 0});
  expect_amplitudes(wiesner_state(BitString(1, 1), BitString(1, 1)),
                    {kInvSqrt2, -kInvSqrt2});
}

TEST(WiesnerStateTest, TwoQubitOrdering) {
  // Frozen from tests/oracles/cloning_values.py.
  expect_amplitudes(
      wiesner_state(BitString::parse("01"), BitString::parse("10")),
      {0, 0.7071067811865476, 0, 0.7071067811865476});
}

TEST(WiesnerStateTest, LengthMismatchThrows) {
  EXPECT_THROW(wiesner_state(BitString(0, 2), BitString(0, 3)), ArgumentError);
}

TEST(WiesnerStateTest, OrthonormalWithinEveryBasis) {
  for (int n = 1; n <= 4; ++n) {
    for (const BitString& theta : all_bitstrings(n)) {
      for (const BitString& x : all_bitstrings(n)) {
        for (const BitString& y : all_bitstrings(n)) {
          const Complex ip = wiesner_state(x, theta).amplitudes().dot(
              wiesner_state(y, theta).amplitudes());
          EXPECT_NEAR(std::abs(ip - Complex(x == y ? 1.0 : 0.0)), 0.0, 1e-9);
        }
      }
    }
  }
}

TEST(WiesnerStateTest, ComplementaryBasesAreMutuallyUnbiased) {
  for (int n = 1; n <= 4; ++n) {
    for (const BitString& theta : all_bitstrings(n)) {
      const BitString other = theta ^ BitString::ones(n);
      for (const BitString& x : all_bitstrings(n)) {
        for (const BitString& y : all_bitstrings(n)) {
          const double overlap = std::norm(wiesner_state(x, theta).amplitudes().dot(
              wiesner_state(y, other).amplitudes()));
          EXPECT_NEAR(overlap, std::ldexp(1.0, -n), 1e-9);
        }
      }
    }
  }
}

TEST(WiesnerStateTest, FastHadamardsMatchDenseBasis) {
  Rng rng(4);
  const PureState psi = random_pure_state(8, rng);
  for (const BitString& theta : all_bitstrings(3)) {
    const Vector dense = wiesner_basis(theta) * psi.amplitudes();
    EXPECT_LT((apply_hadamards(psi.amplitudes(), theta) - dense).norm(), 1e-12);
    const auto dist = wiesner_distribution(psi, theta);
    for (const BitString& x : all_bitstrings(3)) {
      EXPECT_NEAR(dist[x.value()],
                  std::norm(wiesner_state(x, theta).amplitudes().dot(
                      psi.amplitudes())),
                  1e-12);
    }
  }
}

TEST(EprStateTest, Amplitudes) {
  expect_amplitudes(epr_state(1), {kInvSqrt2, 0, 0, kInvSqrt2});
  const PureState e2 = epr_state(2);
  for (Eigen::Index i = 0; i < 16; ++i) {
    const bool diagonal = i == 0 || i == 5 || i == 10 || i == 15;
    EXPECT_NEAR(std::abs(e2.amplitudes()(i) - Complex(diagonal ? 0.5 : 0.0)),
                0.0, 1e-15);
  }
  EXPECT_NEAR(epr_state(3).amplitudes().norm(), 1.0, 1e-12);
  EXPECT_THROW(epr_state(0), ArgumentError);
}

TEST(TensorTest, ProductsAndMixedKinds) {
  expect_amplitudes(tensor(PureState::basis(BitString(0, 1)),
                           PureState::basis(BitString(1, 1))),
                    {0, 1, 0, 0});
  expect_amplitudes(tensor(wiesner_state(BitString(0, 1), BitString(1, 1)),
                           PureState::basis(BitString(1, 1))),
                    {0, kInvSqrt2, 0, kInvSqrt2});
  Rng rng(1);
  const DensityOperator rho = random_density(2, 2, rng);
  const DensityOperator sigma = random_density(4, 3, rng);
  EXPECT_NEAR(tensor(rho, sigma).trace(), 1.0, 1e-12);
  const State a = PureState::basis(BitString(0, 1));
  const State b = rho;
  EXPECT_THROW(tensor(a, b), ArgumentError);
}

TEST(PartialTraceTest, EprMarginalIsMaximallyMixed) {
  const DensityOperator rho = DensityOperator::from_pure(epr_state(1));
  const DensityOperator m = partial_trace(rho, {1});
  EXPECT_LT((m.matrix() - 0.5 * identity(2)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PartialTraceTest, RecoversFactorAndChecksIndices) {
  Rng rng(2);
  const DensityOperator rho = random_density(2, 2, rng);
  const DensityOperator sigma = random_density(4, 4, rng);
  const DensityOperator joint = tensor(rho, sigma);
  EXPECT_LT((partial_trace(joint, {0}).matrix() - rho.matrix()).cwiseAbs().maxCoeff(),
            1e-12);
  EXPECT_LT((partial_trace(joint, {1, 2}).matrix() - sigma.matrix())
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
  EXPECT_NEAR(partial_trace(joint, {2, 0}).trace(), 1.0, 1e-9);
  EXPECT_THROW(partial_trace(joint, {3}), ArgumentError);
}

TEST(ChannelTest, IdentityHadamardAndPauli) {
  Rng rng(3);
  const DensityOperator rho = random_density(4, 2, rng);
  EXPECT_LT((apply_channel(KrausChannel::identity(4), rho).matrix() - rho.matrix())
                .cwiseAbs()
                .maxCoeff(),
            1e-12);
  const DensityOperator plus = apply_channel(
      KrausChannel::unitary(hadamard()),
      DensityOperator::from_pure(PureState::basis(BitString(0, 1))));
  EXPECT_LT((plus.matrix() - 0.5 * Matrix::Ones(2, 2)).cwiseAbs().maxCoeff(),
            1e-12);

  const double p = 0.3;
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  const KrausChannel depolarize(
      {std::sqrt(1 - p) * identity(2), std::sqrt(p / 3) * x,
       std::sqrt(p / 3) * y, std::sqrt(p / 3) * z},
      2, 2);
  EXPECT_NEAR(apply_channel(depolarize, random_density(2, 2, rng)).trace(), 1.0,
              1e-12);
  EXPECT_THROW(apply_channel(depolarize, rho), ArgumentError);
}

TEST(ChannelTest, RejectsNonTracePreservingKraus) {
  EXPECT_THROW(KrausChannel({0.5 * identity(2)}, 2, 2), ValidityError);
}

TEST(MeasureTest, SpecExamples) {
  const Povm computational = Povm::from_basis(identity(2));
  const auto plus = measure(
      DensityOperator::from_pure(wiesner_state(BitString(0, 1), BitString(1, 1))),
      computational);
  EXPECT_NEAR(plus.at(BitString(0, 1)), 0.5, 1e-12);
  EXPECT_NEAR(plus.at(BitString(1, 1)), 0.5, 1e-12);
  const auto minus =
      measure(wiesner_state(BitString(1, 1), BitString(1, 1)), computational);
  EXPECT_NEAR(minus.at(BitString(0, 1)), 0.5, 1e-12);

  for (const BitString& theta : all_bitstrings(2)) {
    const Povm wiesner = Povm::from_basis(wiesner_basis(theta));
    for (const BitString& x : all_bitstrings(2)) {
      EXPECT_NEAR(measure(wiesner_state(x, theta), wiesner).at(x), 1.0, 1e-12);
    }
  }
  EXPECT_THROW(measure(PureState::basis(BitString(0, 2)), computational),
               ArgumentError);
}

TEST(MeasureTest, SamplingIsSeededAndSensible) {
  const Povm computational = Povm::from_basis(identity(2));
  const DensityOperator plus = DensityOperator::from_pure(
      wiesner_state(BitString(0, 1), BitString(1, 1)));
  Rng a(9), b(9);
  int ones = 0;
  for (int i = 0; i < 4000; ++i) {
    const BitString x = sample_measurement(plus, computational, a);
    EXPECT_EQ(x, sample_measurement(plus, computational, b));
    ones += x.value() == 1;
  }
  EXPECT_NEAR(ones / 4000.0, 0.5, 5 * std::sqrt(0.25 / 4000));
}

TEST(MeasureTest, MeasureQubitCollapses) {
  Rng rng(11);
  const PureState bell = epr_state(1);
  const auto [bit, post] = measure_qubit(bell, 0, identity(2), rng);
  const BitString both = BitString(bit ? 3 : 0, 2);
  EXPECT_NEAR(std::abs(post.amplitudes()(static_cast<Eigen::Index>(both.value()))),
              1.0, 1e-12);
}

TEST(ValidityTest, StatesRejectBadInput) {
  EXPECT_THROW(PureState(Vector::Ones(2)), ValidityError);
  Matrix not_psd(2, 2);
  not_psd << 1.5, 0, 0, -0.5;
  EXPECT_THROW(DensityOperator{not_psd}, ValidityError);
  Matrix not_herm(2, 2);
  not_herm << 0.5, 0.1, 0.0, 0.5;
  EXPECT_THROW(DensityOperator{not_herm}, ValidityError);
  EXPECT_THROW(Povm({{BitString(0, 1), 0.5 * identity(2)}}), ValidityError);
  EXPECT_THROW(Povm({{BitString(0, 1), identity(2)}, {BitString(0, 1), 0 * identity(2)}}),
               ArgumentError);
}

TEST(ValidityTest, QubitCap) {
  EXPECT_NO_THROW(dimension_for_qubits(kMaxQubits));
  EXPECT_THROW(dimension_for_qubits(kMaxQubits + 1), CapacityError);
}

TEST(RandomConstructionTest, HundredChannelsAndPovmsAreComplete) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng(derive_seed(21, i));
    const std::size_t din = 1 + i % 4;
    const std::size_t dout = 1 + (i / 4) % 4;
    const KrausChannel ch =
        random_channel(din, dout, (din + dout - 1) / dout + 1, rng);
    Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(din),
                              static_cast<Eigen::Index>(din));
    for (const Matrix& k : ch.kraus()) sum += k.adjoint() * k;
    EXPECT_LT((sum - identity(din)).cwiseAbs().maxCoeff(), 1e-9);

    const Povm p = random_povm(dout, all_bitstrings(2), rng);
    Matrix psum = Matrix::Zero(static_cast<Eigen::Index>(dout),
                               static_cast<Eigen::Index>(dout));
    for (const auto& [label, e] : p.elements()) {
      EXPECT_TRUE(is_psd(e));
      psum += e;
    }
    EXPECT_LT((psum - identity(dout)).cwiseAbs().maxCoeff(), 1e-9);

    const Matrix u = random_unitary(din, rng);
    EXPECT_LT((u.adjoint() * u - identity(din)).cwiseAbs().maxCoeff(), 1e-9);
  }
}

}  // namespace
}  // namespace uncloneable
