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

#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "uncloneable/bitstring.hpp"
#include "uncloneable/random.hpp"

namespace uncloneable {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Absolute tolerance for every validity check in the library.
inline constexpr double kTolerance = 1e-9;
/// Dense registers are capped at this many qubits (dimension 2^14).
inline constexpr int kMaxQubits = 14;
inline constexpr std::size_t kMaxDimension = std::size_t{1} << kMaxQubits;

/// Number of qubits of a power-of-two dimension; ArgumentError otherwise.
int qubits_for_dimension(std::size_t dim);
/// 2^qubits, with CapacityError above kMaxQubits.
std::size_t dimension_for_qubits(int qubits);

bool is_hermitian(const Matrix& m, double tol = kTolerance);
/// Hermitian and smallest eigenvalue >= -tol.
bool is_psd(const Matrix& m, double tol = kTolerance);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// Unit vector over a register. Qubit 0 is the most significant bit of
/// the amplitude index.
class PureState {
 public:
  /// Throws ValidityError unless the norm is 1 within kTolerance.
  explicit PureState(Vector amplitudes);
  /// Computational basis state |x>.
  static PureState basis(const BitString& x);

  const Vector& amplitudes() const { return amplitudes_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  int qubit_count() const { return qubits_for_dimension(dim()); }

  Matrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  Vector amplitudes_;
};

/// Positive semidefinite unit-trace operator. Dimension need not be a power
/// of two (side registers of monogamy strategies are arbitrary).
class DensityOperator {
 public:
  /// Throws ValidityError unless Hermitian, PSD and unit trace.
  explicit DensityOperator(Matrix matrix);
  static DensityOperator from_pure(const PureState& psi);
  static DensityOperator maximally_mixed(std::size_t dim);

  const Matrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  int qubit_count() const { return qubits_for_dimension(dim()); }
  double trace() const { return matrix_.trace().real(); }

 private:
  Matrix matrix_;
};

/// CPTP map as a Kraus family, each operator dim_out x dim_in.
class KrausChannel {
 public:
  /// Throws ArgumentError on shape mismatch and ValidityError unless
  /// sum K^dag K = I within kTolerance.
  KrausChannel(std::vector<Matrix> kraus, std::size_t dim_in,
               std::size_t dim_out);
  static KrausChannel identity(std::size_t dim);
  static KrausChannel unitary(const Matrix& u);

  const std::vector<Matrix>& kraus() const { return kraus_; }
  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }

 private:
  std::vector<Matrix> kraus_;
  std::size_t dim_in_;
  std::size_t dim_out_;
};

/// Measurement with bit-string outcome labels.
class Povm {
 public:
  using Element = std::pair<BitString, Matrix>;

  /// Throws ArgumentError on duplicate labels or shape mismatch and
  /// ValidityError unless each element is PSD and they sum to I.
  explicit Povm(std::vector<Element> elements);
  /// Projective measurement onto the columns of `basis`, column j labelled
  /// with the bits of j.
  static Povm from_basis(const Matrix& basis);
  /// Single outcome with element I (a decoder that ignores its register).
  static Povm constant(const BitString& outcome, std::size_t dim);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t dim() const { return dim_; }
  /// Element for `label`, or the zero matrix if absent.
  Matrix element(const BitString& label) const;

 private:
  std::vector<Element> elements_;
  std::size_t dim_;
};

using State = std::variant<PureState, DensityOperator>;

Matrix hadamard();
/// Columns are H^{theta_i} |0>, H^{theta_i} |1> tensored over positions.
Matrix wiesner_basis(const BitString& theta);
/// Basis {cos(pi/8)|0> + sin(pi/8)|1>, sin(pi/8)|0> - cos(pi/8)|1>}.
Matrix breidbart_basis();

PureState wiesner_state(const BitString& x, const BitString& theta);

/// Applies H to every qubit i with theta_i = 1 (H^theta, a product
/// operator) in O(n 2^n).
Vector apply_hadamards(const Vector& amplitudes, const BitString& theta);

/// Outcome distribution of measuring `psi` in the Wiesner basis theta,
/// i.e. computational measurement of H^theta psi. Outcome x has probability
/// |<x^theta|psi>|^2.
std::vector<double> wiesner_distribution(const PureState& psi,
                                         const BitString& theta);
PureState epr_state(int n);

PureState tensor(const PureState& a, const PureState& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);
/// Throws ArgumentError when a and b are of different kinds.
State tensor(const State& a, const State& b);

/// Reduced state on the kept qubits (0-based, order preserved).
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& keep);
/// General partial trace over a register with subsystem dimensions `dims`;
/// does not require unit trace.
Matrix partial_trace(const Matrix& m, const std::vector<std::size_t>& dims,
                     const std::vector<int>& keep);

DensityOperator apply_channel(const KrausChannel& ch,
                              const DensityOperator& rho);

/// Outcome probabilities Tr[E_y rho]; zero-probability outcomes included.
std::map<BitString, double> measure(const DensityOperator& rho,
                                    const Povm& povm);
std::map<BitString, double> measure(const PureState& psi, const Povm& povm);
BitString sample_measurement(const DensityOperator& rho, const Povm& povm,
                             Rng& rng);

/// Measures one qubit of `psi` in the orthonormal basis given by the
/// columns of the 2x2 unitary `basis`; returns the outcome and post-state.
std::pair<int, PureState> measure_qubit(const PureState& psi, int qubit,
                                        const Matrix& basis, Rng& rng);

/// Draws an index from a discrete distribution; weights need not be
/// normalised.
std::size_t sample_index(const std::vector<double>& weights, Rng& rng);

/// Haar-ish random constructions for property tests and random attacks.
Matrix random_unitary(std::size_t dim, Rng& rng);
Matrix random_isometry(std::size_t dim_in, std::size_t dim_out, Rng& rng);
KrausChannel random_channel(std::size_t dim_in, std::size_t dim_out,
                            std::size_t kraus_count, Rng& rng);
Povm random_povm(std::size_t dim, const std::vector<BitString>& labels,
                 Rng& rng);
DensityOperator random_density(std::size_t dim, std::size_t rank, Rng& rng);
PureState random_pure_state(std::size_t dim, Rng& rng);

}  // namespace uncloneable
