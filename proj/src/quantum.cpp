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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "uncloneable/errors.hpp"

namespace uncloneable {

namespace {

void check_dimension(std::size_t dim) {
  if (dim == 0) throw ArgumentError("register dimension must be positive");
  if (dim > kMaxDimension) {
    throw CapacityError("register dimension " + std::to_string(dim) +
                        " exceeds the " + std::to_string(kMaxQubits) +
                        "-qubit dense simulation cap");
  }
}

bool is_diagonal(const Matrix& m, double tol) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i != j && std::abs(m(i, j)) > tol) return false;
    }
  }
  return true;
}

double gaussian(Rng& rng) {
  // Box-Muller on our own uniform draws keeps streams identical across
  // standard library implementations.
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Matrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      g(i, j) = Complex(gaussian(rng), gaussian(rng));
    }
  }
  return g;
}

Matrix inverse_sqrt_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    ev(i) = ev(i) > 1e-14 ? 1.0 / std::sqrt(ev(i)) : 0.0;
  }
  return es.eigenvectors() * ev.cast<Complex>().asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

int qubits_for_dimension(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw ArgumentError("dimension " + std::to_string(dim) +
                        " is not a power of two");
  }
  return std::countr_zero(dim);
}

std::size_t dimension_for_qubits(int qubits) {
  if (qubits < 0) throw ArgumentError("negative qubit count");
  if (qubits > kMaxQubits) {
    throw CapacityError(std::to_string(qubits) + " qubits exceed the " +
                        std::to_string(kMaxQubits) + "-qubit cap");
  }
  return std::size_t{1} << qubits;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_psd(const Matrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  if (m.rows() == 0) return true;
  if (is_diagonal(m, tol)) {
    return m.diagonal().real().minCoeff() >= -tol;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

// --- PureState -------------------------------------------------------------

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  check_dimension(dim());
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kTolerance) {
    throw ValidityError("state vector norm is " + std::to_string(norm));
  }
}

PureState PureState::basis(const BitString& x) {
  Vector v = Vector::Zero(
      static_cast<Eigen::Index>(dimension_for_qubits(x.length())));
  v(static_cast<Eigen::Index>(x.value())) = 1.0;
  return PureState(std::move(v));
}

// --- DensityOperator -------------------------------------------------------

DensityOperator::DensityOperator(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw ArgumentError("density operator must be square");
  }
  check_dimension(dim());
  if (std::abs(trace() - 1.0) > kTolerance) {
    throw ValidityError("density operator trace is " +
                        std::to_string(trace()));
  }
  if (!is_psd(matrix_)) {
    throw ValidityError("density operator is not Hermitian PSD");
  }
}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
  return DensityOperator(psi.projector());
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  check_dimension(dim);
  const auto d = static_cast<Eigen::Index>(dim);
  return DensityOperator(Matrix::Identity(d, d) / static_cast<double>(dim));
}

// --- KrausChannel ----------------------------------------------------------

KrausChannel::KrausChannel(std::vector<Matrix> kraus, std::size_t dim_in,
                           std::size_t dim_out)
    : kraus_(std::move(kraus)), dim_in_(dim_in), dim_out_(dim_out) {
  check_dimension(dim_in_);
  check_dimension(dim_out_);
  if (kraus_.empty()) throw ArgumentError("Kraus family must be nonempty");
  const auto din = static_cast<Eigen::Index>(dim_in_);
  Matrix sum = Matrix::Zero(din, din);
  for (const Matrix& k : kraus_) {
    if (static_cast<std::size_t>(k.rows()) != dim_out_ ||
        static_cast<std::size_t>(k.cols()) != dim_in_) {
      throw ArgumentError("Kraus operator has shape " +
                          std::to_string(k.rows()) + "x" +
                          std::to_string(k.cols()) + ", expected " +
                          std::to_string(dim_out_) + "x" +
                          std::to_string(dim_in_));
    }
    sum.noalias() += k.adjoint() * k;
  }
  const double err = (sum - Matrix::Identity(din, din)).cwiseAbs().maxCoeff();
  if (err > kTolerance) {
    throw ValidityError("Kraus family is not trace preserving (deviation " +
                        std::to_string(err) + ")");
  }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return KrausChannel({Matrix::Identity(d, d)}, dim, dim);
}

KrausChannel KrausChannel::unitary(const Matrix& u) {
  return KrausChannel({u}, static_cast<std::size_t>(u.cols()),
                      static_cast<std::size_t>(u.rows()));
}

// --- Povm ------------------------------------------------------------------

Povm::Povm(std::vector<Element> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw ArgumentError("POVM must have an element");
  dim_ = static_cast<std::size_t>(elements_.front().second.rows());
  check_dimension(dim_);
  const auto d = static_cast<Eigen::Index>(dim_);
  std::set<BitString> labels;
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& [label, e] : elements_) {
    if (!labels.insert(label).second) {
      throw ArgumentError("duplicate POVM outcome " + label.to_string());
    }
    if (e.rows() != d || e.cols() != d) {
      throw ArgumentError("POVM elements must share one square shape");
    }
    if (!is_psd(e)) {
      throw ValidityError("POVM element " + label.to_string() +
                          " is not PSD");
    }
    sum += e;
  }
  const double err = (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (err > kTolerance) {
    throw ValidityError("POVM elements do not sum to identity (deviation " +
                        std::to_string(err) + ")");
  }
}

Povm Povm::from_basis(const Matrix& basis) {
  const auto dim = static_cast<std::size_t>(basis.rows());
  const int q = qubits_for_dimension(dim);
  std::vector<Element> elements;
  elements.reserve(dim);
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    elements.emplace_back(BitString(static_cast<std::uint64_t>(j), q),
                          basis.col(j) * basis.col(j).adjoint());
  }
  return Povm(std::move(elements));
}

Povm Povm::constant(const BitString& outcome, std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return Povm({{outcome, Matrix::Identity(d, d)}});
}

Matrix Povm::element(const BitString& label) const {
  for (const auto& [l, e] : elements_) {
    if (l == label) return e;
  }
  const auto d = static_cast<Eigen::Index>(dim_);
  return Matrix::Zero(d, d);
}

// --- Named states and bases ------------------------------------------------

Matrix hadamard() {
  Matrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

Matrix wiesner_basis(const BitString& theta) {
  Matrix out = Matrix::Identity(1, 1);
  const Matrix h = hadamard();
  const Matrix id = Matrix::Identity(2, 2);
  for (int i = 0; i < theta.length(); ++i) {
    out = kron(out, theta[i] ? h : id);
  }
  return out;
}

Matrix breidbart_basis() {
  const double c = std::cos(std::numbers::pi / 8);
  const double s = std::sin(std::numbers::pi / 8);
  Matrix b(2, 2);
  b << c, s, s, -c;
  return b;
}

PureState wiesner_state(const BitString& x, const BitString& theta) {
  if (x.length() != theta.length()) {
    throw ArgumentError("wiesner_state: |x| = " + std::to_string(x.length()) +
                        " but |theta| = " + std::to_string(theta.length()));
  }
  if (x.length() < 1) throw ArgumentError("wiesner_state: empty string");
  dimension_for_qubits(x.length());
  const double s = 1.0 / std::sqrt(2.0);
  Vector v = Vector::Ones(1);
  for (int i = 0; i < x.length(); ++i) {
    Vector q(2);
    if (theta[i] == 0) {
      q << (x[i] ? 0.0 : 1.0), (x[i] ? 1.0 : 0.0);
    } else {
      q << s, (x[i] ? -s : s);
    }
    v = kron(v, q);
  }
  return PureState(std::move(v));
}

Vector apply_hadamards(const Vector& amplitudes, const BitString& theta) {
  const auto dim = static_cast<std::size_t>(amplitudes.size());
  const int n = qubits_for_dimension(dim);
  if (theta.length() != n) {
    throw ArgumentError("apply_hadamards: basis string has " +
                        std::to_string(theta.length()) + " bits for " +
                        std::to_string(n) + " qubits");
  }
  Vector v = amplitudes;
  const double s = 1.0 / std::sqrt(2.0);
  for (int q = 0; q < n; ++q) {
    if (!theta[q]) continue;
    const std::size_t stride = std::size_t{1} << (n - 1 - q);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & stride) continue;
      const auto i0 = static_cast<Eigen::Index>(i);
      const auto i1 = static_cast<Eigen::Index>(i | stride);
      const Complex a0 = v(i0), a1 = v(i1);
      v(i0) = s * (a0 + a1);
      v(i1) = s * (a0 - a1);
    }
  }
  return v;
}

std::vector<double> wiesner_distribution(const PureState& psi,
                                         const BitString& theta) {
  const Vector v = apply_hadamards(psi.amplitudes(), theta);
  std::vector<double> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[static_cast<std::size_t>(i)] = std::norm(v(i));
  }
  return out;
}

PureState epr_state(int n) {
  if (n < 1) throw ArgumentError("epr_state: n must be positive");
  const std::size_t half = dimension_for_qubits(n);
  const std::size_t dim = dimension_for_qubits(2 * n);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  const double a = 1.0 / std::sqrt(static_cast<double>(half));
  for (std::size_t x = 0; x < half; ++x) {
    v(static_cast<Eigen::Index>(x * half + x)) = a;
  }
  return PureState(std::move(v));
}

PureState tensor(const PureState& a, const PureState& b) {
  check_dimension(a.dim() * b.dim());
  return PureState(kron(a.amplitudes(), b.amplitudes()));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  check_dimension(a.dim() * b.dim());
  return DensityOperator(kron(a.matrix(), b.matrix()));
}

State tensor(const State& a, const State& b) {
  if (a.index() != b.index()) {
    throw ArgumentError("tensor: cannot mix pure states and density operators");
  }
  if (const auto* pa = std::get_if<PureState>(&a)) {
    return tensor(*pa, std::get<PureState>(b));
  }
  return tensor(std::get<DensityOperator>(a), std::get<DensityOperator>(b));
}

// --- Partial trace ---------------------------------------------------------

Matrix partial_trace(const Matrix& m, const std::vector<std::size_t>& dims,
                     const std::vector<int>& keep) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (static_cast<std::size_t>(m.rows()) != total ||
      static_cast<std::size_t>(m.cols()) != total) {
    throw ArgumentError("partial_trace: matrix does not match subsystem dims");
  }
  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) {
    if (k < 0 || static_cast<std::size_t>(k) >= dims.size()) {
      throw ArgumentError("partial_trace: subsystem index " +
                          std::to_string(k) + " out of range");
    }
    if (kept[static_cast<std::size_t>(k)]) {
      throw ArgumentError("partial_trace: duplicate subsystem index");
    }
    kept[static_cast<std::size_t>(k)] = true;
  }
  std::vector<int> order(keep.begin(), keep.end());
  std::sort(order.begin(), order.end());

  // Split each full index into (kept index, traced index).
  std::size_t keep_dim = 1;
  std::size_t trace_dim = 1;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    (kept[s] ? keep_dim : trace_dim) *= dims[s];
  }
  std::vector<std::size_t> full(keep_dim * trace_dim);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    std::size_t ki = 0, ti = 0, kstride = 1, tstride = 1;
    for (std::size_t s = dims.size(); s-- > 0;) {
      const std::size_t digit = rem % dims[s];
      rem /= dims[s];
      if (kept[s]) {
        ki += digit * kstride;
        kstride *= dims[s];
      } else {
        ti += digit * tstride;
        tstride *= dims[s];
      }
    }
    full[ki * trace_dim + ti] = idx;
  }
  const auto kd = static_cast<Eigen::Index>(keep_dim);
  Matrix out = Matrix::Zero(kd, kd);
  for (std::size_t i = 0; i < keep_dim; ++i) {
    for (std::size_t j = 0; j < keep_dim; ++j) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < trace_dim; ++t) {
        acc += m(static_cast<Eigen::Index>(full[i * trace_dim + t]),
                 static_cast<Eigen::Index>(full[j * trace_dim + t]));
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  }
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<int>& keep) {
  const int q = rho.qubit_count();
  std::vector<std::size_t> dims(static_cast<std::size_t>(q), 2);
  for (int k : keep) {
    if (k < 0 || k >= q) {
      throw ArgumentError("partial_trace: qubit index " + std::to_string(k) +
                          " out of range for " + std::to_string(q) +
                          " qubits");
    }
  }
  Matrix reduced = partial_trace(rho.matrix(), dims, keep);
  // Restore caller order when keep is not sorted.
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != keep) {
    const std::size_t k = keep.size();
    const std::size_t d = std::size_t{1} << k;
    Matrix perm = Matrix::Zero(static_cast<Eigen::Index>(d),
                               static_cast<Eigen::Index>(d));
    for (std::size_t sidx = 0; sidx < d; ++sidx) {
      // Bit j of sorted order (MSB first) belongs to qubit sorted[j].
      std::size_t cidx = 0;
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t bit = (sidx >> (k - 1 - j)) & 1;
        const auto pos = static_cast<std::size_t>(
            std::find(keep.begin(), keep.end(), sorted[j]) - keep.begin());
        cidx |= bit << (k - 1 - pos);
      }
      perm(static_cast<Eigen::Index>(cidx), static_cast<Eigen::Index>(sidx)) =
          1.0;
    }
    reduced = perm * reduced * perm.adjoint();
  }
  return DensityOperator(std::move(reduced));
}

// --- Channels and measurement ----------------------------------------------

DensityOperator apply_channel(const KrausChannel& ch,
                              const DensityOperator& rho) {
  if (rho.dim() != ch.dim_in()) {
    throw ArgumentError("apply_channel: state dimension " +
                        std::to_string(rho.dim()) + " but channel input " +
                        std::to_string(ch.dim_in()));
  }
  const auto d = static_cast<Eigen::Index>(ch.dim_out());
  Matrix out = Matrix::Zero(d, d);
  for (const Matrix& k : ch.kraus()) {
    out.noalias() += k * rho.matrix() * k.adjoint();
  }
  return DensityOperator(std::move(out));
}

std::map<BitString, double> measure(const DensityOperator& rho,
                                    const Povm& povm) {
  if (rho.dim() != povm.dim()) {
    throw ArgumentError("measure: state dimension " +
                        std::to_string(rho.dim()) + " but POVM dimension " +
                        std::to_string(povm.dim()));
  }
  std::map<BitString, double> out;
  for (const auto& [label, e] : povm.elements()) {
    out[label] = std::max(0.0, (e * rho.matrix()).trace().real());
  }
  return out;
}

std::map<BitString, double> measure(const PureState& psi, const Povm& povm) {
  if (psi.dim() != povm.dim()) {
    throw ArgumentError("measure: state dimension " +
                        std::to_string(psi.dim()) + " but POVM dimension " +
                        std::to_string(povm.dim()));
  }
  std::map<BitString, double> out;
  for (const auto& [label, e] : povm.elements()) {
    out[label] = std::max(
        0.0, psi.amplitudes().dot(e * psi.amplitudes()).real());
  }
  return out;
}

std::size_t sample_index(const std::vector<double>& weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += std::max(0.0, w);
  if (!(total > 0.0)) throw ArgumentError("sample_index: no positive weight");
  const double u = uniform01(rng) * total;
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last = i;
    if (u < acc) return i;
  }
  return last;
}

BitString sample_measurement(const DensityOperator& rho, const Povm& povm,
                             Rng& rng) {
  const auto probs = measure(rho, povm);
  std::vector<double> w;
  std::vector<BitString> labels;
  for (const auto& [label, p] : probs) {
    labels.push_back(label);
    w.push_back(p);
  }
  return labels[sample_index(w, rng)];
}

std::pair<int, PureState> measure_qubit(const PureState& psi, int qubit,
                                        const Matrix& basis, Rng& rng) {
  const int n = psi.qubit_count();
  if (qubit < 0 || qubit >= n) {
    throw ArgumentError("measure_qubit: qubit index out of range");
  }
  if (basis.rows() != 2 || basis.cols() != 2) {
    throw ArgumentError("measure_qubit: basis must be 2x2");
  }
  const std::size_t stride = std::size_t{1} << (n - 1 - qubit);
  const std::size_t dim = psi.dim();
  const Vector& a = psi.amplitudes();
  // Amplitudes of the remaining qubits after projecting onto basis vector k.
  Vector proj[2] = {Vector(static_cast<Eigen::Index>(dim / 2)),
                    Vector(static_cast<Eigen::Index>(dim / 2))};
  double p[2] = {0.0, 0.0};
  for (int k = 0; k < 2; ++k) {
    const Complex b0 = std::conj(basis(0, k));
    const Complex b1 = std::conj(basis(1, k));
    std::size_t r = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & stride) continue;
      const Complex v = b0 * a(static_cast<Eigen::Index>(i)) +
                        b1 * a(static_cast<Eigen::Index>(i | stride));
      proj[k](static_cast<Eigen::Index>(r++)) = v;
      p[k] += std::norm(v);
    }
  }
  const int outcome = uniform01(rng) * (p[0] + p[1]) < p[0] ? 0 : 1;
  const double norm = std::sqrt(p[outcome]);
  Vector post(static_cast<Eigen::Index>(dim));
  std::size_t r = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & stride) continue;
    const Complex v = proj[outcome](static_cast<Eigen::Index>(r++)) / norm;
    post(static_cast<Eigen::Index>(i)) = basis(0, outcome) * v;
    post(static_cast<Eigen::Index>(i | stride)) = basis(1, outcome) * v;
  }
  post.normalize();
  return {outcome, PureState(std::move(post))};
}

// --- Random constructions --------------------------------------------------

Matrix random_unitary(std::size_t dim, Rng& rng) {
  check_dimension(dim);
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Phase fix so the distribution is Haar.
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

Matrix random_isometry(std::size_t dim_in, std::size_t dim_out, Rng& rng) {
  if (dim_out < dim_in) {
    throw ArgumentError("random_isometry: output smaller than input");
  }
  return random_unitary(dim_out, rng).leftCols(
      static_cast<Eigen::Index>(dim_in));
}

KrausChannel random_channel(std::size_t dim_in, std::size_t dim_out,
                            std::size_t kraus_count, Rng& rng) {
  if (kraus_count == 0) throw ArgumentError("random_channel: no operators");
  // Stinespring: stack Kraus operators as blocks of an isometry.
  const std::size_t rows = dim_out * kraus_count;
  Matrix v;
  if (rows >= dim_in) {
    v = random_isometry(dim_in, rows, rng);
  } else {
    throw ArgumentError("random_channel: need dim_out * count >= dim_in");
  }
  std::vector<Matrix> kraus;
  kraus.reserve(kraus_count);
  for (std::size_t k = 0; k < kraus_count; ++k) {
    kraus.push_back(v.middleRows(static_cast<Eigen::Index>(k * dim_out),
                                 static_cast<Eigen::Index>(dim_out)));
  }
  return KrausChannel(std::move(kraus), dim_in, dim_out);
}

Povm random_povm(std::size_t dim, const std::vector<BitString>& labels,
                 Rng& rng) {
  if (labels.empty()) throw ArgumentError("random_povm: no labels");
  std::vector<Matrix> g;
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix sum = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Matrix a = ginibre(dim, dim, rng);
    g.push_back(a * a.adjoint());
    sum += g.back();
  }
  const Matrix s = inverse_sqrt_psd(sum);
  std::vector<Povm::Element> elements;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Matrix e = s * g[i] * s;
    e = 0.5 * (e + e.adjoint());
    elements.emplace_back(labels[i], std::move(e));
  }
  return Povm(std::move(elements));
}

DensityOperator random_density(std::size_t dim, std::size_t rank, Rng& rng) {
  const Matrix a = ginibre(dim, std::max<std::size_t>(rank, 1), rng);
  Matrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(0.5 * (rho + rho.adjoint()));
}

PureState random_pure_state(std::size_t dim, Rng& rng) {
  Vector v = ginibre(dim, 1, rng).col(0);
  v.normalize();
  return PureState(std::move(v));
}

}  // namespace uncloneable
