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

#include "uncloneable/moe.hpp"

#include <cmath>
#include <string>

#include "uncloneable/errors.hpp"
#include "uncloneable/random.hpp"

namespace uncloneable {

namespace {

std::size_t theta_count(int lambda) { return dimension_for_qubits(lambda); }

void check_povms(const std::vector<Povm>& povms, int lambda, std::size_t dim,
                 const char* side) {
  if (povms.size() != theta_count(lambda)) {
    throw ArgumentError(std::string(side) + " needs one POVM per theta (" +
                        std::to_string(theta_count(lambda)) + "), got " +
                        std::to_string(povms.size()));
  }
  for (const Povm& p : povms) {
    if (p.dim() != dim) {
      throw ArgumentError(std::string(side) + " POVM acts on dimension " +
                          std::to_string(p.dim()) + ", expected " +
                          std::to_string(dim));
    }
    for (const auto& [label, e] : p.elements()) {
      if (label.length() != lambda) {
        throw ArgumentError(std::string(side) +
                            " POVM label has the wrong length");
      }
    }
  }
}

// <x^theta|_A rho |x^theta>_A as an operator on B (x) C.
Matrix conditional_bc(const Matrix& rho, const Vector& ax, std::size_t dbc) {
  const auto d = static_cast<Eigen::Index>(dbc);
  const Eigen::Index da = ax.size();
  Matrix out = Matrix::Zero(d, d);
  for (Eigen::Index a = 0; a < da; ++a) {
    if (ax(a) == Complex(0.0)) continue;
    for (Eigen::Index b = 0; b < da; ++b) {
      if (ax(b) == Complex(0.0)) continue;
      out += std::conj(ax(a)) * ax(b) * rho.block(a * d, b * d, d, d);
    }
  }
  return out;
}

std::vector<BitString> labels_for(int lambda) {
  return all_bitstrings(lambda);
}

Matrix herm(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

// Payoff operator sum over theta, x of P_x (x) B_x (x) C_x, divided by the
// number of theta values.
Matrix payoff(const MoeStrategy& s) {
  const std::size_t dim = theta_count(s.lambda) * s.dim_b * s.dim_c;
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix w = Matrix::Zero(d, d);
  for (std::size_t t = 0; t < theta_count(s.lambda); ++t) {
    const Matrix basis = wiesner_basis(BitString(t, s.lambda));
    for (const BitString& x : labels_for(s.lambda)) {
      const Matrix bx = s.b_povms[t].element(x);
      const Matrix cx = s.c_povms[t].element(x);
      if (bx.isZero(0.0) || cx.isZero(0.0)) continue;
      const Vector v = basis.col(static_cast<Eigen::Index>(x.value()));
      w += kron(Matrix(v * v.adjoint()), kron(bx, cx));
    }
  }
  return herm(w) / static_cast<double>(theta_count(s.lambda));
}

// Operators Q_x with sum_x Tr[E_x Q_x] the contribution of one theta when
// side `b_side` plays {E_x}.
std::vector<Matrix> side_operators(const MoeStrategy& s, std::size_t t,
                                   bool b_side) {
  const Matrix basis = wiesner_basis(BitString(t, s.lambda));
  const std::size_t dbc = s.dim_b * s.dim_c;
  std::vector<Matrix> out;
  for (const BitString& x : labels_for(s.lambda)) {
    const Vector v = basis.col(static_cast<Eigen::Index>(x.value()));
    const Matrix block = conditional_bc(s.state.matrix(), v, dbc);
    const Matrix& other =
        b_side ? s.c_povms[t].element(x) : s.b_povms[t].element(x);
    Matrix q;
    if (b_side) {
      q = partial_trace(Matrix(block * kron(Matrix::Identity(
                                                static_cast<Eigen::Index>(s.dim_b),
                                                static_cast<Eigen::Index>(s.dim_b)),
                                            other)),
                        {s.dim_b, s.dim_c}, {0});
    } else {
      q = partial_trace(Matrix(block * kron(other, Matrix::Identity(
                                                       static_cast<Eigen::Index>(s.dim_c),
                                                       static_cast<Eigen::Index>(s.dim_c)))),
                        {s.dim_b, s.dim_c}, {1});
    }
    out.push_back(herm(q));
  }
  return out;
}

double povm_score(const std::vector<Matrix>& elements,
                  const std::vector<Matrix>& q) {
  double total = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    total += (elements[i] * q[i]).trace().real();
  }
  return total;
}

// Assigns every vector of `basis` to the label whose Q_x it overlaps most.
std::vector<Matrix> greedy_assignment(const Matrix& basis,
                                      const std::vector<Matrix>& q) {
  const auto d = basis.rows();
  std::vector<Matrix> out(q.size(), Matrix::Zero(d, d));
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    const Vector v = basis.col(j);
    std::size_t best = 0;
    double best_val = -1.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double val = v.dot(q[i] * v).real();
      if (val > best_val + 1e-15) {
        best_val = val;
        best = i;
      }
    }
    out[best] += v * v.adjoint();
  }
  return out;
}

std::vector<Matrix> iterative_update(const std::vector<Matrix>& current,
                                     const std::vector<Matrix>& q) {
  const auto d = current.front().rows();
  std::vector<Matrix> t;
  Matrix g = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < q.size(); ++i) {
    t.push_back(herm(q[i] * current[i] * q[i]));
    g += t.back();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm(g));
  Matrix inv_sqrt = Matrix::Zero(d, d);
  Matrix kernel = Matrix::Zero(d, d);
  const double floor = 1e-9 * std::max(1.0, es.eigenvalues().maxCoeff());
  for (Eigen::Index j = 0; j < d; ++j) {
    const Vector v = es.eigenvectors().col(j);
    const double w = es.eigenvalues()(j);
    if (w > floor) {
      inv_sqrt += (1.0 / std::sqrt(w)) * v * v.adjoint();
    } else {
      kernel += v * v.adjoint();
    }
  }
  std::vector<Matrix> out;
  for (const Matrix& m : t) out.push_back(herm(inv_sqrt * m * inv_sqrt));
  out.front() += kernel;
  return out;
}

Povm to_povm(const std::vector<Matrix>& elements, int lambda) {
  std::vector<Povm::Element> out;
  const auto labels = labels_for(lambda);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out.emplace_back(labels[i], herm(elements[i]));
  }
  return Povm(std::move(out));
}

// Best POVM among the current one, projective greedy assignments over a few
// natural bases and one multiplicative update; never worse than current.
Povm improve_povm(const Povm& current, const std::vector<Matrix>& q,
                  int lambda) {
  std::vector<Matrix> cur;
  for (const BitString& x : labels_for(lambda)) cur.push_back(current.element(x));
  std::vector<Matrix> best = cur;
  double best_score = povm_score(cur, q);
  const auto consider = [&](std::vector<Matrix> cand) {
    Matrix sum = Matrix::Zero(cand.front().rows(), cand.front().cols());
    for (const Matrix& e : cand) {
      if (!is_psd(e, 1e-11)) return;
      sum += e;
    }
    sum -= Matrix::Identity(sum.rows(), sum.cols());
    if (sum.cwiseAbs().maxCoeff() > 1e-11) return;
    const double score = povm_score(cand, q);
    if (score > best_score + 1e-13) {
      best_score = score;
      best = std::move(cand);
    }
  };
  std::vector<Matrix> generators = q;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      generators.push_back(q[i] - q[j]);
    }
  }
  for (const Matrix& g : generators) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm(g));
    consider(greedy_assignment(es.eigenvectors(), q));
  }
  consider(iterative_update(cur, q));
  return to_povm(best, lambda);
}

DensityOperator top_eigenstate(const Matrix& w) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(w);
  const Vector v = es.eigenvectors().col(es.eigenvalues().size() - 1);
  return DensityOperator(v * v.adjoint());
}

}  // namespace

void validate(const MoeStrategy& s) {
  if (s.lambda < 1) throw ArgumentError("monogamy game needs lambda >= 1");
  const std::size_t dim = theta_count(s.lambda) * s.dim_b * s.dim_c;
  if (s.state.dim() != dim) {
    throw ArgumentError("strategy state has dimension " +
                        std::to_string(s.state.dim()) + ", expected " +
                        std::to_string(dim));
  }
  check_povms(s.b_povms, s.lambda, s.dim_b, "B");
  check_povms(s.c_povms, s.lambda, s.dim_c, "C");
}

void validate(const MoeChannelStrategy& s) {
  if (s.lambda < 1) throw ArgumentError("monogamy game needs lambda >= 1");
  if (s.split.dim_in() != theta_count(s.lambda) ||
      s.split.dim_out() != s.dim_b * s.dim_c) {
    throw ArgumentError("strategy channel does not map A to B (x) C");
  }
  check_povms(s.b_povms, s.lambda, s.dim_b, "B");
  check_povms(s.c_povms, s.lambda, s.dim_c, "C");
}

double moe_value(const MoeStrategy& s) {
  validate(s);
  const std::size_t dbc = s.dim_b * s.dim_c;
  double total = 0.0;
  for (std::size_t t = 0; t < theta_count(s.lambda); ++t) {
    const Matrix basis = wiesner_basis(BitString(t, s.lambda));
    for (const BitString& x : labels_for(s.lambda)) {
      const Matrix block = conditional_bc(
          s.state.matrix(), basis.col(static_cast<Eigen::Index>(x.value())),
          dbc);
      const Matrix op = kron(s.b_povms[t].element(x), s.c_povms[t].element(x));
      total += (op * block).trace().real();
    }
  }
  return total / static_cast<double>(theta_count(s.lambda));
}

double moe_value(const MoeChannelStrategy& s) {
  validate(s);
  const std::size_t n = theta_count(s.lambda);
  double total = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const Matrix basis = wiesner_basis(BitString(t, s.lambda));
    for (const BitString& x : labels_for(s.lambda)) {
      const Vector v = basis.col(static_cast<Eigen::Index>(x.value()));
      const Matrix b = s.b_povms[t].element(x);
      const Matrix ct = s.c_povms[t].element(x).transpose();
      for (const Matrix& k : s.split.kraus()) {
        const Vector w = k * v;
        Matrix vm(static_cast<Eigen::Index>(s.dim_b),
                  static_cast<Eigen::Index>(s.dim_c));
        for (Eigen::Index r = 0; r < vm.rows(); ++r) {
          for (Eigen::Index c = 0; c < vm.cols(); ++c) {
            vm(r, c) = w(r * vm.cols() + c);
          }
        }
        total += (vm.adjoint() * b * vm * ct).trace().real();
      }
    }
  }
  return total / static_cast<double>(n * n);
}

MoeStrategy to_state_form(const MoeChannelStrategy& s) {
  validate(s);
  const std::size_t da = theta_count(s.lambda);
  const std::size_t dbc = s.dim_b * s.dim_c;
  const auto d = static_cast<Eigen::Index>(da * dbc);
  Matrix rho = Matrix::Zero(d, d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(da));
  for (const Matrix& k : s.split.kraus()) {
    Vector psi = Vector::Zero(d);
    for (std::size_t a = 0; a < da; ++a) {
      psi.segment(static_cast<Eigen::Index>(a * dbc),
                  static_cast<Eigen::Index>(dbc)) =
          amp * k.col(static_cast<Eigen::Index>(a));
    }
    rho += psi * psi.adjoint();
  }
  return MoeStrategy{s.lambda, s.dim_b, s.dim_c, DensityOperator(herm(rho)),
                     s.b_povms, s.c_povms};
}

MoeChannelStrategy breidbart_moe_strategy(int lambda) {
  if (lambda < 1) throw ArgumentError("monogamy game needs lambda >= 1");
  const std::size_t d = theta_count(lambda);
  Matrix basis = Matrix::Identity(1, 1);
  for (int i = 0; i < lambda; ++i) basis = kron(basis, breidbart_basis());
  std::vector<Matrix> kraus;
  for (std::size_t c = 0; c < d; ++c) {
    const Vector out = PureState::basis(BitString(c * d + c, 2 * lambda))
                           .amplitudes();
    kraus.push_back(out * basis.col(static_cast<Eigen::Index>(c)).adjoint());
  }
  const Povm readout = Povm::from_basis(
      Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
  return MoeChannelStrategy{lambda, d, d, KrausChannel(kraus, d, d * d),
                            std::vector<Povm>(d, readout),
                            std::vector<Povm>(d, readout)};
}

MoeStrategy trivial_moe_strategy(int lambda, std::size_t dim_b,
                                 std::size_t dim_c) {
  if (lambda < 1) throw ArgumentError("monogamy game needs lambda >= 1");
  const std::size_t n = theta_count(lambda);
  const BitString zero = BitString::zeros(lambda);
  return MoeStrategy{lambda, dim_b, dim_c,
                     DensityOperator::maximally_mixed(n * dim_b * dim_c),
                     std::vector<Povm>(n, Povm::constant(zero, dim_b)),
                     std::vector<Povm>(n, Povm::constant(zero, dim_c))};
}

MoeStrategy random_moe_strategy(int lambda, std::size_t dim_b,
                                std::size_t dim_c, std::uint64_t seed) {
  if (lambda < 1) throw ArgumentError("monogamy game needs lambda >= 1");
  Rng rng(mix64(seed));
  const std::size_t n = theta_count(lambda);
  const std::size_t dim = n * dim_b * dim_c;
  MoeStrategy s{lambda, dim_b, dim_c,
                random_density(dim, std::min<std::size_t>(dim, 3), rng), {}, {}};
  const auto labels = labels_for(lambda);
  for (std::size_t t = 0; t < n; ++t) {
    s.b_povms.push_back(random_povm(dim_b, labels, rng));
    s.c_povms.push_back(random_povm(dim_c, labels, rng));
  }
  return s;
}

MoeChannelStrategy random_moe_channel_strategy(int lambda, std::size_t dim_b,
                                               std::size_t dim_c,
                                               std::uint64_t seed) {
  if (lambda < 1) throw ArgumentError("monogamy game needs lambda >= 1");
  Rng rng(mix64(seed ^ 0x5eed));
  const std::size_t n = theta_count(lambda);
  const std::size_t out = dim_b * dim_c;
  const std::size_t count = std::max<std::size_t>(2, (n + out - 1) / out);
  MoeChannelStrategy s{lambda, dim_b, dim_c,
                       random_channel(n, out, count, rng), {}, {}};
  const auto labels = labels_for(lambda);
  for (std::size_t t = 0; t < n; ++t) {
    s.b_povms.push_back(random_povm(dim_b, labels, rng));
    s.c_povms.push_back(random_povm(dim_c, labels, rng));
  }
  return s;
}

double moe_bound(int lambda) {
  return std::pow(0.5 + 1.0 / (2.0 * std::sqrt(2.0)), lambda);
}

SeesawResult seesaw_optimize_moe(const SeesawOptions& options) {
  const int lambda = options.lambda;
  if (lambda < 1 || lambda > 2) {
    throw ArgumentError("seesaw supports lambda in {1, 2}, got " +
                        std::to_string(lambda));
  }
  const std::size_t n = theta_count(lambda);
  const std::size_t dim_b = options.dim_b == 0 ? n : options.dim_b;
  const std::size_t dim_c = options.dim_c == 0 ? n : options.dim_c;
  if (options.max_iterations < 1) {
    throw ArgumentError("seesaw needs at least one iteration");
  }

  Rng rng(mix64(options.seed));
  const auto labels = labels_for(lambda);
  MoeStrategy s{lambda, dim_b, dim_c,
                DensityOperator::maximally_mixed(n * dim_b * dim_c), {}, {}};
  for (std::size_t t = 0; t < n; ++t) {
    s.b_povms.push_back(random_povm(dim_b, labels, rng));
    s.c_povms.push_back(random_povm(dim_c, labels, rng));
  }
  s.state = top_eigenstate(payoff(s));

  SeesawResult result;
  double value = moe_value(s);
  for (int it = 1; it <= options.max_iterations; ++it) {
    for (std::size_t t = 0; t < n; ++t) {
      s.b_povms[t] = improve_povm(s.b_povms[t], side_operators(s, t, true),
                                  lambda);
    }
    for (std::size_t t = 0; t < n; ++t) {
      s.c_povms[t] = improve_povm(s.c_povms[t], side_operators(s, t, false),
                                  lambda);
    }
    const DensityOperator next = top_eigenstate(payoff(s));
    MoeStrategy candidate = s;
    candidate.state = next;
    if (moe_value(candidate) >= moe_value(s)) s = std::move(candidate);

    const double next_value = moe_value(s);
    result.history.push_back(next_value);
    result.iterations = it;
    const double delta = next_value - value;
    value = next_value;
    if (std::abs(delta) < options.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.value = value;
  result.strategy = std::move(s);
  return result;
}

}  // namespace uncloneable
