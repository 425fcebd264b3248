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

#include "uncloneable/attacks.hpp"

#include <cmath>
#include <string>

#include "uncloneable/errors.hpp"

namespace uncloneable {

namespace {

const BitString kBit0 = BitString(0, 1);
const BitString kBit1 = BitString(1, 1);

Matrix identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return Matrix::Identity(d, d);
}

// Kraus operators <i| of the map that traces out a `dim`-dimensional input.
std::vector<Matrix> discard_kraus(std::size_t dim) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < dim; ++i) {
    Matrix k = Matrix::Zero(1, static_cast<Eigen::Index>(dim));
    k(0, static_cast<Eigen::Index>(i)) = 1.0;
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<std::pair<double, Vector>> spectral(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  std::vector<std::pair<double, Vector>> out;
  for (Eigen::Index j = es.eigenvalues().size(); j-- > 0;) {
    const double w = es.eigenvalues()(j);
    if (w > 1e-14) out.emplace_back(w, es.eigenvectors().col(j));
  }
  return out;
}

// Conditional state of register C after B's outcome E on |v> = sum V(b,c)
// |b>|c>; unnormalised, its trace is the outcome probability.
Matrix conditional_c(const Matrix& v, const Matrix& e) {
  return v.transpose() * e.transpose() * v.conjugate();
}

BitString sample_povm_on(const Matrix& rho, const Povm& povm, Rng& rng) {
  std::vector<double> w;
  std::vector<BitString> labels;
  for (const auto& [label, e] : povm.elements()) {
    labels.push_back(label);
    w.push_back(std::max(0.0, (e * rho).trace().real()));
  }
  return labels[sample_index(w, rng)];
}

Matrix reshape(const Vector& v, std::size_t rows, std::size_t cols) {
  Matrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          v(static_cast<Eigen::Index>(r * cols + c));
    }
  }
  return out;
}

void require_scheme(const QecmScheme& scheme, const std::string& want,
                    const std::string& attack) {
  if (scheme.name() != want) {
    throw UnsupportedError(attack + " only targets the '" + want +
                           "' scheme, not '" + scheme.name() + "'");
  }
}

std::uint64_t key_hash(std::uint64_t seed, const Key& key,
                       const BitString& extra) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ key.pad.value() ^ (std::uint64_t(key.pad.length()) << 58));
  h = mix64(h ^ key.theta.value() ^ (std::uint64_t(key.theta.length()) << 52));
  h = mix64(h ^ extra.value() ^ (std::uint64_t(extra.length()) << 46));
  return h;
}

}  // namespace

// --- SplitInstrument -------------------------------------------------------

SplitInstrument::SplitInstrument(std::vector<SplitBranch> branches,
                                 std::size_t dim_in, std::size_t dim_b,
                                 std::size_t dim_c)
    : branches_(std::move(branches)),
      dim_in_(dim_in),
      dim_b_(dim_b),
      dim_c_(dim_c) {
  if (branches_.empty()) throw ArgumentError("instrument has no branches");
  if (dim_b_ * dim_c_ > kMaxDimension || dim_in_ > kMaxDimension) {
    throw CapacityError("split registers exceed the dense simulation cap");
  }
  const auto din = static_cast<Eigen::Index>(dim_in_);
  const auto dout = static_cast<Eigen::Index>(dim_b_ * dim_c_);
  Matrix sum = Matrix::Zero(din, din);
  for (const SplitBranch& branch : branches_) {
    for (const Matrix& k : branch.kraus) {
      if (k.rows() != dout || k.cols() != din) {
        throw ArgumentError("split Kraus operator has shape " +
                            std::to_string(k.rows()) + "x" +
                            std::to_string(k.cols()) + ", expected " +
                            std::to_string(dout) + "x" + std::to_string(din));
      }
      sum.noalias() += k.adjoint() * k;
    }
  }
  const double err = (sum - Matrix::Identity(din, din)).cwiseAbs().maxCoeff();
  if (err > kTolerance) {
    throw ValidityError("split instrument is not trace preserving (deviation " +
                        std::to_string(err) + ")");
  }
}

KrausChannel SplitInstrument::as_channel() const {
  std::vector<Matrix> all;
  for (const SplitBranch& branch : branches_) {
    all.insert(all.end(), branch.kraus.begin(), branch.kraus.end());
  }
  return KrausChannel(std::move(all), dim_in_, dim_b_ * dim_c_);
}

// --- gen decomposition -----------------------------------------------------

std::vector<GenBranch> decompose_gen(const DensityOperator& gen,
                                     std::size_t dim_s, int message_bits) {
  const std::size_t dim_m = dimension_for_qubits(message_bits);
  if (gen.dim() != dim_s * dim_m) {
    throw ArgumentError("gen state does not live on S (x) M");
  }
  std::vector<GenBranch> out;
  const auto ds = static_cast<Eigen::Index>(dim_s);
  for (std::size_t m = 0; m < dim_m; ++m) {
    Matrix block(ds, ds);
    for (Eigen::Index a = 0; a < ds; ++a) {
      for (Eigen::Index b = 0; b < ds; ++b) {
        block(a, b) = gen.matrix()(a * static_cast<Eigen::Index>(dim_m) +
                                       static_cast<Eigen::Index>(m),
                                   b * static_cast<Eigen::Index>(dim_m) +
                                       static_cast<Eigen::Index>(m));
      }
    }
    const double p = block.trace().real();
    if (p <= 1e-14) continue;
    GenBranch branch{BitString(m, message_bits), p, spectral(block / p)};
    out.push_back(std::move(branch));
  }
  return out;
}

std::vector<std::pair<double, Vector>> side_marginal(
    const DensityOperator& gen, std::size_t dim_s, int message_bits) {
  const std::size_t dim_m = dimension_for_qubits(message_bits);
  if (gen.dim() != dim_s * dim_m) {
    throw ArgumentError("gen state does not live on S (x) M");
  }
  return spectral(partial_trace(gen.matrix(), {dim_s, dim_m}, {0}));
}

// --- Compatibility ---------------------------------------------------------

namespace {

void check_target(const std::string& target, int quantum_qubits,
                  int message_bits, const std::string& name,
                  const QecmScheme& scheme) {
  if (!target.empty() && target != scheme.name()) {
    throw ArgumentError("attack '" + name + "' targets '" + target +
                        "' but the scheme is '" + scheme.name() + "'");
  }
  if (quantum_qubits != scheme.quantum_qubits() ||
      message_bits != scheme.message_bits()) {
    throw ArgumentError("attack '" + name +
                        "' was built for different ciphertext or message "
                        "sizes than scheme '" + scheme.name() + "'");
  }
}

}  // namespace

void check_compatible(const CloningAttack& a, const QecmScheme& scheme) {
  check_target(a.target, a.quantum_qubits, a.message_bits, a.name, scheme);
}

void check_compatible(const CloningDistinguishingAttack& a,
                      const QecmScheme& scheme) {
  check_target(a.target, a.quantum_qubits, a.message_bits, a.name, scheme);
}

void check_compatible(const DistinguishingAttack& a,
                      const QecmScheme& scheme) {
  check_target("", a.quantum_qubits, a.message_bits, a.name, scheme);
}

// --- Generic evaluation of a split followed by decoders --------------------

std::pair<BitString, BitString> sample_split_outputs(
    const SplitInstrument& inst, const Vector& input, const DecoderFn& b,
    const DecoderFn& c, const Key& key, Rng& rng) {
  if (static_cast<std::size_t>(input.size()) != inst.dim_in()) {
    throw ArgumentError("split input has the wrong dimension");
  }
  std::vector<double> weights;
  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t i = 0; i < inst.branches().size(); ++i) {
    const auto& kraus = inst.branches()[i].kraus;
    for (std::size_t j = 0; j < kraus.size(); ++j) {
      weights.push_back((kraus[j] * input).squaredNorm());
      index.emplace_back(i, j);
    }
  }
  const auto [bi, kj] = index[sample_index(weights, rng)];
  const SplitBranch& branch = inst.branches()[bi];
  Vector v = branch.kraus[kj] * input;
  v.normalize();
  const Matrix vm = reshape(v, inst.dim_b(), inst.dim_c());

  const Povm pb = b(key, branch.broadcast);
  const Povm pc = c(key, branch.broadcast);
  if (pb.dim() != inst.dim_b() || pc.dim() != inst.dim_c()) {
    throw ArgumentError("decoder POVM does not match its register");
  }
  std::vector<double> wb;
  std::vector<Matrix> cond;
  std::vector<BitString> labels;
  for (const auto& [label, e] : pb.elements()) {
    Matrix rc = conditional_c(vm, e);
    wb.push_back(std::max(0.0, rc.trace().real()));
    cond.push_back(std::move(rc));
    labels.push_back(label);
  }
  const std::size_t yb = sample_index(wb, rng);
  const BitString out_c = sample_povm_on(cond[yb] / wb[yb], pc, rng);
  return {labels[yb], out_c};
}

double split_success(const SplitInstrument& inst, const Vector& input,
                     const DecoderFn& b, const DecoderFn& c, const Key& key,
                     const BitString& want_b, const BitString& want_c) {
  if (static_cast<std::size_t>(input.size()) != inst.dim_in()) {
    throw ArgumentError("split input has the wrong dimension");
  }
  double total = 0.0;
  for (const SplitBranch& branch : inst.branches()) {
    const Povm pb = b(key, branch.broadcast);
    const Povm pc = c(key, branch.broadcast);
    if (pb.dim() != inst.dim_b() || pc.dim() != inst.dim_c()) {
      throw ArgumentError("decoder POVM does not match its register");
    }
    const Matrix eb = pb.element(want_b);
    const Matrix ec = pc.element(want_c);
    if (eb.isZero(0.0) || ec.isZero(0.0)) continue;
    for (const Matrix& k : branch.kraus) {
      const Matrix vm = reshape(k * input, inst.dim_b(), inst.dim_c());
      // <v| E_b (x) E_c |v> = Tr[V^dag E_b V E_c^T]
      total += (vm.adjoint() * eb * vm * ec.transpose()).trace().real();
    }
  }
  return total;
}

// --- Cloning attacks -------------------------------------------------------

CloningAttack copy_attack(std::shared_ptr<const QecmScheme> scheme) {
  if (scheme->quantum_qubits() != 0) {
    throw UnsupportedError("copy_attack needs classical-only ciphertexts; '" +
                           scheme->name() + "' has a quantum part");
  }
  CloningAttack a;
  a.name = "copy";
  a.target = scheme->name();
  a.quantum_qubits = 0;
  a.message_bits = scheme->message_bits();
  a.split = [](const std::optional<BitString>& classical) {
    if (!classical) throw ArgumentError("copy_attack: no classical part");
    return SplitInstrument({{*classical, {identity(1)}}}, 1, 1, 1);
  };
  a.decode_b = [scheme](const Key& key, const BitString& w) {
    Ciphertext ct;
    ct.classical_part = w;
    std::vector<Povm::Element> elements;
    for (const auto& [m, p] : scheme->dec_distribution(key, ct)) {
      elements.emplace_back(m, Matrix::Constant(1, 1, p));
    }
    return Povm(std::move(elements));
  };
  a.decode_c = a.decode_b;
  return a;
}

CloningAttack guess_attack(const QecmScheme& scheme, const BitString& m0) {
  if (m0.length() != scheme.message_bits()) {
    throw ArgumentError("guess_attack: guess has the wrong length");
  }
  CloningAttack a;
  a.name = "guess";
  a.quantum_qubits = scheme.quantum_qubits();
  a.message_bits = scheme.message_bits();
  const std::size_t dim = dimension_for_qubits(scheme.quantum_qubits());
  a.split = [dim](const std::optional<BitString>&) {
    return SplitInstrument({{BitString(), discard_kraus(dim)}}, dim, 1, 1);
  };
  a.decode_b = [m0](const Key&, const BitString&) {
    return Povm::constant(m0, 1);
  };
  a.decode_c = a.decode_b;
  a.sampler = [m0](const Ciphertext&, const Key&, Rng&) {
    return std::make_pair(m0, m0);
  };
  return a;
}

CloningAttack breidbart_attack(const QecmScheme& scheme) {
  require_scheme(scheme, "ce", "breidbart_attack");
  const int lambda = scheme.lambda();
  CloningAttack a;
  a.name = "breidbart";
  a.target = "ce";
  a.quantum_qubits = lambda;
  a.message_bits = scheme.message_bits();
  a.split = [lambda](const std::optional<BitString>&) {
    // Product Breidbart basis: column c is |b_c1> (x) ... (x) |b_cn>.
    Matrix basis = Matrix::Identity(1, 1);
    for (int i = 0; i < lambda; ++i) basis = kron(basis, breidbart_basis());
    std::vector<SplitBranch> branches;
    for (std::size_t c = 0; c < static_cast<std::size_t>(basis.cols()); ++c) {
      branches.push_back(
          {BitString(c, lambda), {basis.col(static_cast<Eigen::Index>(c)).adjoint()}});
    }
    return SplitInstrument(std::move(branches),
                           static_cast<std::size_t>(basis.rows()), 1, 1);
  };
  a.decode_b = [](const Key& key, const BitString& c) {
    return Povm::constant(c ^ key.pad, 1);
  };
  a.decode_c = a.decode_b;
  a.sampler = [lambda](const Ciphertext& ct, const Key& key, Rng& rng) {
    PureState psi = ct.quantum_part;
    BitString c = BitString::zeros(lambda);
    const Matrix basis = breidbart_basis();
    for (int i = 0; i < lambda; ++i) {
      auto [bit, post] = measure_qubit(psi, i, basis, rng);
      c = c.with_bit(i, bit);
      psi = std::move(post);
    }
    const BitString guess = c ^ key.pad;
    return std::make_pair(guess, guess);
  };
  return a;
}

CloningAttack split_measure_attack(const QecmScheme& scheme) {
  require_scheme(scheme, "ce", "split_measure_attack");
  const int lambda = scheme.lambda();
  if (lambda % 2 != 0) {
    throw ArgumentError("split_measure_attack needs even lambda, got " +
                        std::to_string(lambda));
  }
  const int half = lambda / 2;
  const std::size_t dim_half = dimension_for_qubits(half);
  CloningAttack a;
  a.name = "split_measure";
  a.target = "ce";
  a.quantum_qubits = lambda;
  a.message_bits = lambda;
  a.dim_b = dim_half;
  a.dim_c = dim_half;
  a.split = [dim_half](const std::optional<BitString>&) {
    const std::size_t d = dim_half * dim_half;
    return SplitInstrument({{BitString(), {identity(d)}}}, d, dim_half,
                           dim_half);
  };
  // Measure the held half in its part of theta, undo the pad, zero-fill.
  const auto decoder = [half](bool first) {
    return [half, first](const Key& key, const BitString&) {
      const int offset = first ? 0 : half;
      const BitString theta = key.theta.slice(offset, half);
      const BitString pad = key.pad.slice(offset, half);
      const Matrix basis = wiesner_basis(theta);
      std::vector<Povm::Element> elements;
      for (Eigen::Index z = 0; z < basis.cols(); ++z) {
        const BitString known = BitString(static_cast<std::uint64_t>(z), half) ^ pad;
        const BitString label = first ? known.concat(BitString::zeros(half))
                                      : BitString::zeros(half).concat(known);
        elements.emplace_back(label, basis.col(z) * basis.col(z).adjoint());
      }
      return Povm(std::move(elements));
    };
  };
  a.decode_b = decoder(true);
  a.decode_c = decoder(false);
  return a;
}

CloningAttack transform_cd_to_cloning(const CloningDistinguishingAttack& a) {
  const int n = a.message_bits;
  const std::size_t dim_t = dimension_for_qubits(a.quantum_qubits);
  const std::size_t dim_s = a.dim_s;
  const auto branches = std::make_shared<const std::vector<GenBranch>>(
      decompose_gen(*a.gen, dim_s, n));

  // Preparation isometry pieces sqrt(p_m' * mu_j) (|v_j>_S (x) I_T), per m'.
  struct Prep {
    BitString message;
    std::vector<Matrix> ops;
  };
  auto preps = std::make_shared<std::vector<Prep>>();
  for (const GenBranch& g : *branches) {
    Prep prep{g.message, {}};
    for (const auto& [mu, v] : g.side_states) {
      prep.ops.push_back(std::sqrt(g.probability * mu) *
                         kron(Matrix(v), identity(dim_t)));
    }
    preps->push_back(std::move(prep));
  }

  CloningAttack out;
  out.name = "transformed(" + a.name + ")";
  out.target = a.target;
  out.quantum_qubits = a.quantum_qubits;
  out.message_bits = n;
  out.dim_b = a.dim_b;
  out.dim_c = a.dim_c;
  const SplitFn inner = a.split;
  const std::size_t dim_b = a.dim_b, dim_c = a.dim_c;
  out.split = [inner, preps, dim_t, dim_b, dim_c,
               n](const std::optional<BitString>& classical) {
    const SplitInstrument inst = inner(classical);
    std::vector<SplitBranch> result;
    for (const Prep& prep : *preps) {
      for (const SplitBranch& branch : inst.branches()) {
        SplitBranch b{prep.message.concat(branch.broadcast), {}};
        for (const Matrix& k : branch.kraus) {
          for (const Matrix& v : prep.ops) b.kraus.push_back(k * v);
        }
        result.push_back(std::move(b));
      }
    }
    (void)n;
    return SplitInstrument(std::move(result), dim_t, dim_b, dim_c);
  };
  const auto wrap = [n](DecoderFn inner_decoder) {
    return [n, inner_decoder](const Key& key, const BitString& w) {
      const BitString m_prime = w.slice(0, n);
      const BitString rest = w.slice(n, w.length() - n);
      const Povm bit = inner_decoder(key, rest);
      const BitString zero = BitString::zeros(n);
      if (m_prime == zero) {
        return Povm::constant(zero, bit.dim());
      }
      return Povm({{zero, bit.element(kBit0)}, {m_prime, bit.element(kBit1)}});
    };
  };
  out.decode_b = wrap(a.decode_b);
  out.decode_c = wrap(a.decode_c);
  return out;
}

// --- Cloning-distinguishing attacks ----------------------------------------

namespace {

std::shared_ptr<const DensityOperator> message_gen(const BitString& m) {
  return std::make_shared<const DensityOperator>(
      DensityOperator::from_pure(PureState::basis(m)));
}

}  // namespace

CloningDistinguishingAttack fixed_bit_cd_attack(const QecmScheme& scheme,
                                                int bit) {
  CloningDistinguishingAttack a;
  a.name = "fixed_bit_" + std::to_string(bit);
  a.quantum_qubits = scheme.quantum_qubits();
  a.message_bits = scheme.message_bits();
  a.gen = message_gen(BitString::zeros(scheme.message_bits()));
  const std::size_t dim = dimension_for_qubits(scheme.quantum_qubits());
  a.split = [dim](const std::optional<BitString>&) {
    return SplitInstrument({{BitString(), discard_kraus(dim)}}, dim, 1, 1);
  };
  const BitString out = bit ? kBit1 : kBit0;
  a.decode_b = [out](const Key&, const BitString&) {
    return Povm::constant(out, 1);
  };
  a.decode_c = a.decode_b;
  return a;
}

CloningDistinguishingAttack constant_message_cd_attack(
    const QecmScheme& scheme, const BitString& m_star) {
  if (m_star.length() != scheme.message_bits()) {
    throw ArgumentError("constant_message_cd_attack: wrong message length");
  }
  CloningDistinguishingAttack a = fixed_bit_cd_attack(scheme, 1);
  a.name = "constant_message_" + m_star.to_string();
  a.gen = message_gen(m_star);
  return a;
}

CloningDistinguishingAttack half_split_cd_attack(const QecmScheme& scheme) {
  require_scheme(scheme, "ce", "half_split_cd_attack");
  const int n = scheme.lambda();
  if (n < 2) throw ArgumentError("half_split_cd_attack needs n >= 2");
  const int first = (n + 1) / 2;
  const int second = n - first;
  CloningDistinguishingAttack a;
  a.name = "half_split";
  a.target = "ce";
  a.quantum_qubits = n;
  a.message_bits = n;
  a.gen = message_gen(BitString::ones(n));
  a.dim_b = dimension_for_qubits(first);
  a.dim_c = dimension_for_qubits(second);
  const std::size_t dim = a.dim_b * a.dim_c;
  const std::size_t db = a.dim_b, dc = a.dim_c;
  a.split = [dim, db, dc](const std::optional<BitString>&) {
    return SplitInstrument({{BitString(), {identity(dim)}}}, dim, db, dc);
  };
  const auto decoder = [](int offset, int count) {
    return [offset, count](const Key& key, const BitString&) {
      const Matrix basis = wiesner_basis(key.theta.slice(offset, count));
      const BitString pad = key.pad.slice(offset, count);
      const auto d = basis.rows();
      Matrix p1 = Matrix::Zero(d, d);
      for (Eigen::Index z = 0; z < basis.cols(); ++z) {
        const BitString plain = BitString(static_cast<std::uint64_t>(z), count) ^ pad;
        if (plain == BitString::ones(count)) {
          p1 += basis.col(z) * basis.col(z).adjoint();
        }
      }
      return Povm({{kBit0, Matrix::Identity(d, d) - p1}, {kBit1, p1}});
    };
  };
  a.decode_b = decoder(0, first);
  a.decode_c = decoder(first, second);
  return a;
}

CloningDistinguishingAttack random_cd_attack(const QecmScheme& scheme,
                                             std::uint64_t seed) {
  if (scheme.classical_bits() != 0) {
    throw UnsupportedError("random_cd_attack does not handle classical "
                           "ciphertext parts");
  }
  const int n = scheme.message_bits();
  CloningDistinguishingAttack a;
  a.name = "random_cd_" + std::to_string(seed);
  a.quantum_qubits = scheme.quantum_qubits();
  a.message_bits = n;
  a.dim_s = 2;
  a.dim_b = 2;
  a.dim_c = 2;
  Rng rng(mix64(seed));
  a.gen = std::make_shared<const DensityOperator>(
      random_density(a.dim_s * dimension_for_qubits(n), 2, rng));
  const std::size_t dim_in = a.dim_s * dimension_for_qubits(a.quantum_qubits);
  const auto channel = std::make_shared<const KrausChannel>(
      random_channel(dim_in, a.dim_b * a.dim_c,
                     std::max<std::size_t>(2, (dim_in + 3) / 4), rng));
  a.split = [channel, dim_in](const std::optional<BitString>&) {
    return SplitInstrument({{BitString(), channel->kraus()}}, dim_in, 2, 2);
  };
  const std::vector<BitString> bits = {kBit0, kBit1};
  a.decode_b = [seed, bits](const Key& key, const BitString& w) {
    Rng r(key_hash(seed ^ 0xb0b, key, w));
    return random_povm(2, bits, r);
  };
  a.decode_c = [seed, bits](const Key& key, const BitString& w) {
    Rng r(key_hash(seed ^ 0xc4a5, key, w));
    return random_povm(2, bits, r);
  };
  return a;
}

// --- Distinguishing attacks ------------------------------------------------

DistinguishingAttack random_coin_attack(const QecmScheme& scheme) {
  DistinguishingAttack a;
  a.name = "random_coin";
  a.quantum_qubits = scheme.quantum_qubits();
  a.message_bits = scheme.message_bits();
  a.gen = message_gen(BitString::ones(scheme.message_bits()));
  const std::size_t dim = dimension_for_qubits(scheme.quantum_qubits());
  a.measure = [dim](const std::optional<BitString>&, const Key*) {
    const Matrix half = 0.5 * identity(dim);
    return Povm({{kBit0, half}, {kBit1, half}});
  };
  return a;
}

DistinguishingAttack leaked_key_attack(
    std::shared_ptr<const QecmScheme> scheme) {
  DistinguishingAttack a;
  a.name = "leaked_key";
  a.quantum_qubits = scheme->quantum_qubits();
  a.message_bits = scheme->message_bits();
  a.gen = message_gen(BitString::ones(scheme->message_bits()));
  const std::size_t dim = dimension_for_qubits(scheme->quantum_qubits());
  a.measure = [scheme, dim](const std::optional<BitString>& classical,
                            const Key* key) {
    if (key == nullptr) {
      throw ArgumentError("leaked_key_attack needs a key-leaking game run");
    }
    if (scheme->quantum_qubits() != 0) {
      throw UnsupportedError("leaked_key_attack handles classical schemes");
    }
    Ciphertext ct;
    ct.classical_part = classical;
    double p_zero = 0.0;
    for (const auto& [m, p] : scheme->dec_distribution(*key, ct)) {
      if (m == BitString::zeros(m.length())) p_zero += p;
    }
    return Povm({{kBit0, p_zero * identity(dim)},
                 {kBit1, (1.0 - p_zero) * identity(dim)}});
  };
  return a;
}

DistinguishingAttack random_distinguishing_attack(const QecmScheme& scheme,
                                                  std::uint64_t seed) {
  DistinguishingAttack a;
  a.name = "random_distinguisher_" + std::to_string(seed);
  a.quantum_qubits = scheme.quantum_qubits();
  a.message_bits = scheme.message_bits();
  a.dim_s = 2;
  Rng rng(mix64(seed));
  a.gen = std::make_shared<const DensityOperator>(random_density(
      a.dim_s * dimension_for_qubits(scheme.message_bits()), 2, rng));
  const std::size_t dim = a.dim_s * dimension_for_qubits(a.quantum_qubits);
  a.measure = [seed, dim](const std::optional<BitString>& classical,
                          const Key*) {
    Rng r(mix64(seed ^ 0xd15) ^
          (classical ? mix64(classical->value() + 1) : 0));
    return random_povm(dim, {kBit0, kBit1}, r);
  };
  return a;
}

}  // namespace uncloneable
