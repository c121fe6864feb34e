// Copyright 2026 The clue Authors
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

#include "clue/game_operator.hpp"

#include <cmath>
#include <sstream>

#include "clue/errors.hpp"

namespace clue {

namespace {

using ConstBlock = Eigen::Map<const CMatrix>;
using Block = Eigen::Map<CMatrix>;

void check_observable(const CMatrix& m, const char* who, std::size_t k) {
  if (!is_hermitian_unitary(m, 1e-10)) {
    std::ostringstream os;
    os << "Strategy: " << who << "_" << k + 1 << " is not a Hermitian unitary";
    throw DomainError(os.str());
  }
}

void check_compatible(const CliffordFamily& family, const Strategy& strat) {
  if (strat.K() != family.K()) {
    std::ostringstream os;
    os << "strategy has " << strat.K() << " observables, family has " << family.K();
    throw DomainError(os.str());
  }
}

CMatrix dense_w(const CliffordFamily& family, const Strategy& strat,
                GameOperatorAction::Terms terms) {
  const Index d = family.dim();
  const Index D = strat.D();
  const CMatrix id_d = CMatrix::Identity(d, d);
  const CMatrix id_D = CMatrix::Identity(D, D);
  CMatrix w = CMatrix::Zero(d * D * D, d * D * D);
  for (int k = 0; k < family.K(); ++k) {
    const CMatrix& b = strat.B()[static_cast<std::size_t>(k)];
    const CMatrix& c = strat.C()[static_cast<std::size_t>(k)];
    if (terms.cross) {
      w += kron(family.dense()[static_cast<std::size_t>(k)], kron(b, id_D) + kron(id_D, c));
    }
    if (terms.commuting) w += kron(id_d, kron(b, c));
  }
  return w;
}

CVector seeded_start(Index n) {
  Rng rng(0x5eed, static_cast<std::uint64_t>(n));
  return random_unit_vector(n, rng);
}

}  // namespace

Strategy::Strategy(std::vector<CMatrix> b, std::vector<CMatrix> c)
    : b_(std::move(b)), c_(std::move(c)) {
  if (b_.size() != c_.size()) throw DomainError("Strategy: B and C differ in length");
  if (b_.empty()) throw DomainError("Strategy: needs at least one observable pair");
  const Index D = b_.front().rows();
  for (std::size_t k = 0; k < b_.size(); ++k) {
    if (b_[k].rows() != D || b_[k].cols() != D || c_[k].rows() != D || c_[k].cols() != D) {
      throw DomainError("Strategy: observables must all be D x D");
    }
    check_observable(b_[k], "B", k);
    check_observable(c_[k], "C", k);
  }
  symmetric_ = true;
  for (std::size_t k = 0; k < b_.size() && symmetric_; ++k) symmetric_ = b_[k] == c_[k];
}

Strategy Strategy::symmetric(std::vector<CMatrix> u) {
  std::vector<CMatrix> c = u;
  return Strategy(std::move(u), std::move(c));
}

Strategy Strategy::swapped() const { return Strategy(c_, b_); }

Strategy identity_strategy(int K, Index D) {
  if (K < 1 || D < 1) throw DomainError("identity_strategy: K and D must be positive");
  return Strategy::symmetric(std::vector<CMatrix>(static_cast<std::size_t>(K), CMatrix::Identity(D, D)));
}

Strategy gamma_strategy(const CliffordFamily& family) {
  return Strategy::symmetric(family.dense());
}

Strategy random_strategy(int K, Index D, Rng& rng, bool symmetric) {
  if (K < 1 || D < 1) throw DomainError("random_strategy: K and D must be positive");
  std::vector<CMatrix> b, c;
  for (int k = 0; k < K; ++k) b.push_back(random_hermitian_unitary(D, rng));
  if (symmetric) return Strategy::symmetric(std::move(b));
  for (int k = 0; k < K; ++k) c.push_back(random_hermitian_unitary(D, rng));
  return Strategy(std::move(b), std::move(c));
}

Strategy diagonal_sign_strategy(const Eigen::MatrixXi& signs) {
  std::vector<CMatrix> u;
  for (Index k = 0; k < signs.rows(); ++k) {
    CMatrix m = CMatrix::Zero(signs.cols(), signs.cols());
    for (Index j = 0; j < signs.cols(); ++j) {
      int s = signs(k, j);
      if (s != 1 && s != -1) throw DomainError("diagonal_sign_strategy: entries must be +-1");
      m(j, j) = static_cast<double>(s);
    }
    u.push_back(std::move(m));
  }
  return Strategy::symmetric(std::move(u));
}

LowRankStrategy low_rank_strategy(const CliffordFamily& family, Index r, Index D,
                                  std::uint64_t rng_seed) {
  const Index K = family.K();
  if (r < 1) throw DomainError("low_rank_strategy: rank must be >= 1");
  if (D < K * r + 1) {
    std::ostringstream os;
    os << "low_rank_strategy: need D >= K r + 1 = " << K * r + 1 << ", got " << D;
    throw DomainError(os.str());
  }
  Rng rng(rng_seed, 0x6c6f77);
  CVector u_perp = random_unit_vector(D, rng);
  std::vector<CMatrix> u;
  for (Index k = 0; k < K; ++k) {
    Eigen::MatrixXcd g(D, r);
    for (Index i = 0; i < D; ++i) {
      for (Index j = 0; j < r; ++j) g(i, j) = rng.complex_normal();
    }
    g -= u_perp * (u_perp.adjoint() * g);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(D, r);
    CMatrix m = 2.0 * q * q.adjoint();
    m.diagonal().array() -= 1.0;
    CMatrix h = 0.5 * (m + m.adjoint());
    u.push_back(std::move(h));
  }
  return {Strategy::symmetric(std::move(u)), std::move(u_perp)};
}

GameOperatorAction::GameOperatorAction(const CliffordFamily& family, const Strategy& strat)
    : GameOperatorAction(family, strat, Terms{}) {}

GameOperatorAction::GameOperatorAction(const CliffordFamily& family, const Strategy& strat,
                                       Terms terms)
    : family_(&family), strat_(&strat), terms_(terms), d_(family.dim()), D_(strat.D()) {
  check_compatible(family, strat);
}

void GameOperatorAction::apply(const CVector& in, CVector& out) const {
  const Index n = dim();
  const Index block = D_ * D_;
  out.setZero(n);
  CVector with_b(n), with_c(n);
  const auto& mons = family_->monomials();
  for (int k = 0; k < family_->K(); ++k) {
    const CMatrix& b = strat_->B()[static_cast<std::size_t>(k)];
    const CMatrix& c = strat_->C()[static_cast<std::size_t>(k)];
    // (I (x) I (x) C) z: the last factor is the column index of the (dD) x D view.
    Block(with_c.data(), d_ * D_, D_).noalias() =
        ConstBlock(in.data(), d_ * D_, D_) * c.transpose();
    for (Index a = 0; a < d_; ++a) {
      Block(with_b.data() + a * block, D_, D_).noalias() =
          b * ConstBlock(in.data() + a * block, D_, D_);
      if (terms_.commuting) {
        Block(out.data() + a * block, D_, D_).noalias() +=
            b * ConstBlock(with_c.data() + a * block, D_, D_);
      }
    }
    if (terms_.cross) {
      const MonomialMatrix& g = mons[static_cast<std::size_t>(k)];
      for (Index a = 0; a < d_; ++a) {
        const Index src = g.source[static_cast<std::size_t>(a)] * block;
        const cd coeff = g.coeff[static_cast<std::size_t>(a)];
        out.segment(a * block, block) +=
            coeff * (with_b.segment(src, block) + with_c.segment(src, block));
      }
    }
  }
}

LinearOperator GameOperatorAction::as_operator() const {
  return [this](const CVector& in, CVector& out) { apply(in, out); };
}

double GameOperatorAction::expectation(const CVector& z) const {
  CVector wz;
  apply(z, wz);
  return z.dot(wz).real();
}

GameOperator build_W(const CliffordFamily& family, const Strategy& strat) {
  check_compatible(family, strat);
  return {family.K(), family.dim(), strat.D(),
          HermitianMatrix(dense_w(family, strat, GameOperatorAction::Terms{}))};
}

SpectrumBounds w_spectrum(const CliffordFamily& family, const Strategy& strat,
                          GameOperatorAction::Terms terms) {
  check_compatible(family, strat);
  GameOperatorAction action(family, strat, terms);
  const Index n = action.dim();
  if (n <= kDenseEigenLimit) {
    return extreme_eigenvalues(HermitianMatrix(dense_w(family, strat, terms)));
  }
  CVector start = seeded_start(n);
  double top = lanczos_top(action.as_operator(), n, start).value;
  LinearOperator negated = [&action](const CVector& in, CVector& out) {
    action.apply(in, out);
    out = -out;
  };
  double bottom = -lanczos_top(negated, n, start).value;
  return {bottom, top};
}

double w_norm(const CliffordFamily& family, const Strategy& strat,
              GameOperatorAction::Terms terms) {
  SpectrumBounds s = w_spectrum(family, strat, terms);
  return std::max(std::abs(s.min), std::abs(s.max));
}

double win_prob_from_norm(int K, double w_norm) {
  if (K < 1) throw DomainError("K must be >= 1");
  if (w_norm < 0) throw DomainError("norm must be nonnegative");
  return 0.25 + w_norm / (4.0 * K);
}

ConjectureBound conjecture_bound(int K) {
  if (K < 1) throw DomainError("K must be >= 1");
  const double r = std::sqrt(static_cast<double>(K));
  return {K + 2.0 * r, 0.5 + 0.5 / r};
}

std::vector<GammaNorms> gamma_strategy_norms(int K_max) {
  std::vector<GammaNorms> out;
  for (int K = 2; K <= K_max; ++K) {
    CliffordFamily family = clifford_family_for(K);
    Strategy strat = gamma_strategy(family);
    GammaNorms g;
    g.K = K;
    g.full = w_norm(family, strat);
    g.cross = w_norm(family, strat, {.cross = true, .commuting = false});
    g.commuting = w_norm(family, strat, {.cross = false, .commuting = true});
    out.push_back(g);
  }
  return out;
}

BoundCheck commuting_strategy_check(const CliffordFamily& family, const Eigen::MatrixXi& signs) {
  if (signs.rows() != family.K()) {
    throw DomainError("commuting_strategy_check: need one sign row per generator");
  }
  Strategy strat = diagonal_sign_strategy(signs);
  BoundCheck out;
  out.value = w_norm(family, strat);
  out.bound = conjecture_bound(family.K()).norm_bound;
  out.pass = out.value <= out.bound + 1e-9;
  return out;
}

double product_state_value(const CliffordFamily& family, const Strategy& strat,
                           const CVector& alice, const CVector& bc) {
  check_compatible(family, strat);
  const Index D = strat.D();
  if (alice.size() != family.dim() || bc.size() != D * D) {
    throw DomainError("product_state_value: vector sizes do not match d and D^2");
  }
  if (std::abs(alice.norm() - 1.0) > 1e-10 || std::abs(bc.norm() - 1.0) > 1e-10) {
    throw DomainError("product_state_value: vectors must have unit norm");
  }
  CVector psi(alice.size() * bc.size());
  for (Index a = 0; a < alice.size(); ++a) psi.segment(a * bc.size(), bc.size()) = alice(a) * bc;
  return GameOperatorAction(family, strat).expectation(psi);
}

}  // namespace clue
