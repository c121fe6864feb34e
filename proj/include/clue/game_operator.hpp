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

#pragma once

#include <cstdint>
#include <vector>

#include "clue/clifford.hpp"

namespace clue {

/**
 * K pairs (B_k, C_k) of D-dimensional Hermitian unitaries.
 * A symmetric strategy has B_k = C_k = U_k.
 */
class Strategy {
 public:
  /** @throws DomainError on size mismatch or a non Hermitian-unitary entry. */
  Strategy(std::vector<CMatrix> b, std::vector<CMatrix> c);
  static Strategy symmetric(std::vector<CMatrix> u);

  [[nodiscard]] int K() const { return static_cast<int>(b_.size()); }
  [[nodiscard]] Index D() const { return b_.empty() ? 0 : b_.front().rows(); }
  [[nodiscard]] bool is_symmetric() const { return symmetric_; }
  [[nodiscard]] const std::vector<CMatrix>& B() const { return b_; }
  [[nodiscard]] const std::vector<CMatrix>& C() const { return c_; }

  /// The strategy with Bob and Charlie exchanged.
  [[nodiscard]] Strategy swapped() const;

 private:
  std::vector<CMatrix> b_;
  std::vector<CMatrix> c_;
  bool symmetric_ = false;
};

/// U_k = I_D for every k.
Strategy identity_strategy(int K, Index D = 1);

/// U_k = Gamma_k, so D = d.
Strategy gamma_strategy(const CliffordFamily& family);

/// Independent V diag(+-1) V* draws with floor(D/2) negative eigenvalues.
Strategy random_strategy(int K, Index D, Rng& rng, bool symmetric = false);

/// U_k = diag(signs(k, :)).
Strategy diagonal_sign_strategy(const Eigen::MatrixXi& signs);

struct LowRankStrategy {
  Strategy strategy;
  /// Unit vector orthogonal to every +1 eigenvector of every U_k.
  CVector u_perp;
};

/**
 * U_k = 2 P_k - I with P_k a random rank-r projector, all P_k orthogonal to a
 * common random unit vector u_perp.
 * @throws DomainError if D < K r + 1 or r < 1.
 */
LowRankStrategy low_rank_strategy(const CliffordFamily& family, Index r, Index D,
                                  std::uint64_t rng_seed);

/**
 * sum_k Gamma_k (x) (B_k (x) I + I (x) C_k) + I (x) B_k (x) C_k on
 * C^d (x) C^D (x) C^D, applied without forming the matrix.
 */
class GameOperatorAction {
 public:
  struct Terms {
    bool cross = true;
    bool commuting = true;
  };

  GameOperatorAction(const CliffordFamily& family, const Strategy& strat);
  GameOperatorAction(const CliffordFamily& family, const Strategy& strat, Terms terms);

  [[nodiscard]] Index dim() const { return d_ * D_ * D_; }
  [[nodiscard]] Index d() const { return d_; }
  [[nodiscard]] Index D() const { return D_; }

  void apply(const CVector& in, CVector& out) const;
  [[nodiscard]] LinearOperator as_operator() const;

  /// <z|W|z>.
  [[nodiscard]] double expectation(const CVector& z) const;

 private:
  const CliffordFamily* family_;
  const Strategy* strat_;
  Terms terms_;
  Index d_;
  Index D_;
};

/** The dense game operator. */
struct GameOperator {
  int K = 0;
  Index d = 0;
  Index D = 0;
  HermitianMatrix matrix;
};

/**
 * Dense W in (Alice, Bob, Charlie) order.
 * @throws DomainError if strat.K() != family.K().
 */
GameOperator build_W(const CliffordFamily& family, const Strategy& strat);

/// Extreme eigenvalues of W; dense up to kDenseEigenLimit, Lanczos beyond.
SpectrumBounds w_spectrum(const CliffordFamily& family, const Strategy& strat,
                          GameOperatorAction::Terms terms = {});

/// max(|lambda_min|, |lambda_max|) of W.
double w_norm(const CliffordFamily& family, const Strategy& strat,
              GameOperatorAction::Terms terms = {});

/// 1/4 + w_norm / (4K).
double win_prob_from_norm(int K, double w_norm);

struct ConjectureBound {
  double norm_bound = 0.0;
  double win_bound = 0.0;
};

/// (K + 2 sqrt(K), 1/2 + 1/(2 sqrt(K))).
ConjectureBound conjecture_bound(int K);

struct GammaNorms {
  int K = 0;
  double full = 0.0;
  /// || sum Gamma_k (x) (Gamma_k (x) I + I (x) Gamma_k) ||
  double cross = 0.0;
  /// || sum I (x) Gamma_k (x) Gamma_k ||
  double commuting = 0.0;
};

/// Norms at U_k = Gamma_k for K = 2..K_max.
std::vector<GammaNorms> gamma_strategy_norms(int K_max);

struct BoundCheck {
  bool pass = false;
  double value = 0.0;
  double bound = 0.0;
};

/// Builds U_k = diag(signs(k, :)) and checks ||W|| <= K + 2 sqrt(K) + 1e-9.
BoundCheck commuting_strategy_check(const CliffordFamily& family,
                                    const Eigen::MatrixXi& signs);

/**
 * <psi|W|psi> for psi = alice (x) bc.
 * @throws DomainError if either vector is not a unit vector or sizes differ.
 */
double product_state_value(const CliffordFamily& family, const Strategy& strat,
                           const CVector& alice, const CVector& bc);

}  // namespace clue
