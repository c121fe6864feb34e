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

#include <catch_amalgamated.hpp>
#include <cmath>

#include "clue/errors.hpp"
#include "clue/game_operator.hpp"

using namespace clue;
using Catch::Matchers::WithinAbs;

namespace {

// W assembled term by term from Kronecker products.
CMatrix reference_W(const CliffordFamily& fam, const Strategy& s) {
  const Index D = s.D();
  CMatrix id_d = CMatrix::Identity(fam.dim(), fam.dim());
  CMatrix id_D = CMatrix::Identity(D, D);
  CMatrix w = CMatrix::Zero(fam.dim() * D * D, fam.dim() * D * D);
  for (int k = 0; k < fam.K(); ++k) {
    const CMatrix& g = fam.dense()[static_cast<std::size_t>(k)];
    const CMatrix& b = s.B()[static_cast<std::size_t>(k)];
    const CMatrix& c = s.C()[static_cast<std::size_t>(k)];
    w += kron(g, kron(b, id_D)) + kron(g, kron(id_D, c)) + kron(id_d, kron(b, c));
  }
  return w;
}

double power_top(const CMatrix& m, double shift, int iters = 4000) {
  // Largest eigenvalue of m via power iteration on m + shift I.
  Rng rng(1234);
  CVector x = random_unit_vector(m.rows(), rng);
  for (int i = 0; i < iters; ++i) {
    CVector y = m * x + shift * x;
    x = y / y.norm();
  }
  return x.dot(m * x).real();
}

}  // namespace

TEST_CASE("dense W matches the Kronecker formula", "[game]") {
  Rng rng(21);
  for (int K : {2, 3, 5}) {
    CliffordFamily fam = clifford_family_for(K);
    for (Index D : {1, 2, 3}) {
      Strategy s = random_strategy(K, D, rng);
      GameOperator w = build_W(fam, s);
      CHECK((w.matrix.matrix() - reference_W(fam, s)).norm() < 1e-12);
    }
  }
}

TEST_CASE("matrix-free action matches the dense operator", "[game]") {
  Rng rng(22);
  CliffordFamily fam = clifford_family_for(6);
  Strategy s = random_strategy(6, 3, rng);
  CMatrix w = reference_W(fam, s);
  GameOperatorAction act(fam, s);
  CVector x = random_unit_vector(act.dim(), rng);
  CVector y;
  act.apply(x, y);
  CHECK((y - w * x).norm() < 1e-12);
  CHECK_THAT(act.expectation(x), WithinAbs(x.dot(w * x).real(), 1e-12));
}

TEST_CASE("norm agrees with power iteration", "[game][oracle]") {
  Rng rng(23);
  CliffordFamily fam = clifford_family_for(3);
  Strategy s = random_strategy(3, 2, rng);
  CMatrix w = reference_W(fam, s);
  SpectrumBounds b = w_spectrum(fam, s);
  CHECK_THAT(power_top(w, 3.0 * 3), WithinAbs(b.max, 1e-7));
  CHECK_THAT(-power_top(-w, 3.0 * 3), WithinAbs(b.min, 1e-7));
}

TEST_CASE("identity strategy reaches K + 2 sqrt K", "[game]") {
  for (int K = 2; K <= 9; ++K) {
    CliffordFamily fam = clifford_family_for(K);
    CHECK_THAT(w_norm(fam, identity_strategy(K)), WithinAbs(K + 2.0 * std::sqrt(K), 1e-9));
  }
}

TEST_CASE("gamma strategy norms", "[game]") {
  const double full[] = {4, 3, 6, 7, 8, 9, 10, 11};
  const double cross_sq[] = {2, 4, 6, 9, 12, 16, 20, 25};
  auto norms = gamma_strategy_norms(9);
  REQUIRE(norms.size() == 8);
  for (std::size_t i = 0; i < norms.size(); ++i) {
    CHECK(norms[i].K == static_cast<int>(i) + 2);
    CHECK_THAT(norms[i].full, WithinAbs(full[i], 1e-8));
    CHECK_THAT(norms[i].cross, WithinAbs(2.0 * std::sqrt(cross_sq[i]), 1e-8));
    CHECK_THAT(norms[i].commuting, WithinAbs(norms[i].K, 1e-8));
  }
}

TEST_CASE("low-rank strategies attain the conjectured value", "[game]") {
  for (int K = 2; K <= 7; ++K) {
    CliffordFamily fam = clifford_family_for(K);
    LowRankStrategy lr = low_rank_strategy(fam, 1, K + 1, 5);
    const double bound = K + 2.0 * std::sqrt(K);
    CHECK_THAT(w_norm(fam, lr.strategy), WithinAbs(bound, 1e-8));

    // Witness: every U_k acts as -1 on u_perp, so take phi = u_perp (x) u_perp
    // and alpha the bottom eigenvector of sum Gamma_k.
    std::vector<double> minus(static_cast<std::size_t>(K), -1.0);
    EigenPair a = top_eigenpair(HermitianMatrix(fam.linear_combination(minus)));
    CVector phi(lr.u_perp.size() * lr.u_perp.size());
    for (Index i = 0; i < lr.u_perp.size(); ++i) {
      for (Index j = 0; j < lr.u_perp.size(); ++j) phi(i * lr.u_perp.size() + j) = lr.u_perp(i) * lr.u_perp(j);
    }
    CHECK_THAT(product_state_value(fam, lr.strategy, a.vector, phi), WithinAbs(bound, 1e-8));
  }
  CHECK_THROWS_AS(low_rank_strategy(clifford_family_for(4), 1, 4, 1), DomainError);
}

TEST_CASE("winning probability conversions", "[game]") {
  CHECK_THAT(win_prob_from_norm(2, 2 + 2 * std::sqrt(2.0)), WithinAbs(0.8535533905932737, 1e-12));
  CHECK_THAT(win_prob_from_norm(5, 15), WithinAbs(1.0, 1e-15));
  CHECK_THAT(win_prob_from_norm(4, 8), WithinAbs(0.75, 1e-15));
  ConjectureBound c4 = conjecture_bound(4);
  CHECK_THAT(c4.norm_bound, WithinAbs(8.0, 1e-15));
  CHECK_THAT(c4.win_bound, WithinAbs(0.75, 1e-15));
  CHECK_THAT(conjecture_bound(17).win_bound, WithinAbs(0.6213, 5e-5));
  CHECK_THAT(conjecture_bound(1).norm_bound, WithinAbs(3.0, 1e-15));
  CHECK_THAT(conjecture_bound(1).win_bound, WithinAbs(1.0, 1e-15));
}

TEST_CASE("commuting strategies", "[game]") {
  CliffordFamily fam = clifford_family_for(5);
  const double bound = 5 + 2 * std::sqrt(5.0);
  Eigen::MatrixXi plus = Eigen::MatrixXi::Ones(5, 4);
  BoundCheck p = commuting_strategy_check(fam, plus);
  CHECK(p.pass);
  CHECK_THAT(p.value, WithinAbs(bound, 1e-9));
  BoundCheck m = commuting_strategy_check(fam, -plus);
  CHECK_THAT(m.value, WithinAbs(bound, 1e-9));
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    Eigen::MatrixXi signs(5, 4);
    for (Index r = 0; r < 5; ++r) {
      for (Index c = 0; c < 4; ++c) signs(r, c) = rng.uniform() < 0.5 ? -1 : 1;
    }
    CHECK(commuting_strategy_check(fam, signs).pass);
  }
}

TEST_CASE("product states", "[game]") {
  Rng rng(41);
  CliffordFamily fam = clifford_family_for(3);
  for (int t = 0; t < 20; ++t) {
    Strategy s = random_strategy(3, 2, rng);
    CVector a = random_unit_vector(fam.dim(), rng);
    CVector bc = random_unit_vector(4, rng);
    CHECK(product_state_value(fam, s, a, bc) <= 3 + 2 * std::sqrt(3.0) + 1e-12);
  }
  // At the identity strategy the value is K + 2 <a|sum Gamma|a>.
  std::vector<double> ones(3, 1.0);
  CMatrix sum = fam.linear_combination(ones);
  CVector a = random_unit_vector(fam.dim(), rng);
  CVector one = CVector::Ones(1);
  CHECK_THAT(product_state_value(fam, identity_strategy(3), a, one),
             WithinAbs(3 + 2 * a.dot(sum * a).real(), 1e-12));
  CHECK_THROWS_AS(product_state_value(fam, identity_strategy(3), 2.0 * a, one), DomainError);
}

TEST_CASE("spectral floor", "[game][property]") {
  Rng rng(51);
  for (int K = 2; K <= 6; ++K) {
    CliffordFamily fam = clifford_family_for(K);
    for (Index D : {2, 3, 4}) {
      for (int t = 0; t < 3; ++t) {
        SpectrumBounds b = w_spectrum(fam, random_strategy(K, D, rng));
        CHECK(b.min >= -K - 1e-9);
        CHECK(b.max <= K + 2 * std::sqrt(K) + 1e-9);
      }
    }
  }
}

TEST_CASE("exchanging Bob and Charlie preserves the spectrum", "[game][property]") {
  Rng rng(61);
  CliffordFamily fam = clifford_family_for(4);
  Strategy s = random_strategy(4, 3, rng);
  SpectrumBounds a = w_spectrum(fam, s), b = w_spectrum(fam, s.swapped());
  CHECK_THAT(a.max, WithinAbs(b.max, 1e-10));
  CHECK_THAT(a.min, WithinAbs(b.min, 1e-10));
  CHECK(random_strategy(4, 2, rng, true).is_symmetric());
}

TEST_CASE("strategy validation", "[game]") {
  CMatrix notunitary = 2.0 * CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(Strategy::symmetric({notunitary}), DomainError);
  CHECK_THROWS_AS(Strategy({CMatrix::Identity(2, 2)}, {}), DomainError);
  CHECK_THROWS_AS(Strategy({CMatrix::Identity(2, 2)}, {CMatrix::Identity(3, 3)}), DomainError);
  CHECK_THROWS_AS(build_W(clifford_family_for(3), identity_strategy(2)), DomainError);
}
