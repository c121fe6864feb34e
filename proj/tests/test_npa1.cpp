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
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "clue/errors.hpp"
#include "clue/game_operator.hpp"
#include "clue/npa1.hpp"

using namespace clue;
using Catch::Matchers::WithinAbs;

TEST_CASE("level-1 closed form against reference values", "[npa1]") {
  const std::pair<int, double> table[] = {{2, 0.8536},  {4, 0.7500},  {7, 0.6890},  {8, 0.6771},
                                          {12, 0.6542}, {16, 0.6451}, {17, 0.6436}, {18, 0.6424},
                                          {25, 0.6367}, {35, 0.6330}};
  for (auto [K, v] : table) {
    INFO("K = " << K);
    CHECK_THAT(npa1_value(K), WithinAbs(v, 5e-5));
  }
  CHECK_THROWS_AS(npa1_value(1), DomainError);
}

TEST_CASE("level-1 closed form is the conjecture for small K", "[npa1]") {
  for (int K = 2; K <= 7; ++K) CHECK_THAT(npa1_value(K), WithinAbs(conjecture_bound(K).win_bound, 1e-15));
  for (int K = 8; K <= 40; ++K) CHECK(npa1_value(K) > conjecture_bound(K).win_bound);
}

TEST_CASE("level-1 asymptote and monotonicity", "[npa1][property]") {
  CHECK(npa1_asymptote() == 0.625);
  CHECK(npa1_value(1000000) - 0.625 < 1e-5);
  CHECK(npa1_value(1000000) > 0.625);
  for (int K = 2; K < 100; ++K) CHECK(npa1_value(K + 1) < npa1_value(K));
}

TEST_CASE("optimal level-1 parameters", "[npa1]") {
  NPA1Certificate c4 = npa1_optimal_params(4);
  CHECK_THAT(c4.lambda, WithinAbs(2.0, 1e-12));
  CHECK_THAT(c4.bias, WithinAbs(8.0, 1e-12));
  CHECK_THAT(c4.win_prob, WithinAbs(0.75, 1e-12));
  CHECK_THAT(npa1_optimal_params(2).lambda, WithinAbs(1 + std::sqrt(2.0), 1e-12));
  CHECK_THAT(npa1_optimal_params(8).lambda, WithinAbs(4.0 / 3 + 3.0 / 8, 1e-12));
  for (int K = 2; K <= 30; ++K) {
    NPA1Certificate c = npa1_optimal_params(K);
    INFO("K = " << K);
    // The certificate is feasible and attains the closed form.
    CHECK(c.min_eig >= -1e-9);
    CHECK_THAT(c.win_prob, WithinAbs(npa1_value(K), 1e-12));
    SDProblem p = npa1_problem(K);
    RVector g(3);
    g << c.g1, c.g2, c.g3;
    CHECK_THAT(p.objective.dot(g), WithinAbs(c.bias, 1e-9));
    Eigen::SelfAdjointEigenSolver<RMatrix> es(p.evaluate(g));
    CHECK(es.eigenvalues()(0) >= -1e-9);
  }
}

TEST_CASE("level-1 SDP matches the closed form", "[npa1]") {
  for (int K = 2; K <= 12; ++K) {
    NPA1Result r = solve_npa1_sdp(K);
    INFO("K = " << K << " status " << to_string(r.solution.status));
    REQUIRE(r.solution.status == SDPStatus::optimal);
    CHECK_THAT(r.win_prob, WithinAbs(npa1_value(K), 1e-6));
  }
  NPA1Result k2 = solve_npa1_sdp(2);
  CHECK_THAT(k2.solution.objective_value, WithinAbs(2 + 2 * std::sqrt(2.0), 1e-6));
}

TEST_CASE("block eigenvalues", "[npa1][oracle]") {
  BlockSpectrum s = block_eigenvalues({1, 2}, {3, 4});
  CHECK(s.values == std::vector<double>{4, -2, 6, -2});

  BlockSpectrum z = block_eigenvalues({5, -1}, {0, 0});
  std::vector<double> zs = z.values;
  std::sort(zs.begin(), zs.end());
  CHECK(zs == std::vector<double>{-1, -1, 5, 5});

  Rng rng(4);
  const int n = 6;
  std::vector<double> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)] = rng.normal();
    b[static_cast<std::size_t>(i)] = rng.normal();
  }
  RMatrix m = RMatrix::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = m(n + i, n + i) = a[static_cast<std::size_t>(i)];
    m(i, n + i) = m(n + i, i) = b[static_cast<std::size_t>(i)];
  }
  BlockSpectrum r = block_eigenvalues(a, b);
  std::vector<double> got = r.values;
  std::sort(got.begin(), got.end());
  Eigen::SelfAdjointEigenSolver<RMatrix> es(m);
  for (int i = 0; i < 2 * n; ++i) CHECK_THAT(got[static_cast<std::size_t>(i)], WithinAbs(es.eigenvalues()(i), 1e-12));
  for (int j = 0; j < 2 * n; ++j) {
    CHECK((m * r.vectors.col(j) - r.values[static_cast<std::size_t>(j)] * r.vectors.col(j)).norm() < 1e-12);
  }
  CHECK_THROWS_AS(block_eigenvalues({1}, {1, 2}), DomainError);
}

TEST_CASE("bordered eigenvalues", "[npa1][oracle]") {
  std::vector<double> zero = bordered_eigenvalues({0.3, 2.0, -1.0}, 0.0);
  std::sort(zero.begin(), zero.end());
  CHECK_THAT(zero[0], WithinAbs(-1.0, 1e-15));
  CHECK_THAT(zero[1], WithinAbs(0.3, 1e-15));
  CHECK_THAT(zero[2], WithinAbs(1.0, 1e-15));
  CHECK_THAT(zero[3], WithinAbs(2.0, 1e-15));

  std::vector<double> two = bordered_eigenvalues({1.0}, 1.0);
  std::sort(two.begin(), two.end());
  CHECK_THAT(two[0], WithinAbs(0.0, 1e-15));
  CHECK_THAT(two[1], WithinAbs(2.0, 1e-15));

  // Random H with eigenvector v_1; the bordered matrix couples psi to v_1 only.
  Rng rng(9);
  const int n = 5;
  RMatrix g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) g(r, c) = rng.normal();
  }
  Eigen::HouseholderQR<RMatrix> qr(g);
  RMatrix q = qr.householderQ();
  std::vector<double> lambdas(n);
  for (double& l : lambdas) l = rng.normal();
  RMatrix h = q * Eigen::Map<RVector>(lambdas.data(), n).asDiagonal() * q.transpose();
  const double omega = 0.7;
  RMatrix m = RMatrix::Zero(n + 1, n + 1);
  m(0, 0) = 1.0;
  m.block(1, 1, n, n) = h;
  m.block(0, 1, 1, n) = omega * q.col(0).transpose();
  m.block(1, 0, n, 1) = omega * q.col(0);
  std::vector<double> got = bordered_eigenvalues(lambdas, omega);
  std::sort(got.begin(), got.end());
  Eigen::SelfAdjointEigenSolver<RMatrix> es(m);
  for (int i = 0; i <= n; ++i) CHECK_THAT(got[static_cast<std::size_t>(i)], WithinAbs(es.eigenvalues()(i), 1e-12));
}
