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

#include "clue/npa1.hpp"

#include <cmath>

#include "clue/errors.hpp"

namespace clue {

namespace {

void require_k(int K) {
  if (K < 2) throw DomainError("level-1 formulas need K >= 2, got " + std::to_string(K));
}

}  // namespace

double npa1_value(int K) {
  require_k(K);
  const double k = K;
  if (K <= 7) return 0.5 + 0.5 / std::sqrt(k);
  return 0.625 + 0.5 / (k - 2.0) - 0.25 / k;
}

double npa1_asymptote() { return 0.625; }

NPA1Certificate npa1_optimal_params(int K) {
  require_k(K);
  const double k = K;
  NPA1Certificate c;
  c.K = K;
  c.y = 0.0;
  c.x = K <= 7 ? 2.0 : 2.0 * k / (k - 2.0) - (k - 2.0) / k;
  c.lambda = c.x / 2.0 + std::sqrt(2.0 - c.x * (k - 2.0) / k);
  c.g1 = c.lambda / 2.0 - c.x / 4.0;
  c.g2 = 1.0 - c.x / 2.0;
  c.g3 = c.x / 2.0;
  c.bias = k * c.lambda;
  c.win_prob = 0.25 + c.bias / (4.0 * k);
  RVector g(3);
  g << c.g1, c.g2, c.g3;
  c.min_eig = min_eigenvalue(npa1_problem(K).evaluate(g));
  return c;
}

SDProblem npa1_problem(int K) {
  require_k(K);
  const Index n = 1 + 2 * static_cast<Index>(K);
  auto u = [](Index i) { return 1 + i; };
  auto v = [K](Index i) { return 1 + K + i; };
  SDProblem p;
  p.objective = RVector(3);
  p.objective << 2.0 * K, 0.0, static_cast<double>(K);
  p.base = SymmetricSparse::identity(n);
  p.pencil.assign(3, SymmetricSparse(n));
  for (Index i = 0; i < K; ++i) {
    p.pencil[0].add(0, u(i), 1.0);
    p.pencil[0].add(0, v(i), 1.0);
    p.pencil[2].add(u(i), v(i), 1.0);
    for (Index j = i + 1; j < K; ++j) {
      p.pencil[1].add(u(i), u(j), 1.0);
      p.pencil[1].add(v(i), v(j), 1.0);
    }
  }
  return p;
}

NPA1Result solve_npa1_sdp(int K, const SDPOptions& opts) {
  NPA1Result r;
  r.solution = solve(npa1_problem(K), opts);
  r.win_prob = 0.25 + r.solution.objective_value / (4.0 * K);
  return r;
}

BlockSpectrum block_eigenvalues(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw DomainError("block_eigenvalues: A and B differ in size");
  const Index n = static_cast<Index>(a.size());
  BlockSpectrum out;
  out.vectors = RMatrix::Zero(2 * n, 2 * n);
  const double h = 1.0 / std::sqrt(2.0);
  for (Index i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    out.values.push_back(a[si] + b[si]);
    out.values.push_back(a[si] - b[si]);
    out.vectors(i, 2 * i) = h;
    out.vectors(n + i, 2 * i) = h;
    out.vectors(i, 2 * i + 1) = h;
    out.vectors(n + i, 2 * i + 1) = -h;
  }
  return out;
}

std::vector<double> bordered_eigenvalues(const std::vector<double>& lambdas, double omega) {
  if (lambdas.empty()) throw DomainError("bordered_eigenvalues: empty spectrum");
  std::vector<double> out(lambdas.begin() + 1, lambdas.end());
  const double l1 = lambdas.front();
  const double r = std::hypot((1.0 - l1) / 2.0, omega);
  out.push_back((1.0 + l1) / 2.0 + r);
  out.push_back((1.0 + l1) / 2.0 - r);
  return out;
}

}  // namespace clue
