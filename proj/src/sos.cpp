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

#include "clue/sos.hpp"

#include <cmath>

#include "clue/errors.hpp"

namespace clue {

namespace {

// Operators of the scenario algebra on C^d (x) C^D (x) C^D.
struct Representation {
  std::vector<CMatrix> gamma;  // Gamma_k (x) I (x) I
  std::vector<CMatrix> b;      // I (x) B_k (x) I
  std::vector<CMatrix> c;      // I (x) I (x) C_k
  Index dim = 0;
};

Representation represent(const CliffordFamily& family, const Strategy& strat) {
  if (strat.K() != family.K()) throw DomainError("strategy and family sizes differ");
  const Index d = family.dim();
  const Index D = strat.D();
  const CMatrix id_d = CMatrix::Identity(d, d);
  const CMatrix id_D = CMatrix::Identity(D, D);
  const CMatrix id_DD = CMatrix::Identity(D * D, D * D);
  Representation r;
  r.dim = d * D * D;
  for (int k = 0; k < family.K(); ++k) {
    const auto sk = static_cast<std::size_t>(k);
    r.gamma.push_back(kron(family.dense()[sk], id_DD));
    r.b.push_back(kron(id_d, kron(strat.B()[sk], id_D)));
    r.c.push_back(kron(id_d, kron(id_D, strat.C()[sk])));
  }
  return r;
}

double min_eig(const CMatrix& m) {
  CMatrix h = 0.5 * (m + m.adjoint());
  return extreme_eigenvalues(HermitianMatrix(std::move(h))).min;
}

}  // namespace

double alpha_coefficient(int K) {
  if (K < 2) throw DomainError("alpha_coefficient needs K >= 2");
  const double k = K;
  return ((3.0 * k - 2.0) * std::sqrt(k) - k * k) / (2.0 * k * (k - 1.0));
}

double leading_coefficient(int K) {
  if (K < 2) throw DomainError("leading_coefficient needs K >= 2");
  const double k = K;
  return (k - std::sqrt(k)) / (2.0 * k * (k - 1.0));
}

SoSCertificate family_certificate(int K) {
  SoSCertificate c;
  c.K = K;
  c.alpha = alpha_coefficient(K);
  c.leading = leading_coefficient(K);
  for (int i = 1; i <= K; ++i) {
    c.terms.push_back("(Q + (sqrt K + 1) Gamma_" + std::to_string(i) + " (x) (c_" +
                      std::to_string(i) + " - b_" + std::to_string(i) + "))^2");
  }
  c.terms.push_back("alpha Q^2, Q = sqrt K I - sum_j Gamma_j (x) c_j");
  return c;
}

HermitianMatrix evaluate_P(const CliffordFamily& family, const Strategy& strat) {
  GameOperator w = build_W(family, strat);
  CMatrix p = -w.matrix.matrix();
  p.diagonal().array() += conjecture_bound(family.K()).norm_bound;
  return HermitianMatrix(std::move(p));
}

CertificateCheck verify_family_certificate(const CliffordFamily& family, const Strategy& strat,
                                           double tol) {
  const int K = family.K();
  const double rk = std::sqrt(static_cast<double>(K));
  Representation r = represent(family, strat);
  const CMatrix id = CMatrix::Identity(r.dim, r.dim);

  CMatrix q = rk * id;
  for (int j = 0; j < K; ++j) q -= r.gamma[static_cast<std::size_t>(j)] * r.c[static_cast<std::size_t>(j)];

  CertificateCheck out;
  out.min_square_eig = INFINITY;
  CMatrix rhs = CMatrix::Zero(r.dim, r.dim);
  const double lead = leading_coefficient(K);
  for (int i = 0; i < K; ++i) {
    const auto si = static_cast<std::size_t>(i);
    CMatrix h = q + (rk + 1.0) * r.gamma[si] * (r.c[si] - r.b[si]);
    CMatrix sq = h.adjoint() * h;
    out.min_square_eig = std::min(out.min_square_eig, min_eig(sq));
    rhs += lead * sq;
  }
  CMatrix q2 = q.adjoint() * q;
  out.min_square_eig = std::min(out.min_square_eig, min_eig(q2));
  rhs += alpha_coefficient(K) * q2;

  HermitianMatrix lhs = evaluate_P(family, strat);
  out.residual = (lhs.matrix() - rhs).norm() / lhs.matrix().norm();
  out.min_eig_P = extreme_eigenvalues(lhs).min;
  out.pass = out.residual <= tol;
  return out;
}

CliffordFamily xz_family() {
  return CliffordFamily(1, {PauliString::parse("X"), PauliString::parse("Z")});
}

CertificateCheck verify_bc23_certificate(const Strategy& strat, double tol) {
  if (strat.K() != 2) throw DomainError("the K = 2 certificate needs a two-key strategy");
  CliffordFamily family = xz_family();
  Representation r = represent(family, strat);
  const CMatrix id = CMatrix::Identity(r.dim, r.dim);
  const double s2 = std::sqrt(2.0);
  const CMatrix& x = r.gamma[0];
  const CMatrix& z = r.gamma[1];

  const CMatrix h1 = x * r.b[0] + z * r.c[1] - s2 * id;
  const CMatrix h2 = x * r.c[0] + z * r.b[1] - s2 * id;
  const CMatrix h3 = r.b[0] - r.c[0];
  const CMatrix h4 = r.b[1] - r.c[1];
  CertificateCheck out;
  out.min_square_eig = INFINITY;
  CMatrix rhs = CMatrix::Zero(r.dim, r.dim);
  const std::pair<const CMatrix*, double> terms[] = {
      {&h1, 1.0 / (2.0 * s2)}, {&h2, 1.0 / (2.0 * s2)}, {&h3, 0.5}, {&h4, 0.5}};
  for (const auto& [h, coeff] : terms) {
    CMatrix sq = h->adjoint() * *h;
    out.min_square_eig = std::min(out.min_square_eig, min_eig(sq));
    rhs += coeff * sq;
  }
  HermitianMatrix lhs = evaluate_P(family, strat);
  out.residual = (lhs.matrix() - rhs).norm() / lhs.matrix().norm();
  out.min_eig_P = extreme_eigenvalues(lhs).min;
  out.pass = out.residual <= tol;
  return out;
}

}  // namespace clue
