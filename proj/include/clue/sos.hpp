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

#include <string>
#include <vector>

#include "clue/game_operator.hpp"

namespace clue {

/// ((3K - 2) sqrt K - K^2) / (2K(K - 1)); nonnegative exactly for K <= 7.
double alpha_coefficient(int K);

/// (K - sqrt K) / (2K(K - 1)).
double leading_coefficient(int K);

/**
 * P_K = leading * sum_i (Q + (sqrt K + 1) Gamma_i (x) (c_i - b_i))^2
 *       + alpha * Q^2,   Q = sqrt K I - sum_j Gamma_j (x) c_j.
 */
struct SoSCertificate {
  int K = 0;
  double alpha = 0.0;
  double leading = 0.0;
  std::vector<std::string> terms;

  /// True when every coefficient is nonnegative, so P_K >= 0 follows.
  [[nodiscard]] bool proves_positivity() const { return alpha >= 0.0 && leading >= 0.0; }
};

/** @throws DomainError if K < 2. */
SoSCertificate family_certificate(int K);

/// (K + 2 sqrt K) I - W.
HermitianMatrix evaluate_P(const CliffordFamily& family, const Strategy& strat);

struct CertificateCheck {
  /// ||LHS - RHS||_F / ||LHS||_F.
  double residual = 0.0;
  /// Smallest eigenvalue over the individual squared factors.
  double min_square_eig = 0.0;
  double min_eig_P = 0.0;
  bool pass = false;
};

/**
 * Both sides of the family identity with b_i -> I (x) B_i (x) I,
 * c_i -> I (x) I (x) C_i and Gamma_i on the first factor.
 * pass means residual <= tol.
 */
CertificateCheck verify_family_certificate(const CliffordFamily& family, const Strategy& strat,
                                           double tol = 1e-9);

/// The K = 2 family with Gamma_1 = X, Gamma_2 = Z.
CliffordFamily xz_family();

/**
 * P_2 = 1/(2 sqrt 2) (X b_1 + Z c_2 - sqrt 2)^2 + 1/(2 sqrt 2) (X c_1 + Z b_2 - sqrt 2)^2
 *       + (b_1 - c_1)^2 / 2 + (b_2 - c_2)^2 / 2, checked with Gamma = (X, Z).
 */
CertificateCheck verify_bc23_certificate(const Strategy& strat, double tol = 1e-9);

}  // namespace clue
