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

#include <vector>

#include "clue/sdp.hpp"

namespace clue {

/// Level-1 value: 1/2 + 1/(2 sqrt K) for K <= 7, else 5/8 + 1/(2(K-2)) - 1/(4K).
double npa1_value(int K);

/// Limit of npa1_value as K grows: 5/8.
double npa1_asymptote();

struct NPA1Certificate {
  int K = 0;
  double x = 0.0;
  double y = 0.0;
  double lambda = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
  double bias = 0.0;
  double win_prob = 0.0;
  /// Smallest eigenvalue of the level-1 pencil at (g1, g2, g3).
  double min_eig = 0.0;
};

/// Optimal (x, y = 0, lambda) and the Gram parameters they imply.
NPA1Certificate npa1_optimal_params(int K);

/**
 * The (1 + 2K)-dimensional level-1 pencil, index order (psi, u_1..u_K,
 * v_1..v_K). Variables: g1 (psi with u_i, v_i), g2 (u_i u_j and v_i v_j for
 * i != j), g3 (u_i with v_i). Objective 2K g1 + K g3.
 */
SDProblem npa1_problem(int K);

struct NPA1Result {
  double win_prob = 0.0;
  SDPSolution solution;
};

/// Solves npa1_problem(K); win_prob = 1/4 + objective / (4K).
NPA1Result solve_npa1_sdp(int K, const SDPOptions& opts = {});

/// Eigenvalues of [[A, B], [B, A]] for diagonal A, B, with eigenvectors.
struct BlockSpectrum {
  /// a_1 + b_1, a_1 - b_1, a_2 + b_2, ...
  std::vector<double> values;
  /// Column j is the eigenvector of values[j]: (e_i, +-e_i) / sqrt 2.
  RMatrix vectors;
};

BlockSpectrum block_eigenvalues(const std::vector<double>& a, const std::vector<double>& b);

/**
 * Eigenvalues of [[1, omega <v_1|], [omega |v_1>, H]] where H has eigenvalues
 * lambdas (lambdas[0] belonging to v_1): lambdas[1..] followed by
 * (1 + l1)/2 + r and (1 + l1)/2 - r, r = sqrt(((1 - l1)/2)^2 + omega^2).
 */
std::vector<double> bordered_eigenvalues(const std::vector<double>& lambdas, double omega);

}  // namespace clue
