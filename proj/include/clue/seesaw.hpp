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
#include <iosfwd>
#include <vector>

#include "clue/game_operator.hpp"

namespace clue {

/**
 * Alternating maximization of <z|W|z> over the state z and the two families
 * of Hermitian unitaries. Every step is an exact block maximization, so the
 * objective trace is non-decreasing.
 */
struct SeesawConfig {
  int K = 3;
  /// 0 selects min_lambda_for(K).
  int lambda = 0;
  Index D = 2;
  /// Rounds of (z, B, C) updates.
  int iterations = 10;
  int instances = 100;
  std::uint64_t seed = 1;
  /// Refuse problems with d * D^2 above this.
  Index max_dim = 4096;
  /// Worker threads; 0 selects the hardware concurrency.
  int threads = 0;
};

struct SeesawState {
  CVector z;
  std::vector<CMatrix> B;
  std::vector<CMatrix> C;
  /// Objective after every step, 3 entries per round.
  std::vector<double> trace;
};

/**
 * Random start: z uniform on the sphere, B_k and C_k random Hermitian
 * unitaries. Instance i draws from its own stream of cfg.seed.
 * @throws DomainError / UnsatisfiableRequest on a bad configuration.
 */
SeesawState init_state(const CliffordFamily& family, const SeesawConfig& cfg, int instance);

/// z <- top eigenvector of W(B, C). Appends lambda_max.
void step_z(const CliffordFamily& family, SeesawState& state);

/// B_k <- sign(X_k) with X_k the partial contraction of z against
/// Gamma_k (x) I + I (x) C_k; sign(0) = +1. Appends <z|W|z>.
void step_B(const CliffordFamily& family, SeesawState& state);

/// Mirror of step_B for Charlie.
void step_C(const CliffordFamily& family, SeesawState& state);

/// Hermitian sign of a Hermitian matrix; eigenvalues within a relative
/// 1e-12 of zero map to +1.
CMatrix hermitian_sign(const CMatrix& x);

struct SeesawInstance {
  int instance = 0;
  std::vector<double> trace;
  double final_objective = 0.0;
  /// log(final / (K + 2 sqrt K)).
  double log_relative_error = 0.0;
  /// Largest drop between consecutive trace entries (0 if monotone).
  double max_decrease = 0.0;
};

struct SeesawSummary {
  int K = 0;
  Index D = 0;
  double bound = 0.0;
  double best_objective = 0.0;
  double best_log_relative_error = 0.0;
  double worst_decrease = 0.0;
  /// Instances whose objective exceeded K + 2 sqrt K + 1e-9.
  int bound_violations = 0;
  std::vector<SeesawInstance> instances;
};

/**
 * All instances of one configuration, run concurrently. Results are ordered
 * by instance and do not depend on the thread count.
 * @throws UnsatisfiableRequest if d * D^2 > cfg.max_dim.
 */
SeesawSummary run_seesaw(const SeesawConfig& cfg);

/// Header "K,D,instance,step_index,objective,log_relative_error".
void write_seesaw_csv_header(std::ostream& os);
void write_seesaw_csv(std::ostream& os, const SeesawSummary& summary);

}  // namespace clue
