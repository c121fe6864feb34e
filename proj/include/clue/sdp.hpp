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

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace clue {

using Index = Eigen::Index;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/** One stored entry of a symmetric matrix; row <= col. */
struct SymEntry {
  Index row = 0;
  Index col = 0;
  double value = 0.0;
};

/**
 * Sparse real symmetric matrix stored as its upper triangle.
 * Adding to an existing position accumulates.
 */
class SymmetricSparse {
 public:
  explicit SymmetricSparse(Index dim = 0) : dim_(dim) {}

  static SymmetricSparse identity(Index dim);

  /// Sets entries (r, c) and (c, r) to m(r, c) + v.
  void add(Index r, Index c, double v);

  [[nodiscard]] Index dim() const { return dim_; }
  [[nodiscard]] const std::vector<SymEntry>& entries() const { return entries_; }
  [[nodiscard]] bool empty() const { return entries_.empty(); }

  [[nodiscard]] RMatrix to_dense() const;
  /// sum_{p,q} F(p, q) Y(p, q) over the full (symmetric) pattern of F.
  [[nodiscard]] double inner(const RMatrix& y) const;
  /// out += alpha * F.
  void add_to(RMatrix& out, double alpha) const;
  [[nodiscard]] double frobenius_norm() const;

  /// Merges duplicates and drops explicit zeros; entries end up sorted.
  void compress();

 private:
  Index dim_;
  std::vector<SymEntry> entries_;
};

/**
 * maximize c.g subject to F_0 + sum_i g_i F_i >= 0 (one PSD block).
 */
struct SDProblem {
  RVector objective;
  SymmetricSparse base;
  std::vector<SymmetricSparse> pencil;

  [[nodiscard]] Index n_vars() const { return objective.size(); }
  [[nodiscard]] Index block_dim() const { return base.dim(); }

  /// F_0 + sum_i g_i F_i, dense.
  [[nodiscard]] RMatrix evaluate(const RVector& g) const;

  /** @throws DomainError on inconsistent sizes or non-finite data. */
  void validate() const;
};

enum class SDPStatus { optimal, infeasible, numerical_failure };

const char* to_string(SDPStatus s);

struct SDPSolution {
  SDPStatus status = SDPStatus::numerical_failure;
  RVector g;
  double objective_value = 0.0;
  /// <F_0, X> for the dual iterate: an upper bound once X is feasible.
  double dual_bound = 0.0;
  /// lambda_min(F_0 + sum g_i F_i) at the returned g.
  double min_eig_residual = 0.0;
  int iterations = 0;
  std::string message;
};

struct SDPOptions {
  double feasibility_tol = 1e-8;
  double gap_tol = 1e-8;
  int max_iters = 100;
  /// Per-iteration progress lines on stderr.
  bool verbose = false;
};

class SDPSolver {
 public:
  virtual ~SDPSolver() = default;
  [[nodiscard]] virtual SDPSolution solve(const SDProblem& p, const SDPOptions& opts) const = 0;
  [[nodiscard]] virtual std::string name() const = 0;
};

/**
 * Infeasible primal-dual interior-point method, HKM search direction with
 * Mehrotra predictor-corrector. The dual problem is
 * min <F_0, X> s.t. <F_i, X> = -c_i, X >= 0.
 */
class InteriorPointSolver final : public SDPSolver {
 public:
  [[nodiscard]] SDPSolution solve(const SDProblem& p, const SDPOptions& opts) const override;
  [[nodiscard]] std::string name() const override { return "clue-ipm"; }
};

/// The backend used by the NPA modules.
const SDPSolver& default_sdp_solver();

SDPSolution solve(const SDProblem& p, const SDPOptions& opts = {});

/// Smallest eigenvalue of a real symmetric matrix (dense solver).
double min_eigenvalue(const RMatrix& m);

/**
 * Plain-text pencil format:
 *
 *   # comment lines start with '#'
 *   <n_vars> <block_dim>
 *   <c_1> ... <c_n>
 *   <matrix-index> <row> <col> <value>     (one line per stored entry)
 *
 * matrix-index 0 is F_0; rows and columns are 1-based with row <= col.
 */
void write_pencil(std::ostream& os, const SDProblem& p);
SDProblem read_pencil(std::istream& is);

}  // namespace clue
