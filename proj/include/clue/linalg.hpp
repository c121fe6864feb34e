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

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "clue/rng.hpp"

namespace clue {

using cd = std::complex<double>;
using Index = Eigen::Index;

/**
 * Dense complex matrices are row-major.
 *
 * Tensor products follow the Kronecker convention, so a basis vector
 * |a, b, c> of C^d (x) C^D (x) C^D sits at flat index (a * D + b) * D + c,
 * the last factor varying fastest. Every module relies on this layout.
 */
using CMatrix =
    Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/** A dense Hermitian matrix; construction checks Hermiticity. */
class HermitianMatrix {
 public:
  /// Absolute tolerance on |m_ij - conj(m_ji)|.
  static constexpr double kTolerance = 1e-12;

  /** @throws DomainError if @p m is not square or not Hermitian. */
  explicit HermitianMatrix(CMatrix m);

  static HermitianMatrix identity(Index dim);

  [[nodiscard]] Index dim() const { return m_.rows(); }
  [[nodiscard]] const CMatrix& matrix() const { return m_; }
  [[nodiscard]] cd operator()(Index r, Index c) const { return m_(r, c); }

  [[nodiscard]] cd trace() const { return m_.trace(); }

 private:
  CMatrix m_;
};

/// Largest |m_ij - conj(m_ji)|.
double hermitian_defect(const CMatrix& m);

/// True when m = m* within 1e-12 and m^2 = I within @p tol.
bool is_hermitian_unitary(const CMatrix& m, double tol = 1e-10);

/// Kronecker product a (x) b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

struct EigenPair {
  double value = 0.0;
  CVector vector;
};

struct SpectrumBounds {
  double min = 0.0;
  double max = 0.0;
};

/// Matrices up to this dimension are diagonalized densely; larger ones go
/// through restarted Lanczos.
inline constexpr Index kDenseEigenLimit = 1024;

/// All eigenvalues, ascending. Dense solver only.
RVector eigenvalues(const HermitianMatrix& m);

/// Smallest and largest eigenvalues.
SpectrumBounds extreme_eigenvalues(const HermitianMatrix& m);

/**
 * Largest |lambda_i(m)|.
 * @throws NumericalFailure if the eigensolver does not converge.
 */
double operator_norm(const HermitianMatrix& m);

/**
 * Eigenvector for the largest eigenvalue. If @p start is given and the
 * problem is large enough for Lanczos, the Krylov space is seeded with it, so
 * the returned value is never below start's Rayleigh quotient.
 */
EigenPair top_eigenpair(const HermitianMatrix& m,
                        const CVector* start = nullptr);

using LinearOperator = std::function<void(const CVector& in, CVector& out)>;

struct LanczosOptions {
  int krylov_dim = 64;
  int max_restarts = 400;
  /// Converged when ||A x - theta x|| <= tol * max(1, |theta|).
  double tol = 1e-12;
};

/**
 * Largest eigenpair of a Hermitian operator by explicitly restarted Lanczos
 * with full reorthogonalization. Each restart begins from the current Ritz
 * vector, so the Ritz value is non-decreasing and at least the Rayleigh
 * quotient of @p start.
 *
 * @throws NumericalFailure after max_restarts without convergence.
 */
EigenPair lanczos_top(const LinearOperator& op, Index n, const CVector& start,
                      const LanczosOptions& opts = {});

/// Haar-random unitary (QR of a complex Gaussian with phase fix).
CMatrix random_unitary(Index dim, Rng& rng);

/**
 * V diag(+1,...,+1,-1,...,-1) V* with Haar V and @p negatives minus signs.
 * negatives < 0 selects floor(dim / 2).
 */
CMatrix random_hermitian_unitary(Index dim, Rng& rng, Index negatives = -1);

/// Uniform on the unit sphere of C^n.
CVector random_unit_vector(Index n, Rng& rng);

}  // namespace clue
