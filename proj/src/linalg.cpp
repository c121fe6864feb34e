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

#include "clue/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "clue/errors.hpp"

namespace clue {

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> dense_solve(
    const CMatrix& m, bool vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalFailure("Hermitian eigensolver did not converge");
  }
  return es;
}

CVector default_start(Index n) {
  Rng rng(0x5eed, static_cast<std::uint64_t>(n));
  return random_unit_vector(n, rng);
}

LinearOperator dense_operator(const CMatrix& m, double sign) {
  return [&m, sign](const CVector& in, CVector& out) {
    out.noalias() = m * in;
    if (sign < 0) out = -out;
  };
}

}  // namespace

HermitianMatrix::HermitianMatrix(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    std::ostringstream os;
    os << "HermitianMatrix: matrix is " << m_.rows() << "x" << m_.cols();
    throw DomainError(os.str());
  }
  double defect = hermitian_defect(m_);
  if (defect > kTolerance) {
    std::ostringstream os;
    os << "HermitianMatrix: not Hermitian (defect " << defect << ")";
    throw DomainError(os.str());
  }
}

HermitianMatrix HermitianMatrix::identity(Index dim) {
  return HermitianMatrix(CMatrix::Identity(dim, dim));
}

double hermitian_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  double worst = 0.0;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = r; c < m.cols(); ++c) {
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    }
  }
  return worst;
}

bool is_hermitian_unitary(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (hermitian_defect(m) > HermitianMatrix::kTolerance) return false;
  CMatrix sq = m * m;
  sq.diagonal().array() -= 1.0;
  return sq.cwiseAbs().maxCoeff() <= tol;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

RVector eigenvalues(const HermitianMatrix& m) {
  return dense_solve(m.matrix(), false).eigenvalues();
}

SpectrumBounds extreme_eigenvalues(const HermitianMatrix& m) {
  const Index n = m.dim();
  if (n <= kDenseEigenLimit) {
    RVector ev = eigenvalues(m);
    return {ev(0), ev(n - 1)};
  }
  CVector start = default_start(n);
  double top = lanczos_top(dense_operator(m.matrix(), 1.0), n, start).value;
  double bottom = -lanczos_top(dense_operator(m.matrix(), -1.0), n, start).value;
  return {bottom, top};
}

double operator_norm(const HermitianMatrix& m) {
  SpectrumBounds b = extreme_eigenvalues(m);
  return std::max(std::abs(b.min), std::abs(b.max));
}

EigenPair top_eigenpair(const HermitianMatrix& m, const CVector* start) {
  const Index n = m.dim();
  if (n <= kDenseEigenLimit) {
    auto es = dense_solve(m.matrix(), true);
    return {es.eigenvalues()(n - 1), es.eigenvectors().col(n - 1)};
  }
  CVector s = start ? *start : default_start(n);
  return lanczos_top(dense_operator(m.matrix(), 1.0), n, s);
}

EigenPair lanczos_top(const LinearOperator& op, Index n, const CVector& start,
                      const LanczosOptions& opts) {
  if (start.size() != n) throw DomainError("lanczos_top: start has wrong size");
  double start_norm = start.norm();
  if (!(start_norm > 0.0)) throw DomainError("lanczos_top: zero start vector");

  const Index m = std::min<Index>(opts.krylov_dim, n);
  CVector x = start / start_norm;
  CVector w(n);
  Eigen::MatrixXcd basis(n, m + 1);
  RVector alpha(m), beta(m);

  for (int restart = 0; restart <= opts.max_restarts; ++restart) {
    basis.col(0) = x;
    Index steps = 0;
    for (Index j = 0; j < m; ++j) {
      op(basis.col(j), w);
      alpha(j) = basis.col(j).dot(w).real();
      // Two passes of classical Gram-Schmidt against the whole basis.
      for (int pass = 0; pass < 2; ++pass) {
        CVector h = basis.leftCols(j + 1).adjoint() * w;
        w.noalias() -= basis.leftCols(j + 1) * h;
      }
      beta(j) = w.norm();
      steps = j + 1;
      if (beta(j) <= 1e-14 * std::max(1.0, std::abs(alpha(j)))) break;
      if (j + 1 < m + 1) basis.col(j + 1) = w / beta(j);
    }

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(steps, steps);
    for (Index j = 0; j < steps; ++j) {
      t(j, j) = alpha(j);
      if (j + 1 < steps) t(j, j + 1) = t(j + 1, j) = beta(j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    if (es.info() != Eigen::Success) {
      throw NumericalFailure("lanczos_top: tridiagonal eigensolver failed");
    }
    Eigen::VectorXd y = es.eigenvectors().col(steps - 1);
    x = basis.leftCols(steps) * y.cast<cd>();
    x.normalize();

    op(x, w);
    double theta = x.dot(w).real();
    double residual = (w - theta * x).norm();
    if (residual <= opts.tol * std::max(1.0, std::abs(theta)) ||
        steps == n) {
      return {theta, x};
    }
  }
  throw NumericalFailure("lanczos_top: no convergence within restart budget");
}

CMatrix random_unitary(Index dim, Rng& rng) {
  Eigen::MatrixXcd g(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) g(r, c) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  for (Index c = 0; c < dim; ++c) {
    cd rcc = qr.matrixQR()(c, c);
    double a = std::abs(rcc);
    if (a > 0) q.col(c) *= rcc / a;
  }
  return q;
}

CMatrix random_hermitian_unitary(Index dim, Rng& rng, Index negatives) {
  if (negatives < 0) negatives = dim / 2;
  if (negatives > dim) throw DomainError("more negative eigenvalues than dim");
  CMatrix v = random_unitary(dim, rng);
  Eigen::VectorXd signs = Eigen::VectorXd::Ones(dim);
  signs.tail(negatives).setConstant(-1.0);
  CMatrix u = v * signs.cast<cd>().asDiagonal() * v.adjoint();
  // Exact Hermiticity; rounding leaves ~1e-16 asymmetry otherwise.
  CMatrix h = 0.5 * (u + u.adjoint());
  return h;
}

CVector random_unit_vector(Index n, Rng& rng) {
  CVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

}  // namespace clue
