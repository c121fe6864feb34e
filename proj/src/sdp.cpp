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

#include "clue/sdp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "clue/errors.hpp"
#include "clue/linalg.hpp"

namespace clue {

namespace {

using Dense = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// out = F * a, using contiguous row updates.
void left_multiply(const SymmetricSparse& f, const Dense& a, Dense& out) {
  out.setZero(a.rows(), a.cols());
  for (const SymEntry& e : f.entries()) {
    out.row(e.row).noalias() += e.value * a.row(e.col);
    if (e.row != e.col) out.row(e.col).noalias() += e.value * a.row(e.row);
  }
}

double inner(const SymmetricSparse& f, const Dense& y) {
  double s = 0.0;
  for (const SymEntry& e : f.entries()) {
    s += e.value * (e.row == e.col ? y(e.row, e.col) : y(e.row, e.col) + y(e.col, e.row));
  }
  return s;
}

double frob_dot(const Dense& a, const Dense& b) {
  return Eigen::Map<const Eigen::VectorXd>(a.data(), a.size())
      .dot(Eigen::Map<const Eigen::VectorXd>(b.data(), b.size()));
}

void symmetrize(Dense& m) {
  Dense t = m.transpose();
  m = 0.5 * (m + t);
}

bool is_positive_definite(const Dense& m) {
  Eigen::LLT<Dense> llt(m);
  return llt.info() == Eigen::Success;
}

// Smallest eigenvalue; Lanczos for large matrices. The estimate may sit
// slightly above the true value, which safe_step absorbs by backtracking.
double min_eig_estimate(const Dense& u) {
  const Index n = u.rows();
  if (n <= 300) return clue::min_eigenvalue(RMatrix(u));
  LinearOperator neg = [&u](const CVector& in, CVector& out) {
    out.resize(in.size());
    out.real() = -(u * in.real());
    out.imag() = -(u * in.imag());
  };
  Rng rng(0x1e5, static_cast<std::uint64_t>(n));
  try {
    return -lanczos_top(neg, n, random_unit_vector(n, rng), {48, 30, 1e-9}).value;
  } catch (const NumericalFailure&) {
    return clue::min_eigenvalue(RMatrix(u));
  }
}

// Largest alpha in (0, inf] with x + alpha dx >= 0, for x positive definite.
double max_step(const Dense& x, const Dense& dx) {
  Eigen::LLT<Dense> llt(x);
  if (llt.info() != Eigen::Success) return 0.0;
  // L^{-1} dx L^{-T}
  Dense t = llt.matrixL().solve(dx);
  Dense u = llt.matrixL().solve(t.transpose());
  symmetrize(u);
  double lo = min_eig_estimate(u);
  return lo >= 0.0 ? std::numeric_limits<double>::infinity() : -1.0 / lo;
}

// Step of length min(1, tau * alpha_max), shortened until x + alpha dx is
// numerically positive definite.
double safe_step(const Dense& x, const Dense& dx, double tau) {
  double alpha = std::min(1.0, tau * max_step(x, dx));
  for (int tries = 0; tries < 60 && alpha > 0.0; ++tries) {
    if (is_positive_definite(x + alpha * dx)) return alpha;
    alpha *= 0.8;
  }
  return 0.0;
}

}  // namespace

SymmetricSparse SymmetricSparse::identity(Index dim) {
  SymmetricSparse s(dim);
  for (Index i = 0; i < dim; ++i) s.add(i, i, 1.0);
  return s;
}

void SymmetricSparse::add(Index r, Index c, double v) {
  if (r < 0 || c < 0 || r >= dim_ || c >= dim_) {
    throw DomainError("SymmetricSparse::add: index out of range");
  }
  if (r > c) std::swap(r, c);
  entries_.push_back({r, c, v});
}

void SymmetricSparse::compress() {
  std::sort(entries_.begin(), entries_.end(), [](const SymEntry& a, const SymEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<SymEntry> merged;
  for (const SymEntry& e : entries_) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
      merged.back().value += e.value;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const SymEntry& e) { return e.value == 0.0; });
  entries_ = std::move(merged);
}

RMatrix SymmetricSparse::to_dense() const {
  RMatrix m = RMatrix::Zero(dim_, dim_);
  add_to(m, 1.0);
  return m;
}

double SymmetricSparse::inner(const RMatrix& y) const {
  double s = 0.0;
  for (const SymEntry& e : entries_) {
    s += e.value * (e.row == e.col ? y(e.row, e.col) : y(e.row, e.col) + y(e.col, e.row));
  }
  return s;
}

void SymmetricSparse::add_to(RMatrix& out, double alpha) const {
  for (const SymEntry& e : entries_) {
    out(e.row, e.col) += alpha * e.value;
    if (e.row != e.col) out(e.col, e.row) += alpha * e.value;
  }
}

double SymmetricSparse::frobenius_norm() const {
  double s = 0.0;
  for (const SymEntry& e : entries_) s += (e.row == e.col ? 1.0 : 2.0) * e.value * e.value;
  return std::sqrt(s);
}

RMatrix SDProblem::evaluate(const RVector& g) const {
  if (g.size() != n_vars()) throw DomainError("SDProblem::evaluate: wrong number of variables");
  RMatrix m = base.to_dense();
  for (Index i = 0; i < n_vars(); ++i) pencil[static_cast<std::size_t>(i)].add_to(m, g(i));
  return m;
}

void SDProblem::validate() const {
  if (block_dim() < 1) throw DomainError("SDProblem: pencil dimension must be >= 1");
  if (static_cast<Index>(pencil.size()) != n_vars()) {
    throw DomainError("SDProblem: one pencil matrix per variable required");
  }
  if (!objective.allFinite()) throw DomainError("SDProblem: objective is not finite");
  auto check = [&](const SymmetricSparse& f) {
    if (f.dim() != block_dim()) throw DomainError("SDProblem: pencil matrices differ in size");
    for (const SymEntry& e : f.entries()) {
      if (!std::isfinite(e.value)) throw DomainError("SDProblem: non-finite pencil entry");
    }
  };
  check(base);
  for (const auto& f : pencil) check(f);
}

const char* to_string(SDPStatus s) {
  switch (s) {
    case SDPStatus::optimal: return "optimal";
    case SDPStatus::infeasible: return "infeasible";
    case SDPStatus::numerical_failure: return "numerical-failure";
  }
  return "?";
}

double min_eigenvalue(const RMatrix& m) {
  Eigen::SelfAdjointEigenSolver<RMatrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalFailure("symmetric eigensolver failed");
  return es.eigenvalues()(0);
}

SDPSolution InteriorPointSolver::solve(const SDProblem& p, const SDPOptions& opts) const {
  p.validate();
  const Index n = p.block_dim();
  const Index m_all = p.n_vars();

  SDPSolution sol;
  sol.g = RVector::Zero(m_all);
  auto finish = [&](SDPStatus status, std::string message) {
    sol.status = status;
    sol.message = std::move(message);
    sol.objective_value = p.objective.dot(sol.g);
    sol.min_eig_residual = clue::min_eigenvalue(p.evaluate(sol.g));
    return sol;
  };

  // Variables without a pencil matrix do not affect feasibility.
  std::vector<Index> active;
  for (Index i = 0; i < m_all; ++i) {
    if (!p.pencil[static_cast<std::size_t>(i)].empty()) {
      active.push_back(i);
    } else if (p.objective(i) != 0.0) {
      return finish(SDPStatus::numerical_failure,
                    "objective unbounded: variable " + std::to_string(i + 1) +
                        " has no pencil matrix");
    }
  }
  const Index m = static_cast<Index>(active.size());
  if (m == 0) {
    bool ok = clue::min_eigenvalue(p.base.to_dense()) >= -opts.feasibility_tol;
    return finish(ok ? SDPStatus::optimal : SDPStatus::infeasible,
                  ok ? "no free variables; base matrix is PSD" : "base matrix is not PSD");
  }

  std::vector<const SymmetricSparse*> f(static_cast<std::size_t>(m));
  RVector c(m);
  for (Index i = 0; i < m; ++i) {
    f[static_cast<std::size_t>(i)] = &p.pencil[static_cast<std::size_t>(active[static_cast<std::size_t>(i)])];
    c(i) = p.objective(active[static_cast<std::size_t>(i)]);
  }
  const Dense f0 = p.base.to_dense();

  // Starting point after Helmberg-Rendl-Vanderbei-Wolkowicz / CSDP.
  double xi = 0.0, eta = p.base.frobenius_norm();
  for (Index i = 0; i < m; ++i) {
    double fn = f[static_cast<std::size_t>(i)]->frobenius_norm();
    xi = std::max(xi, static_cast<double>(n) * (1.0 + std::abs(c(i))) / (1.0 + fn));
    eta = std::max(eta, fn);
  }
  eta = (1.0 + eta) / std::sqrt(static_cast<double>(n));
  Dense x = 10.0 * xi * Dense::Identity(n, n);
  Dense s = 10.0 * eta * Dense::Identity(n, n);
  RVector g = RVector::Zero(m);

  auto pencil_at = [&](const RVector& gv) {
    Dense out = f0;
    for (Index i = 0; i < m; ++i) {
      for (const SymEntry& e : f[static_cast<std::size_t>(i)]->entries()) {
        out(e.row, e.col) += gv(i) * e.value;
        if (e.row != e.col) out(e.col, e.row) += gv(i) * e.value;
      }
    }
    return out;
  };
  auto combine = [&](const RVector& dg) {
    Dense out = Dense::Zero(n, n);
    for (Index i = 0; i < m; ++i) {
      for (const SymEntry& e : f[static_cast<std::size_t>(i)]->entries()) {
        out(e.row, e.col) += dg(i) * e.value;
        if (e.row != e.col) out(e.col, e.row) += dg(i) * e.value;
      }
    }
    return out;
  };
  auto export_g = [&](const RVector& gv) {
    sol.g.setZero();
    for (Index i = 0; i < m; ++i) sol.g(active[static_cast<std::size_t>(i)]) = gv(i);
  };

  const double c_norm = c.norm();
  const double f0_norm = p.base.frobenius_norm();
  constexpr double kTau = 0.95;

  std::vector<Dense> a(static_cast<std::size_t>(m));
  Dense tmp, b;
  for (int iter = 0; iter < opts.max_iters; ++iter) {
    sol.iterations = iter;
    RVector rp(m);
    for (Index i = 0; i < m; ++i) rp(i) = -c(i) - inner(*f[static_cast<std::size_t>(i)], x);
    Dense rd = pencil_at(g) - s;

    const double pobj = inner(p.base, x);
    const double dobj = c.dot(g);
    const double gap = frob_dot(x, s);
    const double mu = gap / static_cast<double>(n);
    const double p_inf = rp.norm() / (1.0 + c_norm);
    const double d_inf = rd.norm();
    const double rel_gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    if (opts.verbose) {
      std::fprintf(stderr, "ipm %3d  obj %.10f  bound %.10f  pinf %.2e  dinf %.2e  gap %.2e\n",
                   iter, dobj, pobj, p_inf, d_inf, rel_gap);
    }
    export_g(g);
    sol.dual_bound = pobj;
    if (p_inf <= opts.feasibility_tol && d_inf <= 0.1 * opts.feasibility_tol &&
        rel_gap <= opts.gap_tol) {
      return finish(SDPStatus::optimal, "converged");
    }

    // Farkas certificate: X >= 0 with <F_i, X> ~ 0 and <F_0, X> < 0.
    {
      const double tr = x.trace();
      const double lhs = (rp + c).norm() / tr;
      const double f0x = pobj / tr;
      if (f0x < -1e-6 && lhs <= 1e-10 * (1.0 + c_norm) && tr > 1e8) {
        return finish(SDPStatus::infeasible, "Farkas certificate found for the pencil");
      }
      if (dobj > 1e12 * (1.0 + f0_norm)) {
        return finish(SDPStatus::numerical_failure, "objective appears unbounded");
      }
    }

    Eigen::LLT<Dense> s_llt(s);
    if (s_llt.info() != Eigen::Success) {
      return finish(SDPStatus::numerical_failure, "slack matrix lost definiteness");
    }
    Dense s_inv = s_llt.solve(Dense::Identity(n, n));
    symmetrize(s_inv);

    // Schur complement M_ij = <F_i S^{-1}, X F_j>.
    for (Index i = 0; i < m; ++i) left_multiply(*f[static_cast<std::size_t>(i)], s_inv, a[static_cast<std::size_t>(i)]);
    Eigen::MatrixXd schur(m, m);
    for (Index j = 0; j < m; ++j) {
      left_multiply(*f[static_cast<std::size_t>(j)], x, tmp);
      b = tmp.transpose();
      for (Index i = 0; i < m; ++i) schur(i, j) = frob_dot(a[static_cast<std::size_t>(i)], b);
    }
    schur = 0.5 * (schur + schur.transpose()).eval();
    Eigen::LLT<Eigen::MatrixXd> m_llt(schur);
    if (m_llt.info() != Eigen::Success) {
      double shift = 1e-14 * std::max(1.0, schur.diagonal().maxCoeff());
      m_llt.compute(schur + shift * Eigen::MatrixXd::Identity(m, m));
      if (m_llt.info() != Eigen::Success) {
        return finish(SDPStatus::numerical_failure, "Schur complement is singular");
      }
    }

    const Dense x_rd_sinv = (x * rd) * s_inv;

    // Solves for (dg, dS, dX) given the centering target and second-order term.
    auto direction = [&](double sigma_mu, const Dense* corr, RVector& dg, Dense& ds, Dense& dx) {
      Dense y = sigma_mu * s_inv - x_rd_sinv;
      if (corr) y.noalias() -= (*corr) * s_inv;
      RVector rhs(m);
      for (Index i = 0; i < m; ++i) rhs(i) = c(i) + inner(*f[static_cast<std::size_t>(i)], y);
      dg = m_llt.solve(rhs);
      ds = combine(dg) + rd;
      dx = y - x;
      dx.noalias() -= (x * ds) * s_inv;
      symmetrize(dx);
    };

    RVector dg_aff;
    Dense ds_aff, dx_aff;
    direction(0.0, nullptr, dg_aff, ds_aff, dx_aff);
    double ap = std::min(1.0, max_step(x, dx_aff));
    double ad = std::min(1.0, max_step(s, ds_aff));
    double mu_aff = frob_dot(x + ap * dx_aff, s + ad * ds_aff) / static_cast<double>(n);
    double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    Dense corr = dx_aff * ds_aff;
    RVector dg;
    Dense ds, dx;
    direction(sigma * mu, &corr, dg, ds, dx);

    ap = safe_step(x, dx, kTau);
    ad = safe_step(s, ds, kTau);
    if (ap == 0.0 && ad == 0.0) {
      return finish(SDPStatus::numerical_failure, "no progress possible along the search direction");
    }
    x += ap * dx;
    s += ad * ds;
    g += ad * dg;
    symmetrize(x);
    symmetrize(s);
  }
  sol.iterations = opts.max_iters;
  export_g(g);
  return finish(SDPStatus::numerical_failure, "iteration limit reached");
}

const SDPSolver& default_sdp_solver() {
  static const InteriorPointSolver solver;
  return solver;
}

SDPSolution solve(const SDProblem& p, const SDPOptions& opts) {
  return default_sdp_solver().solve(p, opts);
}

void write_pencil(std::ostream& os, const SDProblem& p) {
  p.validate();
  os << "# clue sparse pencil v1\n"
     << "# maximize c.g subject to F0 + sum_i g_i F_i >= 0\n"
     << "# line 1: n_vars block_dim; line 2: c; then: matrix row col value (1-based, row <= col)\n";
  os << p.n_vars() << ' ' << p.block_dim() << '\n';
  char buf[64];
  for (Index i = 0; i < p.n_vars(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", p.objective(i));
    os << (i ? " " : "") << buf;
  }
  os << '\n';
  auto dump = [&](Index k, const SymmetricSparse& f) {
    SymmetricSparse copy = f;
    copy.compress();
    for (const SymEntry& e : copy.entries()) {
      std::snprintf(buf, sizeof buf, "%.17g", e.value);
      os << k << ' ' << e.row + 1 << ' ' << e.col + 1 << ' ' << buf << '\n';
    }
  };
  dump(0, p.base);
  for (Index i = 0; i < p.n_vars(); ++i) dump(i + 1, p.pencil[static_cast<std::size_t>(i)]);
}

SDProblem read_pencil(std::istream& is) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw DomainError("read_pencil: missing header");
  Index n_vars = 0, dim = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> n_vars >> dim) || n_vars < 0 || dim < 1) {
      throw DomainError("read_pencil: bad header line '" + line + "'");
    }
  }
  SDProblem p;
  p.objective = RVector::Zero(n_vars);
  p.base = SymmetricSparse(dim);
  p.pencil.assign(static_cast<std::size_t>(n_vars), SymmetricSparse(dim));
  if (n_vars > 0) {
    if (!next_line()) throw DomainError("read_pencil: missing objective line");
    std::istringstream ls(line);
    for (Index i = 0; i < n_vars; ++i) {
      if (!(ls >> p.objective(i))) throw DomainError("read_pencil: short objective line");
    }
  }
  while (next_line()) {
    std::istringstream ls(line);
    Index k, r, c;
    double v;
    if (!(ls >> k >> r >> c >> v) || k < 0 || k > n_vars || r < 1 || c < 1 || r > dim ||
        c > dim) {
      throw DomainError("read_pencil: bad entry line '" + line + "'");
    }
    SymmetricSparse& target = k == 0 ? p.base : p.pencil[static_cast<std::size_t>(k - 1)];
    target.add(r - 1, c - 1, v);
  }
  p.validate();
  return p;
}

}  // namespace clue
