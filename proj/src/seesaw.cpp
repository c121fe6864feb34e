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

#include "clue/seesaw.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "clue/errors.hpp"

namespace clue {

namespace {

constexpr std::uint64_t kSeesawStream = 0x736565;

Strategy current_strategy(const SeesawState& s) { return Strategy(s.B, s.C); }

double objective(const CliffordFamily& family, const SeesawState& s) {
  Strategy strat = current_strategy(s);
  return GameOperatorAction(family, strat).expectation(s.z);
}

// Partial contraction over the (Alice, other party) rows of a (dD) x D view:
// returns (Z* T Z)^T with T = Gamma_k (x) I + I (x) O_k acting on the rows.
CMatrix contract(const MonomialMatrix& gamma, const CMatrix& other, const CMatrix& Z,
                 Index d, Index D) {
  CMatrix TZ(d * D, D);
  for (Index a = 0; a < d; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    TZ.middleRows(a * D, D) = gamma.coeff[ua] * Z.middleRows(gamma.source[ua] * D, D) +
                              other * Z.middleRows(a * D, D);
  }
  CMatrix y = Z.adjoint() * TZ;
  return y.transpose();
}

void validate(const CliffordFamily& family, const SeesawState& s) {
  const auto K = static_cast<std::size_t>(family.K());
  if (s.B.size() != K || s.C.size() != K) throw DomainError("seesaw: strategy size mismatch");
  const Index D = s.B.front().rows();
  if (s.z.size() != family.dim() * D * D) throw DomainError("seesaw: state has wrong dimension");
}

// Z[(a, c), b] = z[a, b, c].
CMatrix bob_view(const CVector& z, Index d, Index D) {
  CMatrix Z(d * D, D);
  for (Index a = 0; a < d; ++a) {
    for (Index b = 0; b < D; ++b) {
      for (Index c = 0; c < D; ++c) Z(a * D + c, b) = z((a * D + b) * D + c);
    }
  }
  return Z;
}

// Z[(a, b), c] = z[a, b, c], the natural row-major layout.
CMatrix charlie_view(const CVector& z, Index d, Index D) {
  CMatrix Z(d * D, D);
  for (Index r = 0; r < d * D; ++r) {
    for (Index c = 0; c < D; ++c) Z(r, c) = z(r * D + c);
  }
  return Z;
}

}  // namespace

CMatrix hermitian_sign(const CMatrix& x) {
  CMatrix h = 0.5 * (x + x.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) throw NumericalFailure("hermitian_sign: eigensolver failed");
  const RVector& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  RVector signs(ev.size());
  for (Index i = 0; i < ev.size(); ++i) signs(i) = ev(i) >= -1e-12 * scale ? 1.0 : -1.0;
  const Eigen::MatrixXcd& v = es.eigenvectors();
  CMatrix s = v * signs.cast<cd>().asDiagonal() * v.adjoint();
  return 0.5 * (s + s.adjoint());
}

SeesawState init_state(const CliffordFamily& family, const SeesawConfig& cfg, int instance) {
  if (cfg.D < 1) throw DomainError("seesaw: D must be >= 1");
  if (family.K() != cfg.K) throw DomainError("seesaw: family size differs from K");
  Rng rng = Rng(cfg.seed, kSeesawStream).split(static_cast<std::uint64_t>(instance));
  SeesawState s;
  for (int k = 0; k < cfg.K; ++k) {
    s.B.push_back(random_hermitian_unitary(cfg.D, rng));
    s.C.push_back(random_hermitian_unitary(cfg.D, rng));
  }
  s.z = random_unit_vector(family.dim() * cfg.D * cfg.D, rng);
  return s;
}

void step_z(const CliffordFamily& family, SeesawState& state) {
  validate(family, state);
  Strategy strat = current_strategy(state);
  GameOperatorAction action(family, strat);
  EigenPair top;
  if (action.dim() <= kDenseEigenLimit) {
    top = top_eigenpair(build_W(family, strat).matrix);
  } else {
    top = lanczos_top(action.as_operator(), action.dim(), state.z);
  }
  state.z = top.vector / top.vector.norm();
  state.trace.push_back(action.expectation(state.z));
}

void step_B(const CliffordFamily& family, SeesawState& state) {
  validate(family, state);
  const Index d = family.dim();
  const Index D = state.B.front().rows();
  const auto& mons = family.monomials();
  CMatrix Z = bob_view(state.z, d, D);
  for (std::size_t k = 0; k < state.B.size(); ++k) {
    state.B[k] = hermitian_sign(contract(mons[k], state.C[k], Z, d, D));
  }
  state.trace.push_back(objective(family, state));
}

void step_C(const CliffordFamily& family, SeesawState& state) {
  validate(family, state);
  const Index d = family.dim();
  const Index D = state.B.front().rows();
  const auto& mons = family.monomials();
  CMatrix Z = charlie_view(state.z, d, D);
  for (std::size_t k = 0; k < state.C.size(); ++k) {
    state.C[k] = hermitian_sign(contract(mons[k], state.B[k], Z, d, D));
  }
  state.trace.push_back(objective(family, state));
}

SeesawSummary run_seesaw(const SeesawConfig& cfg) {
  if (cfg.K < 2) throw DomainError("seesaw: K must be >= 2");
  if (cfg.iterations < 1 || cfg.instances < 1) {
    throw DomainError("seesaw: iterations and instances must be positive");
  }
  const int lambda = cfg.lambda > 0 ? cfg.lambda : min_lambda_for(cfg.K);
  CliffordFamily family = jordan_wigner_generators(lambda, cfg.K);
  const Index dim = family.dim() * cfg.D * cfg.D;
  if (dim > cfg.max_dim) {
    std::ostringstream os;
    os << "seesaw: d * D^2 = " << dim << " exceeds the limit " << cfg.max_dim;
    throw UnsatisfiableRequest(os.str());
  }
  // Fill the caches before threads share the family.
  (void)family.monomials();
  (void)family.dense();

  SeesawSummary summary;
  summary.K = cfg.K;
  summary.D = cfg.D;
  summary.bound = conjecture_bound(cfg.K).norm_bound;
  summary.instances.resize(static_cast<std::size_t>(cfg.instances));

  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (int i = next++; i < cfg.instances; i = next++) {
      try {
        SeesawState s = init_state(family, cfg, i);
        for (int it = 0; it < cfg.iterations; ++it) {
          step_z(family, s);
          step_B(family, s);
          step_C(family, s);
        }
        SeesawInstance& out = summary.instances[static_cast<std::size_t>(i)];
        out.instance = i;
        out.final_objective = s.trace.back();
        out.log_relative_error = std::log(out.final_objective / summary.bound);
        for (std::size_t t = 1; t < s.trace.size(); ++t) {
          out.max_decrease = std::max(out.max_decrease, s.trace[t - 1] - s.trace[t]);
        }
        out.trace = std::move(s.trace);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  int threads = cfg.threads > 0 ? cfg.threads
                                : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  threads = std::min(threads, cfg.instances);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  summary.best_objective = -INFINITY;
  for (const auto& inst : summary.instances) {
    summary.best_objective = std::max(summary.best_objective, inst.final_objective);
    summary.worst_decrease = std::max(summary.worst_decrease, inst.max_decrease);
    double peak = *std::max_element(inst.trace.begin(), inst.trace.end());
    if (peak > summary.bound + 1e-9) ++summary.bound_violations;
  }
  summary.best_log_relative_error = std::log(summary.best_objective / summary.bound);
  return summary;
}

void write_seesaw_csv_header(std::ostream& os) {
  os << "K,D,instance,step_index,objective,log_relative_error\n";
}

void write_seesaw_csv(std::ostream& os, const SeesawSummary& summary) {
  const auto old_precision = os.precision(17);
  for (const auto& inst : summary.instances) {
    for (std::size_t t = 0; t < inst.trace.size(); ++t) {
      os << summary.K << ',' << summary.D << ',' << inst.instance << ',' << t + 1 << ','
         << inst.trace[t] << ',' << std::log(inst.trace[t] / summary.bound) << '\n';
    }
  }
  os.precision(old_precision);
}

}  // namespace clue
