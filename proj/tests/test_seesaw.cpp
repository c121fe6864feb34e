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

#include <catch_amalgamated.hpp>
#include <cmath>
#include <sstream>

#include "clue/errors.hpp"
#include "clue/seesaw.hpp"

using namespace clue;
using Catch::Matchers::WithinAbs;

namespace {

SeesawConfig config(int K, Index D, int instances = 4) {
  SeesawConfig c;
  c.K = K;
  c.D = D;
  c.instances = instances;
  c.seed = 7;
  return c;
}

double trace_norm(const CMatrix& x) {
  RVector ev = eigenvalues(HermitianMatrix(0.5 * (x + x.adjoint())));
  return ev.cwiseAbs().sum();
}

// X with <z|Gamma (x) B (x) I + I (x) B (x) C|z> = tr(B X) for every B,
// built from matrix units E_{b b'} without any reshaping of z.
CMatrix bob_contraction(const CMatrix& gamma, const CMatrix& c, const CVector& z, Index D) {
  const Index d = gamma.rows();
  CMatrix id_d = CMatrix::Identity(d, d), id_D = CMatrix::Identity(D, D);
  CMatrix x(D, D);
  for (Index b = 0; b < D; ++b) {
    for (Index bp = 0; bp < D; ++bp) {
      CMatrix e = CMatrix::Zero(D, D);
      e(b, bp) = 1.0;
      CMatrix op = kron(gamma, kron(e, id_D)) + kron(id_d, kron(e, c));
      x(bp, b) = z.dot(op * z);
    }
  }
  return x;
}

}  // namespace

TEST_CASE("initial states", "[seesaw]") {
  CliffordFamily fam = clifford_family_for(3);
  SeesawState s2 = init_state(fam, config(3, 2), 0);
  CHECK_THAT(s2.z.norm(), WithinAbs(1.0, 1e-12));
  for (const auto& b : s2.B) {
    RVector ev = eigenvalues(HermitianMatrix(b));
    CHECK_THAT(ev(0), WithinAbs(-1.0, 1e-10));
    CHECK_THAT(ev(1), WithinAbs(1.0, 1e-10));
  }
  SeesawState s3 = init_state(fam, config(3, 3), 0);
  RVector ev = eigenvalues(HermitianMatrix(s3.C[0]));
  CHECK_THAT(ev(0), WithinAbs(-1.0, 1e-10));
  CHECK_THAT(ev(1), WithinAbs(1.0, 1e-10));
  CHECK_THAT(ev(2), WithinAbs(1.0, 1e-10));

  SeesawState again = init_state(fam, config(3, 3), 0);
  CHECK(again.z == s3.z);
  CHECK(again.B == s3.B);
  CHECK(again.C == s3.C);
  CHECK(init_state(fam, config(3, 3), 1).z != s3.z);
}

TEST_CASE("z step picks the top eigenvector", "[seesaw]") {
  CliffordFamily fam = clifford_family_for(4);
  SeesawState s = init_state(fam, config(4, 2), 3);
  step_z(fam, s);
  Strategy strat(s.B, s.C);
  double top = w_spectrum(fam, strat).max;
  CHECK_THAT(s.trace.back(), WithinAbs(top, 1e-10));
  CHECK_THAT(GameOperatorAction(fam, strat).expectation(s.z), WithinAbs(top, 1e-10));

  SeesawState id = init_state(fam, config(4, 2), 0);
  Strategy ident = identity_strategy(4, 2);
  id.B = ident.B();
  id.C = ident.C();
  step_z(fam, id);
  CHECK_THAT(id.trace.back(), WithinAbs(4 + 2 * std::sqrt(4.0), 1e-10));
}

TEST_CASE("B step equals the trace-norm identity", "[seesaw][oracle]") {
  for (int K : {2, 3, 5}) {
    CliffordFamily fam = clifford_family_for(K);
    for (Index D : {2, 3}) {
      SeesawState s = init_state(fam, config(K, D), 1);
      step_z(fam, s);
      // Perturb z so it is not an eigenvector of the current W.
      Rng rng(5, static_cast<std::uint64_t>(K * 10 + D));
      s.z += 0.3 * random_unit_vector(s.z.size(), rng);
      s.z.normalize();

      double expected = 0.0;
      CMatrix id_D = CMatrix::Identity(D, D);
      for (int k = 0; k < K; ++k) {
        const CMatrix& g = fam.dense()[static_cast<std::size_t>(k)];
        CMatrix fixed = kron(g, kron(id_D, s.C[static_cast<std::size_t>(k)]));
        expected += s.z.dot(fixed * s.z).real();
        expected += trace_norm(bob_contraction(g, s.C[static_cast<std::size_t>(k)], s.z, D));
      }
      step_B(fam, s);
      INFO("K = " << K << " D = " << D);
      CHECK_THAT(s.trace.back(), WithinAbs(expected, 1e-10));
      for (const auto& b : s.B) CHECK(is_hermitian_unitary(b, 1e-9));
    }
  }
}

TEST_CASE("C step mirrors the B step", "[seesaw]") {
  CliffordFamily fam = clifford_family_for(3);
  SeesawState s = init_state(fam, config(3, 3), 2);
  step_z(fam, s);
  // Swapping the parties and running step_B must reproduce step_C.
  SeesawState mirrored = s;
  std::swap(mirrored.B, mirrored.C);
  const Index D = 3;
  CVector zs(s.z.size());
  for (Index a = 0; a < fam.dim(); ++a) {
    for (Index b = 0; b < D; ++b) {
      for (Index c = 0; c < D; ++c) zs((a * D + c) * D + b) = s.z((a * D + b) * D + c);
    }
  }
  mirrored.z = zs;
  step_C(fam, s);
  step_B(fam, mirrored);
  CHECK_THAT(s.trace.back(), WithinAbs(mirrored.trace.back(), 1e-10));
  for (std::size_t k = 0; k < s.C.size(); ++k) CHECK((s.C[k] - mirrored.B[k]).norm() < 1e-8);
}

TEST_CASE("hermitian sign", "[seesaw]") {
  CMatrix psd = CMatrix::Identity(3, 3);
  psd(0, 1) = psd(1, 0) = 0.5;
  CHECK((hermitian_sign(psd) - CMatrix::Identity(3, 3)).norm() < 1e-12);
  CMatrix zero = CMatrix::Zero(2, 2);
  CHECK((hermitian_sign(zero) - CMatrix::Identity(2, 2)).norm() < 1e-12);
  CMatrix mixed = CMatrix::Zero(2, 2);
  mixed(0, 0) = 2.0;
  mixed(1, 1) = -0.1;
  CMatrix expected = CMatrix::Identity(2, 2);
  expected(1, 1) = -1.0;
  CHECK((hermitian_sign(mixed) - expected).norm() < 1e-12);
}

TEST_CASE("identity strategy is a fixed point", "[seesaw][property]") {
  for (int K : {2, 3, 4}) {
    CliffordFamily fam = clifford_family_for(K);
    SeesawState s = init_state(fam, config(K, 2), 0);
    Strategy ident = identity_strategy(K, 2);
    s.B = ident.B();
    s.C = ident.C();
    step_z(fam, s);
    step_B(fam, s);
    step_C(fam, s);
    step_z(fam, s);
    const double bound = K + 2 * std::sqrt(K);
    for (double v : s.trace) CHECK_THAT(v, WithinAbs(bound, 1e-9));
  }
}

TEST_CASE("traces are monotone and below the conjecture", "[seesaw][property]") {
  for (Index D : {2, 3, 4}) {
    SeesawSummary sum = run_seesaw(config(3, D, 10));
    CHECK(sum.bound_violations == 0);
    CHECK(sum.worst_decrease <= 1e-9);
    for (const auto& inst : sum.instances) {
      CHECK(inst.trace.size() == 30);
      CHECK(inst.log_relative_error <= 1e-9);
    }
  }
  SeesawSummary k2 = run_seesaw(config(2, 3, 10));
  CHECK(k2.best_objective <= 2 + 2 * std::sqrt(2.0) + 1e-8);
}

TEST_CASE("Lanczos path above the dense limit", "[seesaw]") {
  SeesawConfig c = config(12, 5, 1);
  c.iterations = 2;
  SeesawSummary sum = run_seesaw(c);
  REQUIRE(sum.instances.size() == 1);
  CHECK(sum.worst_decrease <= 1e-9);
  CHECK(sum.best_objective <= sum.bound + 1e-7);
}

TEST_CASE("runs do not depend on the thread count", "[seesaw]") {
  SeesawConfig a = config(3, 2, 6);
  a.threads = 1;
  SeesawConfig b = a;
  b.threads = 3;
  SeesawSummary sa = run_seesaw(a), sb = run_seesaw(b);
  for (std::size_t i = 0; i < sa.instances.size(); ++i) CHECK(sa.instances[i].trace == sb.instances[i].trace);
}

TEST_CASE("envelope and configuration checks", "[seesaw]") {
  CHECK_THROWS_AS(run_seesaw(config(3, 64)), UnsatisfiableRequest);
  CHECK_THROWS_AS(run_seesaw(config(1, 2)), DomainError);
  SeesawConfig c = config(3, 2);
  c.instances = 0;
  CHECK_THROWS_AS(run_seesaw(c), DomainError);
}

TEST_CASE("trace CSV", "[seesaw]") {
  SeesawSummary sum = run_seesaw(config(3, 2, 2));
  std::ostringstream os;
  write_seesaw_csv_header(os);
  write_seesaw_csv(os, sum);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "K,D,instance,step_index,objective,log_relative_error");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2 * 30);
}
