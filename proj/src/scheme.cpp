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

#include "clue/scheme.hpp"

#include <cmath>
#include <string>

#include "clue/errors.hpp"

namespace clue {

namespace {

constexpr double kDensityTolerance = 1e-10;

void check_key(const SchemeInstance& inst, int key) {
  if (key < 1 || key > inst.K()) {
    throw DomainError("key " + std::to_string(key) + " outside 1.." +
                      std::to_string(inst.K()));
  }
}

// (I + s Gamma) / 2 for s = +-1.
CMatrix eigen_projector(const CMatrix& gamma, int s) {
  CMatrix p = static_cast<double>(s) * gamma;
  p.diagonal().array() += 1.0;
  return 0.5 * p;
}

}  // namespace

int key_count(int lambda) {
  if (lambda < 1) throw DomainError("lambda must be >= 1");
  return lambda % 2 == 0 ? 2 * lambda : 2 * lambda + 1;
}

SchemeInstance::SchemeInstance(int lambda)
    : family_(jordan_wigner_generators(lambda, key_count(lambda))) {}

int gen(const SchemeInstance& inst, std::uint64_t rng_seed) {
  Rng rng(rng_seed, 0x6b6579);
  return static_cast<int>(rng.uniform_int(1, inst.K()));
}

Ciphertext encrypt(const SchemeInstance& inst, int m, int key) {
  if (m != 0 && m != 1) throw DomainError("message must be a bit");
  check_key(inst, key);
  const CMatrix& gamma = inst.family().dense()[static_cast<std::size_t>(key - 1)];
  CMatrix rho = (2.0 / static_cast<double>(inst.d())) * eigen_projector(gamma, m == 0 ? 1 : -1);
  return {HermitianMatrix(std::move(rho))};
}

Decryption decrypt(const SchemeInstance& inst, const HermitianMatrix& rho, int key,
                   std::uint64_t rng_seed) {
  check_key(inst, key);
  if (rho.dim() != inst.d()) throw DomainError("decrypt: state has wrong dimension");
  if (std::abs(rho.trace() - 1.0) > kDensityTolerance) {
    throw DomainError("decrypt: state does not have unit trace");
  }
  if (extreme_eigenvalues(rho).min < -kDensityTolerance) {
    throw DomainError("decrypt: state is not positive semidefinite");
  }
  const CMatrix& gamma = inst.family().dense()[static_cast<std::size_t>(key - 1)];
  Decryption out;
  for (int i = 0; i < 2; ++i) {
    CMatrix p = eigen_projector(gamma, i == 0 ? 1 : -1);
    out.probabilities[static_cast<std::size_t>(i)] =
        std::max(0.0, (p * rho.matrix() * p).trace().real());
  }
  Rng rng(rng_seed, 0x646563);
  double total = out.probabilities[0] + out.probabilities[1];
  out.bit = rng.uniform() * total < out.probabilities[0] ? 0 : 1;
  return out;
}

double indistinguishability_bound(int K) {
  if (K < 1) throw DomainError("K must be >= 1");
  return 0.5 + 0.5 / std::sqrt(static_cast<double>(K));
}

NormCheck single_decryptor_norm_check(const CliffordFamily& family, const HermitianMatrix& u,
                                      double tol) {
  if (!is_hermitian_unitary(u.matrix())) {
    throw DomainError("single_decryptor_norm_check: U is not a Hermitian unitary");
  }
  std::vector<double> ones(static_cast<std::size_t>(family.K()), 1.0);
  CMatrix sum = family.linear_combination(ones);
  NormCheck out;
  out.norm = operator_norm(HermitianMatrix(kron(sum, u.matrix())));
  out.expected = std::sqrt(static_cast<double>(family.K()));
  out.pass = std::abs(out.norm - out.expected) <= tol;
  return out;
}

}  // namespace clue
