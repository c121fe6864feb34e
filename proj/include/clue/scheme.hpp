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

#include <array>
#include <cstdint>

#include "clue/clifford.hpp"

namespace clue {

/// K = 2 lambda for even lambda, 2 lambda + 1 for odd lambda.
int key_count(int lambda);

/** Parameters of the single-bit scheme at security parameter lambda. */
class SchemeInstance {
 public:
  /** @throws DomainError if lambda < 1. */
  explicit SchemeInstance(int lambda);

  [[nodiscard]] int lambda() const { return family_.lambda(); }
  [[nodiscard]] int K() const { return family_.K(); }
  [[nodiscard]] Index d() const { return family_.dim(); }
  [[nodiscard]] const CliffordFamily& family() const { return family_; }

 private:
  CliffordFamily family_;
};

/** A ciphertext state. Keys are 1-based throughout this module. */
struct Ciphertext {
  HermitianMatrix rho;
};

/// Uniform key in 1..K, deterministic in the seed.
int gen(const SchemeInstance& inst, std::uint64_t rng_seed);

/**
 * rho = (2/d) (I + (-1)^m Gamma_k) / 2.
 * @throws DomainError for m not in {0, 1} or k outside 1..K.
 */
Ciphertext encrypt(const SchemeInstance& inst, int m, int key);

struct Decryption {
  int bit = 0;
  std::array<double, 2> probabilities{};
};

/**
 * Measures in the eigenbasis of Gamma_k. probabilities[i] is the Born weight
 * of the (-1)^i eigenspace; bit is sampled from them.
 *
 * @throws DomainError if rho is not a density matrix of dimension d.
 */
Decryption decrypt(const SchemeInstance& inst, const HermitianMatrix& rho,
                   int key, std::uint64_t rng_seed);

/// 1/2 + 1/(2 sqrt(K)).
double indistinguishability_bound(int K);

/** ||sum_k Gamma_k (x) U|| against sqrt(K); U must be a Hermitian unitary. */
NormCheck single_decryptor_norm_check(const CliffordFamily& family,
                                      const HermitianMatrix& u,
                                      double tol = 1e-9);

}  // namespace clue
