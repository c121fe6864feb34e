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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clue/linalg.hpp"

namespace clue {

/** Single-qubit Pauli letters. */
enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);

/**
 * A matrix with exactly one nonzero per row: (M v)[r] = coeff[r] * v[source[r]].
 * Pauli strings are of this form, which makes applying them O(dim).
 */
struct MonomialMatrix {
  std::vector<Index> source;
  std::vector<cd> coeff;

  [[nodiscard]] Index dim() const { return static_cast<Index>(source.size()); }
  void apply(const cd* in, cd* out) const {
    for (std::size_t r = 0; r < source.size(); ++r) out[r] = coeff[r] * in[source[r]];
  }
  [[nodiscard]] CMatrix to_dense() const;
};

/**
 * An n-qubit Pauli word with a real sign, e.g. "-XYI".
 *
 * Qubit 0 is the leftmost tensor factor (most significant bit of the basis
 * index), matching the Kronecker convention in linalg.hpp.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> letters, int sign = +1);

  /// Parses "XYZ", "+XZ", "-IYI". Throws DomainError on bad input.
  static PauliString parse(std::string_view text);
  static PauliString identity(std::size_t n_qubits);

  [[nodiscard]] std::size_t n_qubits() const { return letters_.size(); }
  [[nodiscard]] const std::vector<Pauli>& letters() const { return letters_; }
  [[nodiscard]] int sign() const { return sign_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] std::string str() const;

  [[nodiscard]] PauliString negated() const;
  [[nodiscard]] MonomialMatrix monomial() const;

  bool operator==(const PauliString&) const = default;

 private:
  std::vector<Pauli> letters_;
  int sign_ = +1;
};

/** Symbolic product a * b = i^i_power * string (string carries a +-1 sign). */
struct PauliProduct {
  int i_power = 0;  // in 0..3
  PauliString string;
};

PauliProduct multiply(const PauliString& a, const PauliString& b);

/// True when a b + b a = 2 delta_{ab} I holds symbolically, delta_{ab} being
/// 1 iff @p same is set.
bool satisfies_clifford_relation(const PauliString& a, const PauliString& b,
                                 bool same);

/// Kronecker product of the single-qubit matrices, times the sign.
HermitianMatrix pauli_to_dense(const PauliString& p);

/**
 * K pairwise anti-commuting Pauli strings on lambda qubits (dim 2^lambda).
 */
class CliffordFamily {
 public:
  CliffordFamily(int lambda, std::vector<PauliString> generators);

  [[nodiscard]] int K() const { return static_cast<int>(generators_.size()); }
  [[nodiscard]] int lambda() const { return lambda_; }
  [[nodiscard]] Index dim() const { return Index{1} << lambda_; }
  [[nodiscard]] const std::vector<PauliString>& generators() const {
    return generators_;
  }
  [[nodiscard]] const PauliString& operator[](int k) const {
    return generators_[static_cast<std::size_t>(k)];
  }

  /// Dense generators, computed on first use.
  [[nodiscard]] const std::vector<CMatrix>& dense() const;
  [[nodiscard]] const std::vector<MonomialMatrix>& monomials() const;

  /// Sum over k of v_k Gamma_k.
  [[nodiscard]] CMatrix linear_combination(std::span<const double> v) const;

  /// All pairs checked symbolically; returns the offending (i, j) pairs.
  [[nodiscard]] std::vector<std::pair<int, int>> relation_violations() const;

 private:
  int lambda_;
  std::vector<PauliString> generators_;
  mutable std::vector<CMatrix> dense_;
  mutable std::vector<MonomialMatrix> monomials_;
};

/**
 * The first K Jordan-Wigner strings on lambda qubits:
 * X..X Y I..I, X..X Z I..I for each qubit, then X^{(x)lambda}.
 *
 * @throws UnsatisfiableRequest if K > 2 lambda + 1.
 * @throws DomainError if lambda < 1 or K < 1.
 */
CliffordFamily jordan_wigner_generators(int lambda, int K);

/// Smallest lambda with K <= 2 lambda + 1.
int min_lambda_for(int K);

/// jordan_wigner_generators(min_lambda_for(K), K).
CliffordFamily clifford_family_for(int K);

struct NormCheck {
  bool pass = false;
  double norm = 0.0;
  double expected = 0.0;
};

/** ||sum_k v_k Gamma_k||_op against ||v||_2. */
NormCheck linear_combination_norm_check(const CliffordFamily& family,
                                        std::span<const double> v,
                                        double tol = 1e-10);

}  // namespace clue
