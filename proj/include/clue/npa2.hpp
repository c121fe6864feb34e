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
#include <string>
#include <string_view>
#include <vector>

#include "clue/sdp.hpp"

namespace clue {

/**
 * A level-2 index: psi, u_i = b_i psi, v_i = c_i psi, u_i v_j = b_i c_j psi,
 * u_i u_j = b_i b_j psi (i != j) or v_i v_j = c_i c_j psi (i != j).
 * Indices are 0-based; labels print them 1-based.
 */
struct Monomial {
  enum class Kind : std::uint8_t { psi, u, v, uv, uu, vv };
  Kind kind = Kind::psi;
  int i = -1;
  int j = -1;

  [[nodiscard]] std::string label() const;
  bool operator==(const Monomial&) const = default;
};

/// psi, u_1..u_K, v_1..v_K, u_i v_j row-major, u_i u_j (i != j), v_i v_j (i != j).
std::vector<Monomial> npa2_index_set(int K);

inline constexpr int kNpa2Classes = 18;
/// Class id of entries that are identically zero.
inline constexpr int kZeroClass = -1;

/**
 * One line of the inner-product classification, e.g. "-u_iv_j|v_jv_i":
 * the entry <left|right> equals sign * g_cls whenever the pattern variables
 * i, j, k, l take pairwise distinct values.
 */
struct ClassPattern {
  int cls = 0;
  int sign = 1;
  std::string text;
};

/**
 * The classification as text, one class per line:
 *
 *   <class> <signed pattern> <signed pattern> ...
 *
 * where class is 0 (entries equal to 1), Z (entries equal to 0) or 1..18.
 */
std::string_view default_classification();

/** @throws DomainError on malformed text. */
std::vector<ClassPattern> parse_classification(std::string_view text);

struct EntryClass {
  int cls = kZeroClass;
  int sign = 0;
};

struct NPA2Structure {
  int K = 0;
  std::vector<Monomial> index_set;
  /// Row-major dim x dim; symmetric.
  std::vector<EntryClass> class_of;
  /// G_0 ... G_18.
  std::vector<SymmetricSparse> G;

  [[nodiscard]] Index dim() const { return static_cast<Index>(index_set.size()); }
  [[nodiscard]] const EntryClass& at(Index a, Index b) const {
    return class_of[static_cast<std::size_t>(a * dim() + b)];
  }
  /// G_0 + sum_i g_i G_i; g has 18 entries.
  [[nodiscard]] RMatrix pencil(const RVector& g) const;
};

/**
 * Assigns every Gram entry a class by matching the classification patterns.
 * @throws ConstructionError naming the pair on a gap or on two lines giving
 *         different (class, sign) to one entry.
 * @throws DomainError if K < 2.
 */
NPA2Structure build_structure(int K);
NPA2Structure build_structure(int K, const std::vector<ClassPattern>& table);

/// maximize 2K g_1 + K g_2 subject to G_0 + sum g_i G_i >= 0.
SDProblem npa2_problem(const NPA2Structure& s);

struct NPA2Result {
  double win_prob = 0.0;
  SDPSolution solution;
};

/// win_prob = 1/4 + (2K g_1 + K g_2) / (4K).
NPA2Result solve_npa2(int K, const SDPOptions& opts = {});
NPA2Result solve_npa2(const NPA2Structure& s, const SDPOptions& opts = {});

struct StructureReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  /// Class values recovered from the identity-strategy moments.
  RVector g;
  double min_eig = 0.0;
  double objective = 0.0;
};

/**
 * Checks the structure invariants, then feeds in moments of explicit
 * strategies (group-averaged over index permutations and the u <-> v swap)
 * and confirms that every class is constant on its entries, that zero
 * entries vanish and that the resulting pencil is PSD with objective at
 * least K + 2 sqrt K. The moment checks run for K <= 7.
 */
StructureReport validate_structure(const NPA2Structure& s, std::uint64_t seed = 1);

/// One line per upper-triangle entry: row col label label class sign.
void dump_structure(std::ostream& os, const NPA2Structure& s);

}  // namespace clue
