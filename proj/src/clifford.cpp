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

#include "clue/clifford.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

#include "clue/errors.hpp"

namespace clue {

namespace {

// Single-qubit product table: p * q = i^power * letter.
struct LetterProduct {
  int power;
  Pauli letter;
};

LetterProduct letter_product(Pauli p, Pauli q) {
  if (p == Pauli::I) return {0, q};
  if (q == Pauli::I) return {0, p};
  if (p == q) return {0, Pauli::I};
  // XY = iZ, YZ = iX, ZX = iY; reversed order gives -i.
  auto cyclic = [](Pauli a, Pauli b) {
    return (a == Pauli::X && b == Pauli::Y) || (a == Pauli::Y && b == Pauli::Z) ||
           (a == Pauli::Z && b == Pauli::X);
  };
  Pauli third = static_cast<Pauli>(6 - static_cast<int>(p) - static_cast<int>(q));
  return {cyclic(p, q) ? 1 : 3, third};
}

CMatrix single_qubit(Pauli p) {
  CMatrix m(2, 2);
  const cd i(0.0, 1.0);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

std::mutex& family_cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

CMatrix MonomialMatrix::to_dense() const {
  const Index n = dim();
  CMatrix m = CMatrix::Zero(n, n);
  for (Index r = 0; r < n; ++r) m(r, source[static_cast<std::size_t>(r)]) = coeff[static_cast<std::size_t>(r)];
  return m;
}

PauliString::PauliString(std::vector<Pauli> letters, int sign)
    : letters_(std::move(letters)), sign_(sign) {
  if (sign != 1 && sign != -1) throw DomainError("PauliString: sign must be +-1");
}

PauliString PauliString::parse(std::string_view text) {
  int sign = +1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '-' ? -1 : +1;
    text.remove_prefix(1);
  }
  if (text.empty()) throw DomainError("PauliString::parse: empty word");
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'I': letters.push_back(Pauli::I); break;
      case 'X': letters.push_back(Pauli::X); break;
      case 'Y': letters.push_back(Pauli::Y); break;
      case 'Z': letters.push_back(Pauli::Z); break;
      default:
        throw DomainError(std::string("PauliString::parse: bad letter '") + ch + "'");
    }
  }
  return PauliString(std::move(letters), sign);
}

PauliString PauliString::identity(std::size_t n_qubits) {
  return PauliString(std::vector<Pauli>(n_qubits, Pauli::I));
}

bool PauliString::is_identity() const {
  for (Pauli p : letters_) {
    if (p != Pauli::I) return false;
  }
  return true;
}

std::string PauliString::str() const {
  std::string s = sign_ < 0 ? "-" : "+";
  for (Pauli p : letters_) s.push_back(to_char(p));
  return s;
}

PauliString PauliString::negated() const { return PauliString(letters_, -sign_); }

MonomialMatrix PauliString::monomial() const {
  const std::size_t n = letters_.size();
  const Index dim = Index{1} << n;
  Index flip = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (letters_[q] == Pauli::X || letters_[q] == Pauli::Y) flip |= Index{1} << (n - 1 - q);
  }
  MonomialMatrix m;
  m.source.resize(static_cast<std::size_t>(dim));
  m.coeff.resize(static_cast<std::size_t>(dim));
  // Row r receives column r ^ flip; the coefficient is <r|P|r^flip>.
  for (Index r = 0; r < dim; ++r) {
    Index c = r ^ flip;
    cd coeff = static_cast<double>(sign_);
    for (std::size_t q = 0; q < n; ++q) {
      int row_bit = static_cast<int>((r >> (n - 1 - q)) & 1);
      switch (letters_[q]) {
        case Pauli::I:
        case Pauli::X: break;
        case Pauli::Y: coeff *= row_bit ? cd(0, 1) : cd(0, -1); break;
        case Pauli::Z: if (row_bit) coeff = -coeff; break;
      }
    }
    m.source[static_cast<std::size_t>(r)] = c;
    m.coeff[static_cast<std::size_t>(r)] = coeff;
  }
  return m;
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) throw DomainError("multiply: qubit count mismatch");
  int power = 0;
  std::vector<Pauli> letters(a.n_qubits());
  for (std::size_t q = 0; q < a.n_qubits(); ++q) {
    LetterProduct lp = letter_product(a.letters()[q], b.letters()[q]);
    power += lp.power;
    letters[q] = lp.letter;
  }
  int sign = a.sign() * b.sign();
  // i^2 = -1 folds into the real sign.
  power %= 4;
  if (power >= 2) {
    sign = -sign;
    power -= 2;
  }
  return {power, PauliString(std::move(letters), sign)};
}

bool satisfies_clifford_relation(const PauliString& a, const PauliString& b, bool same) {
  PauliProduct ab = multiply(a, b);
  PauliProduct ba = multiply(b, a);
  // Both products carry the same letters; the anticommutator is
  // (i^p s_ab + i^q s_ba) * letters.
  auto phase_index = [](const PauliProduct& p) {
    return (p.i_power + (p.string.sign() < 0 ? 2 : 0)) % 4;
  };
  int p = phase_index(ab);
  int q = phase_index(ba);
  if (same) {
    // 2 I requires both products to be exactly +I.
    return ab.string.is_identity() && ba.string.is_identity() && p == 0 && q == 0;
  }
  return (p - q + 4) % 4 == 2;
}

HermitianMatrix pauli_to_dense(const PauliString& p) {
  CMatrix m = CMatrix::Identity(1, 1);
  for (Pauli letter : p.letters()) m = kron(m, single_qubit(letter));
  if (p.sign() < 0) m = -m;
  return HermitianMatrix(std::move(m));
}

CliffordFamily::CliffordFamily(int lambda, std::vector<PauliString> generators)
    : lambda_(lambda), generators_(std::move(generators)) {
  if (lambda < 1) throw DomainError("CliffordFamily: lambda must be >= 1");
  for (const auto& g : generators_) {
    if (g.n_qubits() != static_cast<std::size_t>(lambda)) {
      throw DomainError("CliffordFamily: generator " + g.str() + " has wrong qubit count");
    }
  }
}

const std::vector<CMatrix>& CliffordFamily::dense() const {
  std::lock_guard lock(family_cache_mutex());
  if (dense_.size() != generators_.size()) {
    dense_.clear();
    for (const auto& g : generators_) dense_.push_back(pauli_to_dense(g).matrix());
  }
  return dense_;
}

const std::vector<MonomialMatrix>& CliffordFamily::monomials() const {
  std::lock_guard lock(family_cache_mutex());
  if (monomials_.size() != generators_.size()) {
    monomials_.clear();
    for (const auto& g : generators_) monomials_.push_back(g.monomial());
  }
  return monomials_;
}

CMatrix CliffordFamily::linear_combination(std::span<const double> v) const {
  if (static_cast<int>(v.size()) != K()) {
    throw DomainError("linear_combination: expected " + std::to_string(K()) + " coefficients");
  }
  const auto& mons = monomials();
  CMatrix out = CMatrix::Zero(dim(), dim());
  for (int k = 0; k < K(); ++k) {
    const auto& m = mons[static_cast<std::size_t>(k)];
    for (Index r = 0; r < dim(); ++r) {
      out(r, m.source[static_cast<std::size_t>(r)]) += v[static_cast<std::size_t>(k)] * m.coeff[static_cast<std::size_t>(r)];
    }
  }
  return out;
}

std::vector<std::pair<int, int>> CliffordFamily::relation_violations() const {
  std::vector<std::pair<int, int>> bad;
  for (int i = 0; i < K(); ++i) {
    for (int j = i; j < K(); ++j) {
      if (!satisfies_clifford_relation((*this)[i], (*this)[j], i == j)) bad.emplace_back(i, j);
    }
  }
  return bad;
}

CliffordFamily jordan_wigner_generators(int lambda, int K) {
  if (lambda < 1) throw DomainError("jordan_wigner_generators: lambda must be >= 1");
  if (K < 1) throw DomainError("jordan_wigner_generators: K must be >= 1");
  if (K > 2 * lambda + 1) {
    std::ostringstream os;
    os << "jordan_wigner_generators: " << lambda << " qubits carry at most "
       << 2 * lambda + 1 << " anti-commuting generators, " << K << " requested";
    throw UnsatisfiableRequest(os.str());
  }
  const auto n = static_cast<std::size_t>(lambda);
  std::vector<PauliString> gens;
  for (std::size_t i = 0; i < n && static_cast<int>(gens.size()) < K; ++i) {
    for (Pauli middle : {Pauli::Y, Pauli::Z}) {
      if (static_cast<int>(gens.size()) == K) break;
      std::vector<Pauli> letters(n, Pauli::I);
      for (std::size_t q = 0; q < i; ++q) letters[q] = Pauli::X;
      letters[i] = middle;
      gens.emplace_back(std::move(letters));
    }
  }
  if (static_cast<int>(gens.size()) < K) {
    gens.emplace_back(std::vector<Pauli>(n, Pauli::X));
  }
  return CliffordFamily(lambda, std::move(gens));
}

int min_lambda_for(int K) {
  if (K < 1) throw DomainError("min_lambda_for: K must be >= 1");
  return std::max(1, K / 2);
}

CliffordFamily clifford_family_for(int K) {
  return jordan_wigner_generators(min_lambda_for(K), K);
}

NormCheck linear_combination_norm_check(const CliffordFamily& family,
                                        std::span<const double> v, double tol) {
  HermitianMatrix m(family.linear_combination(v));
  NormCheck out;
  out.norm = operator_norm(m);
  double sq = 0.0;
  for (double x : v) sq += x * x;
  out.expected = std::sqrt(sq);
  out.pass = std::abs(out.norm - out.expected) <= tol;
  return out;
}

}  // namespace clue
