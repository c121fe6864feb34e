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

#include "clue/npa2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "clue/errors.hpp"
#include "clue/game_operator.hpp"

namespace clue {

namespace {

// Pattern variables i, j, k, l are pairwise distinct.
constexpr std::string_view kClassification = R"(
0 +psi|psi +u_i|u_i +v_i|v_i +u_iv_i|u_iv_i +u_iv_j|u_iv_j +u_iu_j|u_iu_j +v_iv_j|v_iv_j
Z +u_i|v_j +u_iv_i|u_jv_k +u_iv_j|u_kv_k +psi|u_iv_j +u_iv_i|u_iu_j +u_iv_i|u_ju_i +u_iv_j|u_iu_k +u_iv_j|u_ku_i +u_iv_j|u_ku_l +u_iv_i|v_iv_j +u_iv_i|v_jv_i +u_iv_j|v_kv_j +u_iv_j|v_jv_k +u_iv_j|v_kv_l +u_iu_j|v_kv_i +u_iu_j|v_jv_k
1 +psi|u_i +psi|v_i +u_i|u_iv_i +v_i|u_iv_i +u_i|u_iv_j -v_i|u_jv_i +u_i|u_iu_j +v_i|v_iv_j
2 +u_i|v_i +psi|u_iv_i +u_iv_j|u_iu_j -u_iv_j|v_jv_i
3 +u_i|u_j +v_i|v_j +u_iv_i|u_iv_j -u_iv_i|u_jv_i +psi|u_iu_j +psi|v_iv_j +u_iv_j|u_iv_k +u_iv_j|u_kv_j +u_iu_j|u_iu_k +v_iv_j|v_iv_k
4 +u_i|u_jv_j -u_i|u_jv_i +v_i|u_jv_j +v_i|u_iv_j +v_i|u_iu_j -v_i|u_ju_i +u_i|v_iv_j -u_i|v_jv_i
5 +u_i|u_jv_k -v_i|u_jv_k +v_i|u_ju_k +u_i|v_jv_k
6 +u_iv_i|u_jv_j -u_iu_j|v_jv_i
7 +u_iv_j|u_jv_i -u_iu_j|v_iv_j
8 +u_iv_j|u_kv_i -u_iu_j|v_iv_k +u_iu_j|v_kv_j
9 +u_iv_j|u_kv_l +u_iu_j|v_kv_l
10 +u_i|u_ju_i +v_i|v_jv_i
11 +u_i|u_ju_k +v_i|v_jv_k
12 +u_iv_j|u_ju_i -u_iv_j|v_iv_j
13 +u_iv_i|u_ju_k +u_iv_j|u_ku_j +u_iv_i|v_jv_k -u_iv_j|v_kv_i
14 +u_iv_j|u_ju_k -u_iv_j|v_iv_k
15 +u_iu_j|u_ju_i +v_iv_j|v_jv_i
16 +u_iu_j|u_ku_i +v_iv_j|v_kv_i
17 +u_iu_j|u_ku_j +v_iv_j|v_kv_j
18 +u_iu_j|u_ku_l +v_iv_j|v_kv_l
)";

constexpr int kKinds = 6;
using Kind = Monomial::Kind;

struct PatternMono {
  Kind kind = Kind::psi;
  std::array<int, 2> vars{-1, -1};
};

struct Template {
  int cls;
  int sign;
  PatternMono left;
  PatternMono right;
  const std::string* text;
};

PatternMono parse_mono(std::string_view s, std::string_view whole) {
  auto fail = [&]() -> PatternMono {
    throw DomainError("classification: cannot parse '" + std::string(whole) + "'");
  };
  PatternMono p;
  if (s == "psi") return p;
  std::vector<std::pair<char, int>> letters;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (pos + 3 > s.size()) return fail();
    char letter = s[pos];
    if ((letter != 'u' && letter != 'v') || s[pos + 1] != '_') return fail();
    char var = s[pos + 2];
    if (var < 'i' || var > 'l') return fail();
    letters.emplace_back(letter, var - 'i');
    pos += 3;
  }
  if (letters.size() == 1) {
    p.kind = letters[0].first == 'u' ? Kind::u : Kind::v;
    p.vars = {letters[0].second, -1};
  } else if (letters.size() == 2) {
    const char a = letters[0].first, b = letters[1].first;
    if (a == 'u' && b == 'v') p.kind = Kind::uv;
    else if (a == 'u' && b == 'u') p.kind = Kind::uu;
    else if (a == 'v' && b == 'v') p.kind = Kind::vv;
    else return fail();
    p.vars = {letters[0].second, letters[1].second};
    if (p.kind != Kind::uv && p.vars[0] == p.vars[1]) return fail();
  } else {
    return fail();
  }
  return p;
}

int arity(Kind k) {
  switch (k) {
    case Kind::psi: return 0;
    case Kind::u:
    case Kind::v: return 1;
    default: return 2;
  }
}

// Extends the injective binding of pattern variables to indices.
bool bind(const PatternMono& p, const Monomial& m, std::array<int, 4>& binding) {
  if (p.kind != m.kind) return false;
  const std::array<int, 2> idx{m.i, m.j};
  for (int t = 0; t < arity(p.kind); ++t) {
    const int var = p.vars[static_cast<std::size_t>(t)];
    const int value = idx[static_cast<std::size_t>(t)];
    int& slot = binding[static_cast<std::size_t>(var)];
    if (slot >= 0) {
      if (slot != value) return false;
      continue;
    }
    for (int other : binding) {
      if (other == value) return false;
    }
    slot = value;
  }
  return true;
}

bool matches(const Template& t, const Monomial& left, const Monomial& right) {
  std::array<int, 4> binding{-1, -1, -1, -1};
  return bind(t.left, left, binding) && bind(t.right, right, binding);
}

std::string class_name(int cls) {
  if (cls == kZeroClass) return "Z";
  return std::to_string(cls);
}

Index position(int K, const Monomial& m) {
  const Index k = K;
  switch (m.kind) {
    case Kind::psi: return 0;
    case Kind::u: return 1 + m.i;
    case Kind::v: return 1 + k + m.i;
    case Kind::uv: return 1 + 2 * k + m.i * k + m.j;
    case Kind::uu: return 1 + 2 * k + k * k + m.i * (k - 1) + (m.j - (m.j > m.i ? 1 : 0));
    case Kind::vv:
      return 1 + 2 * k + k * k + k * (k - 1) + m.i * (k - 1) + (m.j - (m.j > m.i ? 1 : 0));
  }
  return -1;
}

// Image of a monomial under an index permutation followed by the optional
// b <-> c exchange, as sign * monomial in normal form.
std::pair<int, Monomial> transform(const Monomial& m, const std::vector<int>& perm, bool swap) {
  auto p = [&](int i) { return i < 0 ? i : perm[static_cast<std::size_t>(i)]; };
  Monomial out{m.kind, p(m.i), p(m.j)};
  if (!swap) return {1, out};
  switch (m.kind) {
    case Kind::psi: return {1, out};
    case Kind::u: out.kind = Kind::v; return {1, out};
    case Kind::v: out.kind = Kind::u; return {1, out};
    case Kind::uu: out.kind = Kind::vv; return {1, out};
    case Kind::vv: out.kind = Kind::uu; return {1, out};
    case Kind::uv:
      // c_i b_j = -b_j c_i for i != j
      if (out.i == out.j) return {1, out};
      std::swap(out.i, out.j);
      return {-1, out};
  }
  return {1, out};
}

struct Moments {
  Eigen::MatrixXd gram;  // group-averaged, real
  double value = 0.0;    // <psi|W|psi>
};

// Gram matrix of the index set in the representation
// b_k -> Gamma_k (x) B_k (x) I, c_k -> Gamma_k (x) I (x) C_k.
Moments strategy_moments(int K, const std::vector<Monomial>& index, const Strategy& strat) {
  CliffordFamily family = clifford_family_for(K);
  const Index D = strat.D();
  const CMatrix id = CMatrix::Identity(D, D);
  std::vector<CMatrix> b, c;
  for (int k = 0; k < K; ++k) {
    const CMatrix& g = family.dense()[static_cast<std::size_t>(k)];
    b.push_back(kron(g, kron(strat.B()[static_cast<std::size_t>(k)], id)));
    c.push_back(kron(g, kron(id, strat.C()[static_cast<std::size_t>(k)])));
  }
  EigenPair top = top_eigenpair(build_W(family, strat).matrix);
  const CVector& psi = top.vector;
  const Index n = static_cast<Index>(index.size());
  Eigen::MatrixXcd vecs(psi.size(), n);
  for (Index a = 0; a < n; ++a) {
    const Monomial& m = index[static_cast<std::size_t>(a)];
    const auto i = static_cast<std::size_t>(std::max(m.i, 0));
    const auto j = static_cast<std::size_t>(std::max(m.j, 0));
    switch (m.kind) {
      case Kind::psi: vecs.col(a) = psi; break;
      case Kind::u: vecs.col(a) = b[i] * psi; break;
      case Kind::v: vecs.col(a) = c[i] * psi; break;
      case Kind::uv: vecs.col(a) = b[i] * (c[j] * psi); break;
      case Kind::uu: vecs.col(a) = b[i] * (b[j] * psi); break;
      case Kind::vv: vecs.col(a) = c[i] * (c[j] * psi); break;
    }
  }
  Eigen::MatrixXd gram = (vecs.adjoint() * vecs).real();

  // Average over S_K x {id, swap}.
  Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(n, n);
  std::vector<int> perm(static_cast<std::size_t>(K));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Index> target(static_cast<std::size_t>(n));
  std::vector<int> sign(static_cast<std::size_t>(n));
  double count = 0;
  do {
    for (bool swap : {false, true}) {
      for (Index a = 0; a < n; ++a) {
        auto [s, img] = transform(index[static_cast<std::size_t>(a)], perm, swap);
        target[static_cast<std::size_t>(a)] = position(K, img);
        sign[static_cast<std::size_t>(a)] = s;
      }
      for (Index a = 0; a < n; ++a) {
        for (Index bb = 0; bb < n; ++bb) {
          avg(a, bb) += sign[static_cast<std::size_t>(a)] * sign[static_cast<std::size_t>(bb)] *
                        gram(target[static_cast<std::size_t>(a)], target[static_cast<std::size_t>(bb)]);
        }
      }
      count += 1;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {avg / count, top.value};
}

}  // namespace

std::string Monomial::label() const {
  auto n = [](int x) { return std::to_string(x + 1); };
  switch (kind) {
    case Kind::psi: return "psi";
    case Kind::u: return "u" + n(i);
    case Kind::v: return "v" + n(i);
    case Kind::uv: return "u" + n(i) + "v" + n(j);
    case Kind::uu: return "u" + n(i) + "u" + n(j);
    case Kind::vv: return "v" + n(i) + "v" + n(j);
  }
  return "?";
}

std::vector<Monomial> npa2_index_set(int K) {
  std::vector<Monomial> out;
  out.push_back({Kind::psi, -1, -1});
  for (int i = 0; i < K; ++i) out.push_back({Kind::u, i, -1});
  for (int i = 0; i < K; ++i) out.push_back({Kind::v, i, -1});
  for (int i = 0; i < K; ++i) {
    for (int j = 0; j < K; ++j) out.push_back({Kind::uv, i, j});
  }
  for (Kind kind : {Kind::uu, Kind::vv}) {
    for (int i = 0; i < K; ++i) {
      for (int j = 0; j < K; ++j) {
        if (i != j) out.push_back({kind, i, j});
      }
    }
  }
  return out;
}

std::string_view default_classification() { return kClassification; }

std::vector<ClassPattern> parse_classification(std::string_view text) {
  std::vector<ClassPattern> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head) || head[0] == '#') continue;
    int cls;
    if (head == "Z") {
      cls = kZeroClass;
    } else {
      try {
        cls = std::stoi(head);
      } catch (const std::exception&) {
        throw DomainError("classification: bad class '" + head + "'");
      }
      if (cls < 0 || cls > kNpa2Classes) throw DomainError("classification: class out of range");
    }
    std::string pat;
    while (tokens >> pat) {
      if (pat.size() < 2 || (pat[0] != '+' && pat[0] != '-')) {
        throw DomainError("classification: pattern needs a sign: '" + pat + "'");
      }
      std::string_view body = std::string_view(pat).substr(1);
      auto bar = body.find('|');
      if (bar == std::string_view::npos) throw DomainError("classification: missing '|' in " + pat);
      parse_mono(body.substr(0, bar), body);
      parse_mono(body.substr(bar + 1), body);
      out.push_back({cls, pat[0] == '-' ? -1 : 1, std::string(body)});
    }
  }
  return out;
}

RMatrix NPA2Structure::pencil(const RVector& g) const {
  if (g.size() != kNpa2Classes) throw DomainError("pencil: expected 18 parameters");
  RMatrix m = G[0].to_dense();
  for (int c = 1; c <= kNpa2Classes; ++c) G[static_cast<std::size_t>(c)].add_to(m, g(c - 1));
  return m;
}

NPA2Structure build_structure(int K) {
  return build_structure(K, parse_classification(kClassification));
}

NPA2Structure build_structure(int K, const std::vector<ClassPattern>& table) {
  if (K < 2) throw DomainError("level-2 structure needs K >= 2, got " + std::to_string(K));
  std::vector<Template> templates;
  for (const ClassPattern& cp : table) {
    auto bar = cp.text.find('|');
    if (bar == std::string::npos) throw DomainError("classification: missing '|' in " + cp.text);
    std::string_view whole = cp.text;
    templates.push_back({cp.cls, cp.sign, parse_mono(whole.substr(0, bar), whole),
                         parse_mono(whole.substr(bar + 1), whole), &cp.text});
  }
  // Templates bucketed by (left kind, right kind).
  std::array<std::vector<const Template*>, kKinds * kKinds> by_kind;
  for (const Template& t : templates) {
    by_kind[static_cast<std::size_t>(static_cast<int>(t.left.kind) * kKinds +
                                     static_cast<int>(t.right.kind))]
        .push_back(&t);
  }

  NPA2Structure s;
  s.K = K;
  s.index_set = npa2_index_set(K);
  const Index n = s.dim();
  s.class_of.assign(static_cast<std::size_t>(n * n), EntryClass{});
  s.G.assign(kNpa2Classes + 1, SymmetricSparse(n));

  for (Index a = 0; a < n; ++a) {
    const Monomial& ma = s.index_set[static_cast<std::size_t>(a)];
    for (Index b = a; b < n; ++b) {
      const Monomial& mb = s.index_set[static_cast<std::size_t>(b)];
      const Template* first = nullptr;
      EntryClass found;
      auto consider = [&](const Monomial& l, const Monomial& r) {
        const auto bucket = static_cast<std::size_t>(static_cast<int>(l.kind) * kKinds +
                                                     static_cast<int>(r.kind));
        for (const Template* t : by_kind[bucket]) {
          if (!matches(*t, l, r)) continue;
          EntryClass ec{t->cls, t->cls == kZeroClass ? 0 : t->sign};
          if (!first) {
            first = t;
            found = ec;
          } else if (ec.cls != found.cls || ec.sign != found.sign) {
            std::ostringstream os;
            os << "conflicting classification of <" << ma.label() << "|" << mb.label()
               << ">: '" << *first->text << "' (class " << class_name(found.cls)
               << ") and '" << *t->text << "' (class " << class_name(ec.cls) << ")";
            throw ConstructionError(os.str());
          }
        }
      };
      consider(ma, mb);
      consider(mb, ma);
      if (!first) {
        throw ConstructionError("no classification line covers <" + ma.label() + "|" +
                                mb.label() + ">");
      }
      s.class_of[static_cast<std::size_t>(a * n + b)] = found;
      s.class_of[static_cast<std::size_t>(b * n + a)] = found;
      if (found.cls != kZeroClass) {
        s.G[static_cast<std::size_t>(found.cls)].add(a, b, found.sign);
      }
    }
  }
  return s;
}

SDProblem npa2_problem(const NPA2Structure& s) {
  SDProblem p;
  p.objective = RVector::Zero(kNpa2Classes);
  p.objective(0) = 2.0 * s.K;
  p.objective(1) = s.K;
  p.base = s.G[0];
  p.pencil.assign(s.G.begin() + 1, s.G.end());
  return p;
}

NPA2Result solve_npa2(int K, const SDPOptions& opts) {
  return solve_npa2(build_structure(K), opts);
}

NPA2Result solve_npa2(const NPA2Structure& s, const SDPOptions& opts) {
  NPA2Result r;
  r.solution = solve(npa2_problem(s), opts);
  r.win_prob = 0.25 + r.solution.objective_value / (4.0 * s.K);
  return r;
}

StructureReport validate_structure(const NPA2Structure& s, std::uint64_t seed) {
  StructureReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  const int K = s.K;
  const Index n = s.dim();
  const Index expected = 1 + 3 * static_cast<Index>(K) * K;
  if (n != expected) fail("index set has " + std::to_string(n) + " entries, expected " + std::to_string(expected));
  if (s.G.size() != kNpa2Classes + 1) {
    fail("expected 19 constraint matrices");
    return rep;
  }

  // Symmetry of the assignment.
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const EntryClass& x = s.at(a, b);
      const EntryClass& y = s.at(b, a);
      if (x.cls != y.cls || x.sign != y.sign) {
        fail("asymmetric assignment at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
  // Entries in {-1, 0, 1} with disjoint supports.
  std::vector<int> owner(static_cast<std::size_t>(n * n), -1);
  for (std::size_t c = 0; c < s.G.size(); ++c) {
    SymmetricSparse g = s.G[c];
    g.compress();
    for (const SymEntry& e : g.entries()) {
      if (e.value != 1.0 && e.value != -1.0) fail("G_" + std::to_string(c) + " has an entry outside {-1, 0, 1}");
      int& o = owner[static_cast<std::size_t>(e.row * n + e.col)];
      if (o >= 0) fail("G_" + std::to_string(o) + " and G_" + std::to_string(c) + " overlap");
      o = static_cast<int>(c);
    }
  }
  double g0_min = min_eigenvalue(s.G[0].to_dense());
  if (g0_min < -1e-12) fail("G_0 alone is not PSD (min eigenvalue " + std::to_string(g0_min) + ")");

  if (K > 7) {
    rep.notes.push_back("moment checks skipped for K > 7");
    return rep;
  }

  // Moments of explicit strategies must be constant on classes.
  struct Case {
    std::string name;
    Strategy strat;
  };
  Rng rng(seed, 0x6e7061);
  std::vector<Case> cases;
  cases.push_back({"identity strategy", identity_strategy(K, 1)});
  cases.push_back({"random strategy", random_strategy(K, 2, rng)});
  constexpr double kTol = 1e-9;
  for (std::size_t ci = 0; ci < cases.size(); ++ci) {
    const Case& cs = cases[ci];
    Moments mom = strategy_moments(K, s.index_set, cs.strat);
    RVector g = RVector::Zero(kNpa2Classes);
    std::vector<bool> seen(kNpa2Classes + 1, false);
    int bad = 0;
    for (Index a = 0; a < n && bad < 5; ++a) {
      for (Index b = a; b < n && bad < 5; ++b) {
        const EntryClass& ec = s.at(a, b);
        const double v = mom.gram(a, b);
        std::string where = cs.name + ": <" + s.index_set[static_cast<std::size_t>(a)].label() +
                            "|" + s.index_set[static_cast<std::size_t>(b)].label() + ">";
        if (ec.cls == kZeroClass) {
          if (std::abs(v) > kTol) {
            fail(where + " should vanish, moment is " + std::to_string(v));
            ++bad;
          }
        } else if (ec.cls == 0) {
          if (std::abs(v - 1.0) > kTol) {
            fail(where + " should be 1, moment is " + std::to_string(v));
            ++bad;
          }
        } else {
          const double val = ec.sign * v;
          auto c = static_cast<std::size_t>(ec.cls);
          if (!seen[c]) {
            seen[c] = true;
            g(ec.cls - 1) = val;
          } else if (std::abs(g(ec.cls - 1) - val) > kTol) {
            fail(where + " breaks class g_" + std::to_string(ec.cls) + " (" + std::to_string(val) +
                 " vs " + std::to_string(g(ec.cls - 1)) + ")");
            ++bad;
          }
        }
      }
    }
    const double min_eig = min_eigenvalue(s.pencil(g));
    const double objective = 2.0 * K * g(0) + K * g(1);
    if (min_eig < -1e-8) fail(cs.name + ": pencil at the moment vector is not PSD");
    if (std::abs(objective - mom.value) > 1e-8) {
      fail(cs.name + ": objective " + std::to_string(objective) + " differs from <psi|W|psi> " +
           std::to_string(mom.value));
    }
    if (ci == 0) {
      rep.g = g;
      rep.min_eig = min_eig;
      rep.objective = objective;
      if (objective < conjecture_bound(K).norm_bound - 1e-8) {
        fail("identity strategy objective below K + 2 sqrt K");
      }
    }
  }
  return rep;
}

void dump_structure(std::ostream& os, const NPA2Structure& s) {
  os << "# K=" << s.K << " dim=" << s.dim() << "\n# row col left right class sign\n";
  const Index n = s.dim();
  for (Index a = 0; a < n; ++a) {
    for (Index b = a; b < n; ++b) {
      const EntryClass& ec = s.at(a, b);
      os << a << ' ' << b << ' ' << s.index_set[static_cast<std::size_t>(a)].label() << ' '
         << s.index_set[static_cast<std::size_t>(b)].label() << ' ' << class_name(ec.cls) << ' '
         << (ec.sign < 0 ? "-" : ec.sign > 0 ? "+" : "0") << '\n';
    }
  }
}

}  // namespace clue
