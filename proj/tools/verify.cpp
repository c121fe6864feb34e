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

#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "clue/clifford.hpp"
#include "clue/game_operator.hpp"
#include "clue/npa2.hpp"
#include "clue/scheme.hpp"
#include "clue/sos.hpp"

namespace clue::cli {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

CheckLine line(std::string name, bool pass, std::string detail) {
  return {std::move(name), pass, std::move(detail)};
}

std::vector<CheckLine> verify_clifford(const VerifyOptions& o) {
  std::vector<CheckLine> out;
  for (int lambda : o.lambdas) {
    CliffordFamily fam = jordan_wigner_generators(lambda, 2 * lambda + 1);
    auto bad = fam.relation_violations();
    out.push_back(line("relations lambda=" + std::to_string(lambda), bad.empty(),
                       std::to_string(bad.size()) + " violating pairs among " +
                           std::to_string(fam.K()) + " generators"));
    if (fam.dim() > kDenseEigenLimit) continue;
    Rng rng(o.seed, static_cast<std::uint64_t>(lambda));
    double worst = 0.0;
    bool pass = true;
    for (int t = 0; t <= o.trials; ++t) {
      std::vector<double> v(static_cast<std::size_t>(fam.K()), 1.0);
      if (t > 0) {
        for (double& x : v) x = rng.normal();
      }
      NormCheck c = linear_combination_norm_check(fam, v, o.tol.norm);
      worst = std::max(worst, std::abs(c.norm - c.expected));
      pass = pass && c.pass;
    }
    out.push_back(line("norm identity lambda=" + std::to_string(lambda), pass,
                       "max deviation " + num(worst)));
  }
  return out;
}

std::vector<CheckLine> verify_scheme(const VerifyOptions& o) {
  std::vector<CheckLine> out;
  for (int lambda : o.lambdas) {
    SchemeInstance inst(lambda);
    double worst_right = 1.0;
    double worst_wrong = 0.0;
    for (int m = 0; m < 2; ++m) {
      for (int k = 1; k <= inst.K(); ++k) {
        Ciphertext ct = encrypt(inst, m, k);
        for (int k2 = 1; k2 <= inst.K(); ++k2) {
          Decryption dec = decrypt(inst, ct.rho, k2, o.seed);
          if (k2 == k) {
            worst_right = std::min(worst_right, dec.probabilities[static_cast<std::size_t>(m)]);
          } else {
            worst_wrong = std::max(worst_wrong, std::abs(dec.probabilities[0] - 0.5));
          }
        }
      }
    }
    out.push_back(line("correct key lambda=" + std::to_string(lambda),
                       worst_right >= 1.0 - o.tol.probability,
                       "min success probability " + num(worst_right)));
    out.push_back(line("wrong key lambda=" + std::to_string(lambda), worst_wrong <= 1e-10,
                       "max |p - 1/2| " + num(worst_wrong)));
  }
  for (int K : o.ks) {
    CliffordFamily fam = clifford_family_for(K);
    Rng rng(o.seed, 0x696e64 + static_cast<std::uint64_t>(K));
    bool pass = true;
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      HermitianMatrix u(random_hermitian_unitary(2 + t % 3, rng));
      NormCheck c = single_decryptor_norm_check(fam, u, o.tol.spectral);
      pass = pass && c.pass;
      worst = std::max(worst, std::abs(c.norm - c.expected));
    }
    out.push_back(line("single decryptor K=" + std::to_string(K), pass,
                       "max |norm - sqrt K| " + num(worst)));
  }
  return out;
}

std::vector<CheckLine> verify_sos_family(const VerifyOptions& o) {
  std::vector<CheckLine> out;
  for (int K : o.ks) {
    CliffordFamily fam = clifford_family_for(K);
    Rng rng(o.seed, 0x736f73 + static_cast<std::uint64_t>(K));
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      Strategy s = random_strategy(K, 2 + t % 2, rng);
      worst = std::max(worst, verify_family_certificate(fam, s, o.tol.residual).residual);
    }
    out.push_back(line("identity K=" + std::to_string(K), worst <= o.tol.residual,
                       "max relative residual " + num(worst)));
    SoSCertificate cert = family_certificate(K);
    bool sign_ok = (K <= 7) ? cert.alpha > 0.0 : cert.alpha < 0.0;
    out.push_back(line("alpha sign K=" + std::to_string(K), sign_ok,
                       "alpha " + num(cert.alpha) +
                           (cert.proves_positivity() ? " (certificate valid)" : " (certificate void)")));
  }
  return out;
}

std::vector<CheckLine> verify_sos_bc23(const VerifyOptions& o) {
  Rng rng(o.seed, 0x626332);
  double worst = 0.0;
  double min_eig = INFINITY;
  for (int t = 0; t < o.trials; ++t) {
    Strategy s = random_strategy(2, 2 + t % 2, rng);
    CertificateCheck c = verify_bc23_certificate(s, o.tol.residual);
    worst = std::max(worst, c.residual);
    min_eig = std::min(min_eig, c.min_eig_P);
  }
  return {line("four-term identity", worst <= o.tol.residual, "max relative residual " + num(worst)),
          line("P_2 positivity", min_eig >= -1e-8, "min eigenvalue " + num(min_eig))};
}

std::vector<CheckLine> verify_strategies(const VerifyOptions& o) {
  static const std::map<int, std::pair<double, double>> kGamma{
      {2, {4, 2}}, {3, {3, 4}},  {4, {6, 6}},   {5, {7, 9}},
      {6, {8, 12}}, {7, {9, 16}}, {8, {10, 20}}, {9, {11, 25}}};
  std::vector<CheckLine> out;
  int gamma_max = 0;
  for (int K : o.ks) {
    if (kGamma.count(K)) gamma_max = std::max(gamma_max, K);
  }
  std::map<int, GammaNorms> gamma;
  if (gamma_max >= 2) {
    for (const auto& g : gamma_strategy_norms(gamma_max)) gamma[g.K] = g;
  }
  for (int K : o.ks) {
    const std::string k = " K=" + std::to_string(K);
    CliffordFamily fam = clifford_family_for(K);
    const double bound = conjecture_bound(K).norm_bound;
    double id = w_norm(fam, identity_strategy(K));
    out.push_back(line("identity strategy" + k, std::abs(id - bound) <= o.tol.spectral,
                       "norm " + num(id) + " vs " + num(bound)));
    if (auto it = kGamma.find(K); it != kGamma.end()) {
      const GammaNorms& g = gamma.at(K);
      double cross = 2.0 * std::sqrt(it->second.second);
      out.push_back(line("gamma strategy" + k, std::abs(g.full - it->second.first) <= 1e-8,
                         "norm " + num(g.full) + " vs " + num(it->second.first)));
      out.push_back(line("gamma cross term" + k, std::abs(g.cross - cross) <= 1e-8,
                         "norm " + num(g.cross) + " vs " + num(cross)));
    }
    if (K <= 7) {
      LowRankStrategy lr = low_rank_strategy(fam, 1, K + 1, o.seed);
      double v = w_norm(fam, lr.strategy);
      out.push_back(line("low-rank strategy" + k, std::abs(v - bound) <= 1e-8,
                         "norm " + num(v) + " vs " + num(bound)));
    }
    Rng rng(o.seed, 0x666c72 + static_cast<std::uint64_t>(K));
    double floor = INFINITY;
    double top = -INFINITY;
    for (int t = 0; t < o.trials; ++t) {
      Strategy s = random_strategy(K, 2 + t % 3, rng);
      SpectrumBounds b = w_spectrum(fam, s);
      floor = std::min(floor, b.min);
      top = std::max(top, b.max);
    }
    out.push_back(line("spectral floor" + k, floor >= -K - o.tol.spectral,
                       "min eigenvalue " + num(floor)));
    out.push_back(line("random strategies below conjecture" + k, top <= bound + o.tol.spectral,
                       "max eigenvalue " + num(top) + " vs " + num(bound)));
  }
  return out;
}

std::vector<CheckLine> verify_npa2_structure(const VerifyOptions& o) {
  std::vector<CheckLine> out;
  for (int K : o.ks) {
    NPA2Structure s = build_structure(K);
    StructureReport rep = validate_structure(s, o.seed);
    std::string detail = "dim " + std::to_string(s.dim());
    for (const auto& f : rep.failures) detail += "; " + f;
    out.push_back(line("structure K=" + std::to_string(K), rep.ok, detail));
  }
  return out;
}

}  // namespace

Tolerances tolerance_profile(const std::string& name) {
  if (name == "paper") return {};
  if (name == "strict") return {1e-12, 1e-11, 1e-11, 1e-14, 1e-10};
  throw std::invalid_argument("unknown tolerance profile '" + name + "'");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty item in list '" + text + "'");
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    int lo = to_int(item.substr(0, dots));
    int hi = to_int(item.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<CheckLine> run_verify(const std::string& target, const VerifyOptions& opts) {
  if (target == "clifford") return verify_clifford(opts);
  if (target == "scheme") return verify_scheme(opts);
  if (target == "sos-family") return verify_sos_family(opts);
  if (target == "sos-bc23") return verify_sos_bc23(opts);
  if (target == "strategies") return verify_strategies(opts);
  if (target == "npa2-structure") return verify_npa2_structure(opts);
  throw std::invalid_argument("unknown verify target '" + target + "'");
}

}  // namespace clue::cli
