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

// Acceptance run: one PASS/FAIL line per criterion. Set CLUE_ACCEPTANCE_LONG=1
// to add the optional K = 25 and K = 35 level-2 solves.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "clue/clifford.hpp"
#include "clue/game_operator.hpp"
#include "clue/npa1.hpp"
#include "clue/npa2.hpp"
#include "clue/scheme.hpp"
#include "clue/seesaw.hpp"
#include "clue/sos.hpp"

using namespace clue;

namespace {

// Tolerances and runtime limits, in the order of the criteria.
constexpr double kNormTol = 1e-10;           // 2
constexpr double kDecryptTol = 1e-12;        // 3
constexpr double kWrongKeyTol = 1e-10;       // 3
constexpr double kTableTol = 5e-5;           // 4: four decimals
constexpr double kNpa1SdpTol = 1e-6;         // 5
constexpr double kNpa2TableTol = 5e-4;       // 6
constexpr double kSosTol = 1e-9;             // 7, 8
constexpr double kPositivityTol = 1e-8;      // 8
constexpr double kIdentityTol = 1e-9;        // 9
constexpr double kGammaTol = 1e-8;           // 9
constexpr double kFloorTol = 1e-9;           // 10
constexpr double kSingleTol = 1e-9;          // 11
constexpr double kMonotoneTol = 1e-9;        // 12
constexpr double kLogRatioTol = 1e-9;        // 12
constexpr double kK18BoundTol = 1e-7;        // 12

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = limit_s <= 0 || sec < limit_s;
  bool pass = o.pass && in_time;
  if (!pass) ++g_failures;
  std::printf("%s [%2d] %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              sec, in_time ? "" : ", over the runtime limit");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "exact anti-commutation, lambda = 1..6", 1.0, [] {
    std::size_t bad = 0;
    for (int lambda = 1; lambda <= 6; ++lambda) {
      bad += jordan_wigner_generators(lambda, 2 * lambda + 1).relation_violations().size();
    }
    return Outcome{bad == 0, std::to_string(bad) + " violating pairs"};
  });

  criterion(2, "norm identity, K = 2..9, 50 vectors each plus all-ones", 30.0, [] {
    double worst = 0.0;
    Rng rng(2);
    for (int K = 2; K <= 9; ++K) {
      CliffordFamily fam = clifford_family_for(K);
      for (int t = 0; t <= 50; ++t) {
        std::vector<double> v(static_cast<std::size_t>(K), 1.0);
        if (t > 0) {
          for (double& x : v) x = rng.normal();
        }
        NormCheck c = linear_combination_norm_check(fam, v, kNormTol);
        worst = std::max(worst, std::abs(c.norm - c.expected));
      }
    }
    return Outcome{worst <= kNormTol, fmt("max deviation %.2e", worst)};
  });

  criterion(3, "scheme correctness, lambda = 1..5", 10.0, [] {
    double worst_right = 1.0, worst_wrong = 0.0;
    for (int lambda = 1; lambda <= 5; ++lambda) {
      SchemeInstance inst(lambda);
      for (int m = 0; m < 2; ++m) {
        for (int k = 1; k <= inst.K(); ++k) {
          Ciphertext ct = encrypt(inst, m, k);
          for (int k2 = 1; k2 <= inst.K(); ++k2) {
            Decryption d = decrypt(inst, ct.rho, k2, 3);
            if (k2 == k) {
              worst_right = std::min(worst_right, d.probabilities[static_cast<std::size_t>(m)]);
            } else {
              worst_wrong = std::max(worst_wrong, std::abs(d.probabilities[0] - 0.5));
            }
          }
        }
      }
    }
    return Outcome{worst_right >= 1 - kDecryptTol && worst_wrong <= kWrongKeyTol,
                   fmt("min correct-key probability %.15f, max wrong-key |p - 1/2| %.2e",
                       worst_right, worst_wrong)};
  });

  criterion(4, "level-1 closed form vs table", 1.0, [] {
    const std::pair<int, double> table[] = {{2, 0.8536},  {4, 0.7500},  {7, 0.6890},  {8, 0.6771},
                                            {12, 0.6542}, {16, 0.6451}, {17, 0.6436}, {18, 0.6424},
                                            {25, 0.6367}, {35, 0.6330}};
    double worst = 0.0;
    for (auto [K, v] : table) worst = std::max(worst, std::abs(npa1_value(K) - v));
    return Outcome{worst <= kTableTol, fmt("max deviation %.2e", worst)};
  });

  criterion(5, "level-1 SDP vs closed form, K = 2..25", 60.0, [] {
    double worst = 0.0;
    int not_optimal = 0;
    for (int K = 2; K <= 25; ++K) {
      NPA1Result r = solve_npa1_sdp(K);
      if (r.solution.status != SDPStatus::optimal) ++not_optimal;
      worst = std::max(worst, std::abs(r.win_prob - npa1_value(K)));
    }
    return Outcome{not_optimal == 0 && worst <= kNpa1SdpTol,
                   fmt("max deviation %.2e, %g non-optimal solves", worst, not_optimal)};
  });

  criterion(6, "level-2 SDP vs table, K = 4, 7, 8, 12, 16, 17, 18", 0.0, [] {
    const std::pair<int, double> table[] = {{4, 0.7500},  {7, 0.6890},  {8, 0.6768}, {12, 0.6443},
                                            {16, 0.6250}, {17, 0.6213}, {18, 0.6182}};
    Outcome o;
    for (auto [K, v] : table) {
      auto t0 = std::chrono::steady_clock::now();
      NPA2Result r = solve_npa2(K);
      double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      double conj = conjecture_bound(K).win_bound;
      bool ok = r.solution.status == SDPStatus::optimal && std::abs(r.win_prob - v) <= kNpa2TableTol &&
                r.win_prob >= conj - 1e-4 && r.win_prob <= npa1_value(K) + 1e-6;
      o.pass = o.pass && ok;
      o.detail += fmt("K=%g %.4f", K, r.win_prob) + fmt(" [%.0fs]", sec) + (ok ? "" : " (off)") + "; ";
    }
    if (std::getenv("CLUE_ACCEPTANCE_LONG")) {
      for (auto [K, v] : {std::pair<int, double>{25, 0.6062}, {35, 0.5980}}) {
        NPA2Result r = solve_npa2(K);
        bool ok = r.solution.status == SDPStatus::optimal && std::abs(r.win_prob - v) <= kNpa2TableTol;
        o.pass = o.pass && ok;
        o.detail += fmt("K=%g %.4f", K, r.win_prob) + (ok ? "" : " (off)") + "; ";
      }
    } else {
      o.detail += "K=25, 35 skipped (optional)";
    }
    return o;
  });

  criterion(7, "sum-of-squares family, K = 2..8", 120.0, [] {
    double worst = 0.0;
    Rng rng(7);
    for (int K = 2; K <= 8; ++K) {
      CliffordFamily fam = clifford_family_for(K);
      for (int t = 0; t < 20; ++t) {
        Strategy s = random_strategy(K, 2 + t % 2, rng);
        worst = std::max(worst, verify_family_certificate(fam, s, kSosTol).residual);
      }
    }
    bool signs = alpha_coefficient(8) < 0;
    for (int K = 2; K <= 7; ++K) signs = signs && alpha_coefficient(K) > 0;
    return Outcome{worst <= kSosTol && signs,
                   fmt("max residual %.2e, alpha_7 = %.5f, alpha_8 = %.5f", worst, alpha_coefficient(7),
                       alpha_coefficient(8))};
  });

  criterion(8, "two-key four-term certificate", 30.0, [] {
    double worst = 0.0, min_eig = INFINITY;
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
      CertificateCheck c = verify_bc23_certificate(random_strategy(2, 2 + t % 2, rng), kSosTol);
      worst = std::max(worst, c.residual);
      min_eig = std::min(min_eig, c.min_eig_P);
    }
    return Outcome{worst <= kSosTol && min_eig >= -kPositivityTol,
                   fmt("max residual %.2e, min eigenvalue of P_2 %.2e", worst, min_eig)};
  });

  criterion(9, "special strategies", 300.0, [] {
    double id_dev = 0.0, gamma_dev = 0.0, cross_dev = 0.0, low_dev = 0.0;
    for (int K = 2; K <= 9; ++K) {
      id_dev = std::max(id_dev, std::abs(w_norm(clifford_family_for(K), identity_strategy(K)) -
                                         conjecture_bound(K).norm_bound));
    }
    const double full[] = {4, 3, 6, 7, 8, 9, 10, 11};
    const double cross_sq[] = {2, 4, 6, 9, 12, 16, 20, 25};
    auto norms = gamma_strategy_norms(9);
    for (std::size_t i = 0; i < norms.size(); ++i) {
      gamma_dev = std::max(gamma_dev, std::abs(norms[i].full - full[i]));
      cross_dev = std::max(cross_dev, std::abs(norms[i].cross - 2 * std::sqrt(cross_sq[i])));
    }
    for (int K = 2; K <= 7; ++K) {
      CliffordFamily fam = clifford_family_for(K);
      LowRankStrategy lr = low_rank_strategy(fam, 1, K + 1, 9);
      low_dev = std::max(low_dev, std::abs(w_norm(fam, lr.strategy) - conjecture_bound(K).norm_bound));
    }
    Outcome o{id_dev <= kIdentityTol && gamma_dev <= kGammaTol && cross_dev <= kGammaTol &&
                  low_dev <= kGammaTol && norms.size() == 8,
              fmt("identity %.1e, gamma %.1e, cross %.1e", id_dev, gamma_dev, cross_dev)};
    o.detail += fmt(", low-rank %.1e", low_dev);
    return o;
  });

  criterion(10, "spectral floor, 200 random strategies", 120.0, [] {
    double margin = INFINITY;
    Rng rng(10);
    int n = 0;
    for (int t = 0; t < 200; ++t) {
      int K = 2 + t % 5;
      Index D = 2 + (t / 5) % 3;
      SpectrumBounds b = w_spectrum(clifford_family_for(K), random_strategy(K, D, rng));
      margin = std::min(margin, b.min + K);
      ++n;
    }
    return Outcome{margin >= -kFloorTol && n == 200, fmt("min (lambda_min + K) = %.3e", margin)};
  });

  criterion(11, "single decryptor norm, K = 2..8", 60.0, [] {
    double worst = 0.0;
    Rng rng(11);
    for (int K = 2; K <= 8; ++K) {
      CliffordFamily fam = clifford_family_for(K);
      for (int t = 0; t < 20; ++t) {
        HermitianMatrix u(random_hermitian_unitary(2 + t % 3, rng));
        NormCheck c = single_decryptor_norm_check(fam, u, kSingleTol);
        worst = std::max(worst, std::abs(c.norm - c.expected));
      }
    }
    return Outcome{worst <= kSingleTol, fmt("max |norm - sqrt K| %.2e", worst)};
  });

  criterion(12, "seesaw traces, K = 3 (D = 2, 3, 4; 100 runs) and K = 18 (D = 2; 10 runs)", 1800.0,
            [] {
              Outcome o;
              auto check = [&](int K, Index D, int instances) {
                SeesawConfig cfg;
                cfg.K = K;
                cfg.D = D;
                cfg.instances = instances;
                cfg.seed = 12;
                SeesawSummary s = run_seesaw(cfg);
                double worst_log = -INFINITY;
                for (const auto& inst : s.instances) {
                  for (double v : inst.trace) worst_log = std::max(worst_log, std::log(v / s.bound));
                }
                bool ok = s.worst_decrease <= kMonotoneTol && worst_log <= kLogRatioTol;
                if (K == 18) ok = ok && s.best_objective <= s.bound + kK18BoundTol;
                o.pass = o.pass && ok;
                o.detail += fmt("K=%g D=%g max log-ratio %.1e", K, static_cast<double>(D), worst_log) +
                            fmt(" max drop %.1e", s.worst_decrease) + (ok ? "" : " (off)") + "; ";
              };
              for (Index D : {2, 3, 4}) check(3, D, 100);
              check(18, 2, 10);
              return o;
            });

  std::printf(
      "INFO [13] the conjectured bound is not proven here for K >= 8; the lines above are "
      "numerical evidence only\n");
  std::printf("%d criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
