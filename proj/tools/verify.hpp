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
#include <string>
#include <vector>

namespace clue::cli {

/** Tolerances selected by --tolerance-profile. */
struct Tolerances {
  double norm = 1e-10;
  double residual = 1e-9;
  double spectral = 1e-9;
  double probability = 1e-12;
  double sdp = 1e-8;
};

/** @throws std::invalid_argument for names other than "paper" and "strict". */
Tolerances tolerance_profile(const std::string& name);

/** Parses "2,4,7", "2..7" and mixtures such as "2..4,8". */
std::vector<int> parse_int_list(const std::string& text);

struct VerifyOptions {
  std::vector<int> ks;
  std::vector<int> lambdas;
  int trials = 20;
  std::uint64_t seed = 1;
  Tolerances tol;
};

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> t{"clifford", "scheme", "sos-family",
                                          "sos-bc23", "strategies", "npa2-structure"};
  return t;
}

/** Runs the check suite for @p target. Throws for an unknown target. */
std::vector<CheckLine> run_verify(const std::string& target, const VerifyOptions& opts);

}  // namespace clue::cli
