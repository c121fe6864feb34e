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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "clue/sdp.hpp"
#include "clue/seesaw.hpp"

namespace clue {

enum class Method { conjecture, npa1, npa1_sdp, npa2, seesaw };

const char* to_string(Method m);

/** Parses "conjecture", "npa1", "npa1-sdp", "npa2", "seesaw". */
Method parse_method(const std::string& name);

/** One cell of a report: a winning probability or the reason it is missing. */
struct MethodResult {
  std::optional<double> value;
  /// "ok", an SDP status, or "error: ...".
  std::string status;
  double runtime_s = 0.0;
};

/** Bounds on the winning probability for one K. */
struct BoundReport {
  int K = 0;
  double conjecture = 0.0;
  std::optional<MethodResult> npa1;
  std::optional<MethodResult> npa1_sdp;
  std::optional<MethodResult> npa2;
  std::optional<MethodResult> seesaw;

  /// The npa1 column: the closed form if computed, else the SDP value.
  [[nodiscard]] std::optional<double> npa1_column() const;
  [[nodiscard]] std::optional<double> npa1_runtime() const;

  /**
   * seesaw <= conjecture + 1e-6 <= npa2 + 2e-3 and npa2 <= npa1 + 1e-6 for
   * the cells present. Returns the violated relations.
   */
  [[nodiscard]] std::vector<std::string> invariant_violations() const;
};

struct BoundsOptions {
  std::vector<Method> methods{Method::conjecture, Method::npa1, Method::npa2};
  SDPOptions sdp;
  /// Seesaw settings; K and D are overwritten per run.
  SeesawConfig seesaw;
  std::vector<Index> seesaw_dims{2};
};

/**
 * @throws DomainError if K < 2 and an NPA or seesaw method is requested, or
 * K < 1.
 */
void check_bounds_request(const std::vector<int>& ks, const std::vector<Method>& methods);

/** Backend failures are recorded in the cell; nothing else throws. */
BoundReport compute_bounds(int K, const BoundsOptions& opts);

/// CSV with header K,conjecture,npa1,npa2,seesaw_lower,npa1_runtime_s,npa2_runtime_s.
/// Runtime cells stay empty unless @p timings is set.
void write_bounds_csv(std::ostream& os, const std::vector<BoundReport>& reports, bool timings);
void write_bounds_json(std::ostream& os, const std::vector<BoundReport>& reports, bool timings);

}  // namespace clue
