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

#include "clue/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "clue/errors.hpp"
#include "clue/game_operator.hpp"
#include "clue/npa1.hpp"
#include "clue/npa2.hpp"

namespace clue {

namespace {

template <typename F>
MethodResult timed(F&& body) {
  MethodResult r;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.value.reset();
    r.status = std::string("error: ") + e.what();
  }
  r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void from_sdp(double win_prob, const SDPSolution& sol, MethodResult& r) {
  r.status = to_string(sol.status);
  if (sol.status == SDPStatus::optimal) r.value = win_prob;
}

std::string cell(const std::optional<double>& v, int precision) {
  if (!v) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, *v);
  return buf;
}

nlohmann::json to_json(const std::optional<MethodResult>& r, bool timings) {
  if (!r) return nullptr;
  nlohmann::json j;
  j["value"] = r->value ? nlohmann::json(*r->value) : nlohmann::json(nullptr);
  j["status"] = r->status;
  if (timings) j["runtime_s"] = r->runtime_s;
  return j;
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::conjecture: return "conjecture";
    case Method::npa1: return "npa1";
    case Method::npa1_sdp: return "npa1-sdp";
    case Method::npa2: return "npa2";
    case Method::seesaw: return "seesaw";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::conjecture, Method::npa1, Method::npa1_sdp, Method::npa2, Method::seesaw}) {
    if (name == to_string(m)) return m;
  }
  throw DomainError("unknown method '" + name + "'");
}

std::optional<double> BoundReport::npa1_column() const {
  if (npa1 && npa1->value) return npa1->value;
  if (npa1_sdp && npa1_sdp->value) return npa1_sdp->value;
  return std::nullopt;
}

std::optional<double> BoundReport::npa1_runtime() const {
  if (npa1) return npa1->runtime_s;
  if (npa1_sdp) return npa1_sdp->runtime_s;
  return std::nullopt;
}

std::vector<std::string> BoundReport::invariant_violations() const {
  std::vector<std::string> bad;
  auto fmt = [](const char* what, double a, double b) {
    std::ostringstream os;
    os.precision(10);
    os << what << " (" << a << " vs " << b << ")";
    return os.str();
  };
  const bool has_lower = seesaw && seesaw->value;
  const bool has_n2 = npa2 && npa2->value;
  const std::optional<double> n1 = npa1_column();
  const double lower = has_lower ? *seesaw->value : 0.0;
  const double n2 = has_n2 ? *npa2->value : 0.0;
  if (has_lower && lower > conjecture + 1e-6) bad.push_back(fmt("seesaw above conjecture", lower, conjecture));
  if (has_n2 && conjecture + 1e-6 > n2 + 2e-3) bad.push_back(fmt("conjecture above npa2", conjecture, n2));
  if (has_n2 && n1 && n2 > *n1 + 1e-6) bad.push_back(fmt("npa2 above npa1", n2, *n1));
  return bad;
}

void check_bounds_request(const std::vector<int>& ks, const std::vector<Method>& methods) {
  if (ks.empty()) throw DomainError("bounds: no K values given");
  bool needs_two = std::any_of(methods.begin(), methods.end(),
                               [](Method m) { return m != Method::conjecture; });
  for (int K : ks) {
    if (K < 1) throw DomainError("bounds: K must be >= 1");
    if (K < 2 && needs_two) {
      throw DomainError("bounds: K = " + std::to_string(K) +
                        " is outside the NPA and seesaw domain (K >= 2)");
    }
  }
}

BoundReport compute_bounds(int K, const BoundsOptions& opts) {
  BoundReport rep;
  rep.K = K;
  rep.conjecture = conjecture_bound(K).win_bound;
  auto wants = [&](Method m) {
    return std::find(opts.methods.begin(), opts.methods.end(), m) != opts.methods.end();
  };
  if (wants(Method::npa1)) {
    rep.npa1 = timed([&](MethodResult& r) {
      r.value = npa1_value(K);
      r.status = "ok";
    });
  }
  if (wants(Method::npa1_sdp)) {
    rep.npa1_sdp = timed([&](MethodResult& r) {
      NPA1Result res = solve_npa1_sdp(K, opts.sdp);
      from_sdp(res.win_prob, res.solution, r);
    });
  }
  if (wants(Method::npa2)) {
    rep.npa2 = timed([&](MethodResult& r) {
      NPA2Result res = solve_npa2(K, opts.sdp);
      from_sdp(res.win_prob, res.solution, r);
    });
  }
  if (wants(Method::seesaw)) {
    rep.seesaw = timed([&](MethodResult& r) {
      double best = -INFINITY;
      std::string status = "ok";
      for (Index D : opts.seesaw_dims) {
        SeesawConfig cfg = opts.seesaw;
        cfg.K = K;
        cfg.D = D;
        SeesawSummary s = run_seesaw(cfg);
        best = std::max(best, s.best_objective);
        if (s.bound_violations > 0) status = "bound violated";
      }
      r.value = win_prob_from_norm(K, best);
      r.status = status;
    });
  }
  return rep;
}

void write_bounds_csv(std::ostream& os, const std::vector<BoundReport>& reports, bool timings) {
  os << "K,conjecture,npa1,npa2,seesaw_lower,npa1_runtime_s,npa2_runtime_s\n";
  for (const auto& r : reports) {
    std::optional<double> t1 = timings ? r.npa1_runtime() : std::nullopt;
    std::optional<double> t2 = timings && r.npa2 ? std::optional(r.npa2->runtime_s) : std::nullopt;
    os << r.K << ',' << cell(r.conjecture, 6) << ',' << cell(r.npa1_column(), 6) << ','
       << cell(r.npa2 ? r.npa2->value : std::nullopt, 6) << ','
       << cell(r.seesaw ? r.seesaw->value : std::nullopt, 6) << ',' << cell(t1, 3) << ','
       << cell(t2, 3) << '\n';
  }
}

void write_bounds_json(std::ostream& os, const std::vector<BoundReport>& reports, bool timings) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["K"] = r.K;
    j["conjecture"] = r.conjecture;
    j["npa1"] = to_json(r.npa1, timings);
    j["npa1_sdp"] = to_json(r.npa1_sdp, timings);
    j["npa2"] = to_json(r.npa2, timings);
    j["seesaw_lower"] = to_json(r.seesaw, timings);
    j["invariant_violations"] = r.invariant_violations();
    out.push_back(std::move(j));
  }
  os << out.dump(2) << '\n';
}

}  // namespace clue
