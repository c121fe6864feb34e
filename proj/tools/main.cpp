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

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "clue/bounds.hpp"
#include "clue/errors.hpp"
#include "clue/npa1.hpp"
#include "clue/npa2.hpp"
#include "clue/sdp.hpp"
#include "clue/seesaw.hpp"
#include "verify.hpp"

namespace {

using namespace clue;
using cli::parse_int_list;

enum Exit : int { kOk = 0, kValidation = 1, kSolver = 2, kUsage = 3 };

constexpr const char* kEnvPrefix = "CLUE_";

// Pre-scan for --config so its values can become option defaults before the
// real parse; the command line then overrides them.
std::string find_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return {};
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string text;
  int lineno = 0;
  while (std::getline(in, text)) {
    ++lineno;
    text = trim(text);
    if (text.empty() || text[0] == '#') continue;
    auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    out[trim(text.substr(0, eq))] = trim(text.substr(eq + 1));
  }
  return out;
}

std::string env_name(const std::string& key) {
  std::string e = kEnvPrefix;
  for (char c : key) e.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(c)));
  return e;
}

// Env vars first, then the config file on top; both only set defaults.
void apply_settings(CLI::App& app, const std::string& config_path) {
  std::map<std::string, std::string> file;
  if (!config_path.empty()) file = read_config(config_path);
  std::map<std::string, bool> known;
  std::vector<CLI::App*> apps{&app};
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) apps.push_back(sub);
  for (CLI::App* a : apps) {
    for (CLI::Option* opt : a->get_options()) {
      const std::string key = opt->get_single_name();
      if (key.empty() || key == "config" || key == "help") continue;
      known[key] = true;
      std::string value;
      if (const char* env = std::getenv(env_name(key).c_str())) value = env;
      if (auto it = file.find(key); it != file.end()) value = it->second;
      if (!value.empty()) opt->default_val(value);
    }
  }
  for (const auto& [key, value] : file) {
    if (!known.count(key)) throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot write '" + path + "'");
  return file;
}

SDPOptions sdp_options(const cli::Tolerances& tol) {
  SDPOptions o;
  o.feasibility_tol = tol.sdp;
  o.gap_tol = tol.sdp;
  return o;
}

struct BoundsArgs {
  std::string k;
  std::string methods = "conjecture,npa1,npa2";
  std::string format = "csv";
  std::string out;
  bool timings = false;
  int instances = 10;
  int iters = 10;
  std::string dims = "2";
  std::uint64_t seed = 1;
  int threads = 0;
};

int cmd_bounds(const BoundsArgs& a, const cli::Tolerances& tol) {
  std::vector<int> ks = parse_int_list(a.k);
  BoundsOptions opts;
  opts.methods.clear();
  std::stringstream ss(a.methods);
  for (std::string m; std::getline(ss, m, ',');) opts.methods.push_back(parse_method(m));
  check_bounds_request(ks, opts.methods);
  opts.sdp = sdp_options(tol);
  opts.seesaw.instances = a.instances;
  opts.seesaw.iterations = a.iters;
  opts.seesaw.seed = a.seed;
  opts.seesaw.threads = a.threads;
  opts.seesaw_dims.clear();
  for (int d : parse_int_list(a.dims)) opts.seesaw_dims.push_back(d);

  std::vector<BoundReport> reports;
  int rc = kOk;
  for (int K : ks) {
    reports.push_back(compute_bounds(K, opts));
    const BoundReport& r = reports.back();
    for (const auto* cellp : {&r.npa1, &r.npa1_sdp, &r.npa2, &r.seesaw}) {
      if (*cellp && (*cellp)->status != "ok" && (*cellp)->status != "optimal") {
        std::cerr << "K=" << K << ": " << (*cellp)->status << "\n";
        rc = std::max<int>(rc, kSolver);
      }
    }
    for (const auto& v : r.invariant_violations()) {
      std::cerr << "K=" << K << ": invariant violated: " << v << "\n";
      rc = kValidation;
    }
  }
  std::ofstream file;
  std::ostream& os = open_out(a.out, file);
  if (a.format == "json") {
    write_bounds_json(os, reports, a.timings);
  } else {
    write_bounds_csv(os, reports, a.timings);
  }
  return rc;
}

int cmd_verify(const std::string& target, const std::string& k, const std::string& lambdas,
               int trials, std::uint64_t seed, const cli::Tolerances& tol) {
  cli::VerifyOptions o;
  o.trials = trials;
  o.seed = seed;
  o.tol = tol;
  std::string k_default = "2..8";
  if (target == "strategies") k_default = "2..9";
  if (target == "npa2-structure") k_default = "2..6";
  o.ks = parse_int_list(k.empty() ? k_default : k);
  o.lambdas = parse_int_list(lambdas.empty() ? (target == "scheme" ? "1..5" : "1..6") : lambdas);
  bool ok = true;
  for (const auto& c : cli::run_verify(target, o)) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    ok = ok && c.pass;
  }
  return ok ? kOk : kValidation;
}

struct SeesawArgs {
  int k = 3;
  int lambda = 0;
  std::string dims = "2,3,4";
  int instances = 0;
  int iters = 10;
  std::uint64_t seed = 1;
  std::string out;
  int threads = 0;
  long max_dim = 4096;
};

int cmd_seesaw(const SeesawArgs& a) {
  SeesawConfig cfg;
  cfg.K = a.k;
  cfg.lambda = a.lambda;
  cfg.iterations = a.iters;
  cfg.instances = a.instances > 0 ? a.instances : (a.k >= 18 ? 10 : 100);
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  cfg.max_dim = a.max_dim;
  std::vector<SeesawSummary> runs;
  for (int D : parse_int_list(a.dims)) {
    cfg.D = D;
    runs.push_back(run_seesaw(cfg));
  }
  std::ofstream file;
  std::ostream& os = open_out(a.out, file);
  write_seesaw_csv_header(os);
  int rc = kOk;
  for (const auto& s : runs) {
    write_seesaw_csv(os, s);
    std::cerr << "K=" << s.K << " D=" << s.D << " instances=" << s.instances.size()
              << " best=" << s.best_objective << " bound=" << s.bound
              << " log_ratio=" << s.best_log_relative_error
              << " worst_decrease=" << s.worst_decrease << "\n";
    if (s.worst_decrease > 1e-9) {
      std::cerr << "monotonicity violated: decrease " << s.worst_decrease << "\n";
      rc = kValidation;
    }
    if (s.bound_violations > 0) {
      std::cerr << "\n*** CONJECTURE BOUND EXCEEDED: " << s.bound_violations
                << " instance(s) at K=" << s.K << ", D=" << s.D << " went above K + 2 sqrt K = "
                << s.bound << " ***\n\n";
      rc = kValidation;
    }
  }
  return rc;
}

int cmd_npa2_dump(int K, const std::string& out) {
  NPA2Structure s = build_structure(K);
  std::ofstream file;
  dump_structure(open_out(out, file), s);
  return kOk;
}

int cmd_export_sdp(const std::string& problem, int K, const std::string& out) {
  SDProblem p = problem == "npa1" ? npa1_problem(K) : npa2_problem(build_structure(K));
  std::ofstream file;
  write_pencil(open_out(out, file), p);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on the no-cloning game of the Clifford uncloneable-bit scheme"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::string profile = "paper";
  app.add_option("--config", config_path, "key=value file; flags override it, it overrides CLUE_* env vars");
  app.add_option("--tolerance-profile", profile, "paper or strict")
      ->check(CLI::IsMember({"paper", "strict"}));

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Per-K bound table (CSV or JSON)");
  bounds->add_option("--k", ba.k, "K values, e.g. 2,4,7 or 2..8")->required();
  bounds->add_option("--methods", ba.methods, "subset of conjecture,npa1,npa1-sdp,npa2,seesaw");
  bounds->add_option("--format", ba.format)->check(CLI::IsMember({"csv", "json"}));
  bounds->add_option("--out", ba.out, "output file (default stdout)");
  bounds->add_flag("--timings", ba.timings, "fill the runtime columns");
  bounds->add_option("--instances", ba.instances, "seesaw instances");
  bounds->add_option("--iters", ba.iters, "seesaw rounds");
  bounds->add_option("--dims", ba.dims, "seesaw D values");
  bounds->add_option("--seed", ba.seed);
  bounds->add_option("--threads", ba.threads);

  std::string vtarget, vk, vlambda;
  int vtrials = 20;
  std::uint64_t vseed = 1;
  auto* verify = app.add_subcommand("verify", "Run a named check suite");
  verify->add_option("target", vtarget)->required()->check(CLI::IsMember(cli::verify_targets()));
  verify->add_option("--k", vk, "K values");
  verify->add_option("--lambda", vlambda, "lambda values (clifford, scheme)");
  verify->add_option("--trials", vtrials, "random trials per case");
  verify->add_option("--seed", vseed);

  SeesawArgs sa;
  auto* seesaw = app.add_subcommand("seesaw", "Seesaw traces (CSV)");
  seesaw->add_option("--k", sa.k)->required();
  seesaw->add_option("--lambda", sa.lambda, "qubits (default: smallest that fits K)");
  seesaw->add_option("--dims", sa.dims, "D values");
  seesaw->add_option("--instances", sa.instances, "default 100, or 10 for K >= 18");
  seesaw->add_option("--iters", sa.iters, "rounds M");
  seesaw->add_option("--seed", sa.seed);
  seesaw->add_option("--out", sa.out);
  seesaw->add_option("--threads", sa.threads);
  seesaw->add_option("--max-dim", sa.max_dim, "refuse d * D^2 above this");

  int dump_k = 0;
  std::string dump_out;
  auto* dump = app.add_subcommand("npa2-dump", "Text dump of the level-2 structure");
  dump->add_option("--k", dump_k)->required();
  dump->add_option("--out", dump_out);

  std::string ex_problem = "npa2", ex_out;
  int ex_k = 0;
  auto* exp = app.add_subcommand("export-sdp", "Write an SDP pencil in text form");
  exp->add_option("--problem", ex_problem)->check(CLI::IsMember({"npa1", "npa2"}));
  exp->add_option("--k", ex_k)->required();
  exp->add_option("--out", ex_out);

  try {
    apply_settings(app, find_config_path(argc, argv));
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    cli::Tolerances tol = cli::tolerance_profile(profile);
    if (*bounds) return cmd_bounds(ba, tol);
    if (*verify) return cmd_verify(vtarget, vk, vlambda, vtrials, vseed, tol);
    if (*seesaw) return cmd_seesaw(sa);
    if (*dump) return cmd_npa2_dump(dump_k, dump_out);
    if (*exp) return cmd_export_sdp(ex_problem, ex_k, ex_out);
  } catch (const NumericalFailure& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kSolver;
  } catch (const ConstructionError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSolver;
  }
  return kUsage;
}
