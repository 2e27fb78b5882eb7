// Copyright 2026 The Authors.
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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "volrig/complex.hpp"
#include "volrig/errors.hpp"
#include "volrig/generic_rank.hpp"
#include "volrig/geometry.hpp"
#include "volrig/json_io.hpp"
#include "volrig/rigidity_matrices.hpp"
#include "volrig/verifiers.hpp"

namespace volrig::cli {

namespace {

constexpr int kGridMaxD = 6;
constexpr int kGridMaxN = 10;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("VOLRIG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("VOLRIG_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad " + what + " \"" + s + "\"");
}

// delta:n:k, complete-graph:n or example41.
SimplicialComplex builtin_complex(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() == 1 && parts[0] == "example41") return build_example_41().complex;
  if (parts.size() == 3 && parts[0] == "delta") {
    return complete_complex(parse_int(parts[1], "n"), parse_int(parts[2], "k"));
  }
  if (parts.size() == 2 && parts[0] == "complete-graph") {
    return complete_complex(parse_int(parts[1], "n"), 1);
  }
  throw ParseError("unknown builtin \"" + spec + "\"");
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

RationalMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return matrix_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad table: ") + e.what());
  }
}

struct Source {
  std::string input;
  std::string builtin;

  bool given() const { return !input.empty() || !builtin.empty(); }
  SimplicialComplex load() const {
    if (!input.empty() && !builtin.empty()) {
      throw ParameterError("give either --input or --builtin, not both");
    }
    if (!input.empty()) return read_complex_file(input);
    if (!builtin.empty()) return builtin_complex(builtin);
    throw ParameterError("a complex is required (--input or --builtin)");
  }
};

struct RankFlags {
  int trials = 3;
  std::uint64_t seed = 1;
  std::string mode = "modp";
  int bits = 20;

  RankConfig config() const {
    RankConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.mode = rank_mode_from_string(mode);
    cfg.bits = bits;
    return cfg;
  }
};

void add_rank_flags(CLI::App* app, RankFlags& f) {
  app->add_option("--trials", f.trials, "random embeddings per rank");
  app->add_option("--seed", f.seed, "base seed (default $VOLRIG_SEED or 1)");
  app->add_option("--mode", f.mode, "exact | modp");
  app->add_option("--bits", f.bits, "coordinate size of random embeddings");
}

void add_source_flags(CLI::App* app, Source& s) {
  app->add_option("--input", s.input, "JSON complex file");
  app->add_option("--builtin", s.builtin, "delta:n:k | complete-graph:n | example41");
}

RankReport rank_of(const SimplicialComplex& x, const std::string& matrix, int d,
                   bool free_lengths, const RankConfig& cfg) {
  if (matrix == "B") return generic_rank_B(x, d, cfg);
  if (matrix == "R") return generic_rank_R(one_skeleton(x), d, cfg);
  if (matrix == "C") {
    return generic_rank_C(x, cfg, free_lengths ? LengthMode{} : LengthMode{d});
  }
  if (matrix == "L") {
    if (x.dim() < 1 || d < x.dim()) throw ParameterError("L needs 1 <= dim <= d");
    const long bound = std::min<long>(static_cast<long>(x.count(x.dim())),
                                      static_cast<long>(d * x.count(x.dim() - 1)));
    return max_rank_over_trials(
        [&](std::uint64_t s) {
          return build_L_D_P(x, random_rational_embedding(x.n_vertices(), d, s, cfg.bits))
              .l.matrix;
        },
        bound, cfg);
  }
  throw ParameterError("unknown matrix \"" + matrix + "\" (expected B|C|R|L)");
}

void pretty_verdicts(const std::vector<Verdict>& vs, std::ostream& err) {
  err << std::left << std::setw(10) << "claim" << std::setw(20) << "params"
      << std::setw(8) << "pass" << std::setw(12) << "mode" << "ms\n";
  for (const Verdict& v : vs) {
    std::string params;
    for (const auto& [key, val] : v.params.items()) {
      if (val.is_number()) params += key + "=" + val.dump() + " ";
    }
    err << std::left << std::setw(10) << v.claim << std::setw(20) << params
        << std::setw(8) << (v.pass ? "yes" : "NO") << std::setw(12) << v.mode
        << std::fixed << std::setprecision(1) << v.runtime_ms << "\n";
  }
}

struct CheckFlags {
  std::string claim;
  int d = 3;
  int k = 2;
  int n = 5;
  std::optional<int> vertex;
  std::string table;
  bool stretch = false;
  std::size_t budget = std::size_t{1} << 16;
  Source source;
  RankFlags rank;
  bool pretty = false;
};

Verdict run_check(const CheckFlags& f) {
  VerifyConfig cfg;
  cfg.rank = f.rank.config();
  cfg.stretch = f.stretch;
  cfg.hall.budget = f.budget;
  auto complex = [&] {
    return f.source.given() ? f.source.load() : complete_complex(f.n, f.k);
  };
  if (f.claim == "theorem1") return check_theorem1(f.d, f.k, f.n, cfg);
  if (f.claim == "prop33") return check_prop33(f.d, cfg);
  if (f.claim == "kd") return check_k_equals_d(f.d, f.n, cfg);
  if (f.claim == "lemma21") {
    const SimplicialComplex x = complex();
    return check_vertex_addition(x, f.vertex.value_or(x.n_vertices() - 1), f.d, cfg);
  }
  if (f.claim == "lemma22") {
    const RationalMatrix t = f.table.empty() ? regular_simplex_table(f.k, false)
                                             : read_matrix_file(f.table);
    return check_lemma22(t, cfg);
  }
  if (f.claim == "example41") return check_example41(cfg);
  if (f.claim == "chain") return check_chain_rule(complex(), f.d, cfg.rank.seed);
  if (f.claim == "lee") return check_lee_factorization(complex(), f.d, cfg.rank.seed);
  if (f.claim == "fd") return check_fd_jacobian(complex(), f.d, cfg.rank.seed);
  if (f.claim == "scaling") return check_scaling_reduction(f.d, cfg.rank.seed);
  if (f.claim == "conj41") return check_conj41(complex(), f.d, cfg);
  if (f.claim == "conj42") return check_conj42(complex(), f.d, cfg);
  if (f.claim == "conj43") return check_conj43(complex(), cfg);
  throw std::logic_error("unhandled claim " + f.claim);
}

bool known_claim(const std::string& claim) {
  static const std::set<std::string> kClaims = {
      "theorem1", "prop33", "kd",     "lemma21", "lemma22", "example41", "chain",
      "lee",      "fd",     "scaling", "conj41", "conj42",  "conj43"};
  return kClaims.contains(claim);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Volume rigidity workbench", "volrig"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  try {
    seed = default_seed();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }

  // rank
  Source rank_source;
  RankFlags rank_flags;
  rank_flags.seed = seed;
  std::string rank_matrix = "B";
  int rank_d = 3;
  bool free_lengths = false;
  bool rank_pretty = false;
  CLI::App* rank = app.add_subcommand("rank", "generic rank of B, C, R or L");
  add_source_flags(rank, rank_source);
  add_rank_flags(rank, rank_flags);
  rank->add_option("--matrix", rank_matrix, "B | C | R | L");
  rank->add_option("--d", rank_d, "ambient dimension");
  rank->add_flag("--free-lengths", free_lengths, "C with independent random lengths");
  rank->add_flag("--pretty", rank_pretty, "summary on stderr");

  // check
  CheckFlags cf;
  cf.rank.seed = seed;
  CLI::App* check = app.add_subcommand("check", "run one claim verifier");
  check->add_option("--claim", cf.claim,
                    "theorem1|prop33|kd|lemma21|lemma22|example41|chain|lee|"
                    "fd|scaling|conj41|conj42|conj43")
      ->required();
  check->add_option("--d", cf.d);
  check->add_option("--k", cf.k);
  check->add_option("--n", cf.n);
  check->add_option("--vertex", cf.vertex, "vertex for lemma21 (default n-1)");
  check->add_option("--table", cf.table, "JSON squared-distance table for lemma22");
  check->add_option("--budget", cf.budget, "subset budget for conj42");
  check->add_flag("--stretch", cf.stretch, "extra closed-form checks for lemma22");
  check->add_flag("--pretty", cf.pretty, "summary on stderr");
  add_source_flags(check, cf.source);
  add_rank_flags(check, cf.rank);

  // grid
  int dmax = 4;
  int nmax = 8;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool force = false;
  bool grid_pretty = false;
  RankFlags grid_flags;
  grid_flags.seed = seed;
  CLI::App* grid = app.add_subcommand("grid", "rank formulas over a (d, k, n) grid");
  grid->add_option("--dmax", dmax);
  grid->add_option("--nmax", nmax);
  grid->add_option("--jobs", jobs);
  grid->add_flag("--force", force, "lift the dmax <= 6, nmax <= 10 guardrails");
  grid->add_flag("--pretty", grid_pretty, "summary table on stderr");
  add_rank_flags(grid, grid_flags);

  // dump
  Source dump_source;
  std::string dump_matrix;
  int dump_d = 3;
  std::uint64_t dump_seed = seed;
  bool dump_embedding = false;
  CLI::App* dump = app.add_subcommand("dump", "print a complex, embedding or labeled matrix");
  add_source_flags(dump, dump_source);
  dump->add_option("--matrix", dump_matrix, "B | C | R | L | D | P");
  dump->add_option("--d", dump_d);
  dump->add_option("--seed", dump_seed);
  dump->add_flag("--embedding", dump_embedding, "print the random embedding used");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (rank->parsed()) {
      const SimplicialComplex x = rank_source.load();
      const RankReport rep =
          rank_of(x, rank_matrix, rank_d, free_lengths, rank_flags.config());
      nlohmann::json j = rep.to_json();
      j["matrix"] = rank_matrix;
      j["d"] = rank_d;
      j["free_lengths"] = free_lengths;
      out << j.dump(2) << "\n";
      if (rank_pretty) {
        err << rank_matrix << " rank " << rep.value << " (bound " << rep.upper_bound
            << (rep.certified_equal ? ", certified" : ", uncertified") << ")\n";
      }
      return kExitOk;
    }
    if (check->parsed()) {
      if (!known_claim(cf.claim)) {
        err << "error: unknown claim \"" << cf.claim << "\"\n";
        return kExitMalformed;
      }
      const Verdict v = run_check(cf);
      out << v.to_json().dump(2) << "\n";
      if (cf.pretty) pretty_verdicts({v}, err);
      return v.exit_code();
    }
    if (grid->parsed()) {
      if (!force && (dmax > kGridMaxD || nmax > kGridMaxN)) {
        throw ParameterError("grid beyond dmax 6 / nmax 10 needs --force");
      }
      VerifyConfig cfg;
      cfg.rank = grid_flags.config();
      const std::vector<Verdict> cells = run_grid(dmax, nmax, grid_flags.seed, jobs, cfg);
      long passed = 0;
      long certified = 0;
      nlohmann::json arr = nlohmann::json::array();
      for (const Verdict& v : cells) {
        passed += v.pass;
        certified += v.pass && v.certified;
        arr.push_back(v.to_json());
      }
      const long total = static_cast<long>(cells.size());
      nlohmann::json j = {{"summary",
                           {{"cells", total},
                            {"passed", passed},
                            {"certified", certified},
                            {"failed", total - passed},
                            {"dmax", dmax},
                            {"nmax", nmax},
                            {"seed", grid_flags.seed}}},
                          {"cells", arr}};
      out << j.dump(2) << "\n";
      if (grid_pretty) pretty_verdicts(cells, err);
      if (passed < total) return kExitFail;
      return certified < total ? kExitUncertified : kExitOk;
    }
    if (dump->parsed()) {
      const SimplicialComplex x = dump_source.load();
      if (dump_matrix.empty() && !dump_embedding) {
        out << complex_to_json(x).dump(2) << "\n";
        return kExitOk;
      }
      const Embedding p = random_rational_embedding(x.n_vertices(), dump_d, dump_seed);
      nlohmann::json j;
      if (dump_embedding) j["embedding"] = embedding_to_json(p);
      if (dump_matrix == "B") j["matrix"] = build_B(x, p).to_json();
      else if (dump_matrix == "R") j["matrix"] = build_R(one_skeleton(x), p).to_json();
      else if (dump_matrix == "C") j["matrix"] = build_C(x, squared_edge_lengths(x, p)).to_json();
      else if (dump_matrix == "L") j["matrix"] = build_L_D_P(x, p).l.to_json();
      else if (dump_matrix == "D") j["matrix"] = build_L_D_P(x, p).d.to_json();
      else if (dump_matrix == "P") j["matrix"] = build_L_D_P(x, p).p.to_json();
      else if (!dump_matrix.empty()) throw ParameterError("unknown matrix " + dump_matrix);
      out << j.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParameter;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParameter;
  }
  return kExitMalformed;
}

}  // namespace volrig::cli
