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

#include "volrig/generic_rank.hpp"

#include <algorithm>
#include <random>

#include "volrig/errors.hpp"
#include "volrig/geometry.hpp"
#include "volrig/prime_field.hpp"
#include "volrig/rigidity_matrices.hpp"
#include "volrig/seeds.hpp"

namespace volrig {

namespace {
constexpr std::uint64_t kPrimeTag = 0x7072696d65ull;  // "prime"
}  // namespace

std::string to_string(RankMode mode) {
  return mode == RankMode::kExact ? "exact" : "modp";
}

RankMode rank_mode_from_string(const std::string& s) {
  if (s == "exact") return RankMode::kExact;
  if (s == "modp") return RankMode::kModP;
  throw ParameterError("unknown rank mode \"" + s + "\" (expected exact|modp)");
}

nlohmann::json RankReport::to_json() const {
  return {{"value", value},
          {"trials", trials},
          {"trials_run", trials_run},
          {"seed", seed},
          {"mode", volrig::to_string(mode)},
          {"upper_bound", upper_bound},
          {"certified_equal", certified_equal},
          {"caveat", caveat},
          {"trial_values", trial_values},
          {"best_trial_seed", best_trial_seed}};
}

std::uint64_t trial_seed(std::uint64_t base, int trial) {
  return derive_seed(base, static_cast<std::uint64_t>(trial));
}

RankReport max_rank_over_trials(
    const std::function<RationalMatrix(std::uint64_t)>& build,
    long upper_bound, const RankConfig& cfg) {
  if (cfg.trials < 1) throw ParameterError("trials must be >= 1");
  RankReport rep;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  rep.mode = cfg.mode;
  rep.upper_bound = upper_bound;

  long best = -1;
  std::uint64_t best_seed = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t s = trial_seed(cfg.seed, t);
    const RationalMatrix m = build(s);
    const long r = cfg.mode == RankMode::kExact
                       ? static_cast<long>(rank_exact(m))
                       : static_cast<long>(rank_modp_seeded(m, derive_seed(s, kPrimeTag)));
    rep.trial_values.push_back(r);
    ++rep.trials_run;
    if (r > best) {
      best = r;
      best_seed = s;
    }
    if (best >= upper_bound) break;
  }
  if (cfg.mode == RankMode::kModP) {
    // Exact confirmation of the best trial; mod-p rank never exceeds it.
    best = std::max(best, static_cast<long>(rank_exact(build(best_seed))));
  }
  rep.value = best;
  rep.best_trial_seed = best_seed;
  rep.certified_equal = rep.value == upper_bound;
  if (!rep.certified_equal) rep.caveat = "below-a-priori-bound";
  return rep;
}

long rigidity_rank_bound(int touched, int d) {
  if (touched >= d + 1) return static_cast<long>(d) * touched - binomial(d + 1, 2);
  return binomial(touched, 2);
}

long volume_rank_bound(const SimplicialComplex& x, int d) {
  const int k = x.dim();
  const Graph g = one_skeleton(x);
  const int touched = g.touched_vertices();
  long bound = std::min<long>(static_cast<long>(x.count(k)),
                              static_cast<long>(x.count(1)));
  bound = std::min(bound, rigidity_rank_bound(touched, d));
  if (k == d && touched >= d + 1) {
    bound = std::min<long>(bound, static_cast<long>(d) * touched - (d * d + d - 1));
  }
  return std::max<long>(bound, 0);
}

RankReport generic_rank_B(const SimplicialComplex& x, int d,
                          const RankConfig& cfg) {
  if (x.dim() < 1) throw ParameterError("generic rank of B needs dim >= 1");
  if (d < x.dim()) throw ParameterError("generic rank of B needs d >= dim(X)");
  const int n = x.n_vertices();
  return max_rank_over_trials(
      [&](std::uint64_t s) {
        return build_B(x, random_rational_embedding(n, d, s, cfg.bits)).matrix;
      },
      volume_rank_bound(x, d), cfg);
}

RankReport generic_rank_R(const Graph& g, int d, const RankConfig& cfg) {
  if (d < 1) throw ParameterError("d must be >= 1");
  const long bound = std::min<long>(static_cast<long>(g.edges.size()),
                                    rigidity_rank_bound(g.touched_vertices(), d));
  const int n = std::max(g.n_vertices, 1);
  return max_rank_over_trials(
      [&](std::uint64_t s) {
        return build_R(g, random_rational_embedding(n, d, s, cfg.bits)).matrix;
      },
      bound, cfg);
}

RankReport generic_rank_C(const SimplicialComplex& x, const RankConfig& cfg,
                          LengthMode lengths) {
  if (x.dim() < 1) throw ParameterError("generic rank of C needs dim >= 1");
  const int k = x.dim();
  const long bound = std::min<long>(static_cast<long>(x.count(k)),
                                    static_cast<long>(x.count(1)));
  return max_rank_over_trials(
      [&](std::uint64_t s) {
        if (lengths.embedding_dim) {
          const Embedding p =
              random_rational_embedding(x.n_vertices(), *lengths.embedding_dim, s, cfg.bits);
          return build_C(x, squared_edge_lengths(x, p)).matrix;
        }
        SquaredLengths dvec;
        dvec.edges = x.faces(1);
        std::mt19937_64 rng(s);
        std::uniform_int_distribution<long> dist(1, 1L << std::min(cfg.bits, 62));
        for (std::size_t i = 0; i < dvec.edges.size(); ++i) {
          dvec.values.emplace_back(dist(rng));
        }
        return build_C(x, dvec).matrix;
      },
      bound, cfg);
}

EdgeSetRank edge_set_rank(const std::vector<Edge>& edges, int n, int d,
                          const RankConfig& cfg) {
  for (const Edge& e : edges) {
    if (e.size() != 2 || e[1] >= n) {
      throw ParameterError("edge " + e.to_string() + " is not an edge on " +
                           std::to_string(n) + " vertices");
    }
  }
  Graph g{n, edges};
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  EdgeSetRank out;
  if (g.edges.empty()) {
    out.report.trials = cfg.trials;
    out.report.seed = cfg.seed;
    out.report.mode = cfg.mode;
    out.report.certified_equal = true;
    out.independent = true;
    return out;
  }
  out.report = generic_rank_R(g, d, cfg);
  out.independent = out.report.value == static_cast<long>(g.edges.size());
  return out;
}

RankReport rows_rank(const SimplicialComplex& x, int d,
                     const std::vector<Face>& rows, const RankConfig& cfg) {
  if (d < x.dim()) throw ParameterError("rows rank needs d >= dim(X)");
  std::vector<std::size_t> idx;
  for (const Face& f : rows) {
    if (f.dim() != x.dim() || !x.contains(f)) {
      throw ParameterError("row " + f.to_string() + " is not a top face");
    }
    idx.push_back(static_cast<std::size_t>(x.index_of(f)));
  }
  const SimplicialComplex sub = restriction(x, rows);
  long bound = static_cast<long>(rows.size());
  if (!rows.empty()) bound = std::min(bound, volume_rank_bound(sub, d));
  const int n = x.n_vertices();
  return max_rank_over_trials(
      [&](std::uint64_t s) {
        return build_B(x, random_rational_embedding(n, d, s, cfg.bits))
            .matrix.select_rows(idx);
      },
      bound, cfg);
}

}  // namespace volrig
