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

#include <algorithm>
#include <queue>
#include <set>

#include "volrig/errors.hpp"
#include "volrig/matroid_matching.hpp"
#include "volrig/rigidity_matrices.hpp"
#include "volrig/seeds.hpp"

namespace volrig {

namespace {
constexpr std::uint64_t kOraclePrimeTag = 0x6f7261636c65ull;  // "oracle"
}  // namespace

RigidityOracle::RigidityOracle(std::vector<Edge> ground, int n, int d,
                               const RankConfig& cfg)
    : ground_(std::move(ground)) {
  if (d < 1) throw ParameterError("oracle dimension must be >= 1");
  if (cfg.trials < 1) throw ParameterError("trials must be >= 1");
  const Graph g{n, ground_};
  long best = -1;
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t s = trial_seed(cfg.seed, t);
    Embedding p = random_rational_embedding(std::max(n, 1), d, s, cfg.bits);
    RationalMatrix r = build_R(g, p).matrix;
    std::mt19937_64 rng(derive_seed(s, kOraclePrimeTag));
    std::uint64_t prime = random_prime_62(rng);
    // Integer coordinates, so no denominator can vanish mod the prime.
    const PrimeFieldMatrix rp = PrimeFieldMatrix::reduce(r, prime);
    const long rank = static_cast<long>(rp.rank());
    if (rank > best) {
      best = rank;
      embedding_ = std::move(p);
      prime_ = prime;
      embedding_seed_ = s;
      rows_ = std::move(r);
      cols_ = rows_.cols();
      rows_modp_.assign(rows_.rows() * cols_, 0);
      for (std::size_t i = 0; i < rows_.rows(); ++i) {
        for (std::size_t j = 0; j < cols_; ++j) rows_modp_[i * cols_ + j] = rp(i, j);
      }
    }
  }
}

std::size_t RigidityOracle::rank(std::span<const std::size_t> subset) const {
  PrimeFieldMatrix m(subset.size(), cols_, prime_);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const std::size_t r = subset[i];
    if (r >= ground_.size()) throw ParameterError("oracle element out of range");
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = rows_modp_[r * cols_ + j];
  }
  return m.rank();
}

std::size_t RigidityOracle::rank_exact(std::span<const std::size_t> subset) const {
  return volrig::rank_exact(rows_.select_rows(subset));
}

IntersectionResult matroid_intersection(const RankOracle& m1,
                                        const RankOracle& m2) {
  const std::size_t n = m1.ground_size();
  if (m2.ground_size() != n) {
    throw ParameterError("matroid intersection: ground sets differ in size");
  }
  IntersectionResult res;
  std::vector<char> in(n, 0);
  std::vector<std::size_t> current;

  auto query = [&](const RankOracle& m, const std::vector<std::size_t>& s) {
    ++res.queries;
    return m.rank(s);
  };
  auto audit = [](bool ok, const std::string& what) {
    if (!ok) throw OracleAuditError("matroid oracle violated " + what);
  };

  while (true) {
    const std::size_t r = current.size();
    audit(query(m1, current) == r, "rank(I) = |I| in matroid 1");
    audit(query(m2, current) == r, "rank(I) = |I| in matroid 2");

    std::vector<char> source(n, 0);
    std::vector<char> sink(n, 0);
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> probe;
    for (std::size_t x = 0; x < n; ++x) {
      if (in[x]) continue;
      probe = current;
      probe.push_back(x);
      const std::size_t r1 = query(m1, probe);
      const std::size_t r2 = query(m2, probe);
      audit(r1 == r || r1 == r + 1, "unit increase in matroid 1");
      audit(r2 == r || r2 == r + 1, "unit increase in matroid 2");
      source[x] = r1 == r + 1;
      sink[x] = r2 == r + 1;
      for (std::size_t pos = 0; pos < r; ++pos) {
        const std::size_t y = current[pos];
        probe = current;
        probe[pos] = x;
        const std::size_t a = query(m1, probe);
        const std::size_t b = query(m2, probe);
        audit(a + 1 == r || a == r, "exchange rank in matroid 1");
        audit(b + 1 == r || b == r, "exchange rank in matroid 2");
        if (a == r) out[y].push_back(x);
        if (b == r) out[x].push_back(y);
      }
    }

    // Shortest path from a source to a sink.
    std::vector<long> parent(n, -2);
    std::queue<std::size_t> q;
    for (std::size_t x = 0; x < n; ++x) {
      if (source[x]) {
        parent[x] = -1;
        q.push(x);
      }
    }
    long end = -1;
    while (!q.empty() && end < 0) {
      const std::size_t u = q.front();
      q.pop();
      if (!in[u] && sink[u]) {
        end = static_cast<long>(u);
        break;
      }
      for (std::size_t w : out[u]) {
        if (parent[w] == -2) {
          parent[w] = static_cast<long>(u);
          q.push(w);
        }
      }
    }

    if (end < 0) {
      std::vector<std::size_t> outside;
      for (std::size_t x = 0; x < n; ++x) {
        if (parent[x] != -2) {
          res.reachable.push_back(x);
        } else {
          outside.push_back(x);
        }
      }
      res.cover_rank_1 = query(m1, outside);
      res.cover_rank_2 = query(m2, res.reachable);
      res.dual_certified = res.cover_rank_1 + res.cover_rank_2 == r;
      break;
    }

    for (long u = end; u >= 0; u = parent[u]) in[u] = !in[u];
    current.clear();
    for (std::size_t x = 0; x < n; ++x) {
      if (in[x]) current.push_back(x);
    }
    ++res.augmentations;
  }
  res.common = current;
  return res;
}

nlohmann::json RadoResult::to_json() const {
  auto faces = [](const std::vector<Edge>& es) {
    nlohmann::json a = nlohmann::json::array();
    for (const Edge& e : es) a.push_back(e.vertices());
    return a;
  };
  return {{"value", value},
          {"common_edges", faces(common_edges)},
          {"reachable_edges", faces(reachable_edges)},
          {"cover_edges_1", faces(cover_edges_1)},
          {"cover_rank_1", cover_rank_1},
          {"cover_rank_2", cover_rank_2},
          {"dual_certified", dual_certified},
          {"exact_verified", exact_verified},
          {"oracle_seed", oracle_seed},
          {"prime", prime}};
}

RadoResult rado_rank(const SimplicialComplex& x, int d, const RankConfig& cfg) {
  RadoResult out;
  const int k = x.dim();
  if (k < 1 || x.count(k) == 0) {
    out.dual_certified = true;
    out.exact_verified = true;
    return out;
  }
  const std::vector<Edge>& edges = x.faces(1);
  const RigidityOracle rigidity(edges, x.n_vertices(), d, cfg);
  const TransversalOracle transversal(incidence_graph(edges, x.faces(k)));
  const IntersectionResult res = matroid_intersection(rigidity, transversal);

  out.value = static_cast<long>(res.common.size());
  std::vector<char> reach(edges.size(), 0);
  for (std::size_t i : res.common) out.common_edges.push_back(edges[i]);
  for (std::size_t i : res.reachable) {
    out.reachable_edges.push_back(edges[i]);
    reach[i] = 1;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!reach[i]) out.cover_edges_1.push_back(edges[i]);
  }
  out.cover_rank_1 = res.cover_rank_1;
  out.cover_rank_2 = res.cover_rank_2;
  out.dual_certified = res.dual_certified;
  out.exact_verified = rigidity.rank_exact(res.common) == res.common.size() &&
                       transversal.rank(res.common) == res.common.size();
  out.oracle_seed = rigidity.embedding_seed();
  out.prime = rigidity.prime();
  return out;
}

nlohmann::json HallResult::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const Face& f : witness) w.push_back(f.vertices());
  return {{"min_deficiency", min_deficiency},
          {"witness", w},
          {"witness_size", witness.size()},
          {"witness_rank", witness_rank},
          {"exhaustive", exhaustive},
          {"scanned", scanned},
          {"structured_scanned", structured_scanned},
          {"full_rank_rows", full_rank_rows},
          {"only_if_holds", only_if_holds},
          {"oracle_seed", oracle_seed}};
}

HallResult hall_deficiency(const SimplicialComplex& x, int d,
                           const RankConfig& cfg, const HallOptions& opts) {
  HallResult res;
  const int k = x.dim();
  if (k < 1 || x.count(k) == 0) {
    res.exhaustive = true;
    res.scanned = 1;
    return res;
  }
  if (d < k) throw ParameterError("Hall scan needs d >= dim(X)");
  const std::vector<Face>& tops = x.faces(k);
  const std::vector<Edge>& edges = x.faces(1);
  const std::size_t m = tops.size();

  const RigidityOracle oracle(edges, x.n_vertices(), d, cfg);
  res.oracle_seed = oracle.embedding_seed();
  const PrimeFieldMatrix b_modp =
      PrimeFieldMatrix::reduce(build_B(x, oracle.embedding()).matrix, oracle.prime());

  std::vector<std::vector<std::size_t>> face_edges(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < tops[i].size(); ++a) {
      for (std::size_t b = a + 1; b < tops[i].size(); ++b) {
        face_edges[i].push_back(
            static_cast<std::size_t>(x.index_of(Face{tops[i][a], tops[i][b]})));
      }
    }
  }

  bool stop = false;
  auto evaluate = [&](const std::vector<std::size_t>& s) {
    std::set<std::size_t> es;
    for (std::size_t i : s) es.insert(face_edges[i].begin(), face_edges[i].end());
    const std::vector<std::size_t> edge_idx(es.begin(), es.end());
    const long rank_r = static_cast<long>(oracle.rank(edge_idx));
    const long deficiency = rank_r - static_cast<long>(s.size());
    if (!s.empty() && b_modp.select_rows(s).rank() == s.size()) {
      ++res.full_rank_rows;
      if (deficiency < 0) res.only_if_holds = false;
    }
    if (deficiency < res.min_deficiency) {
      res.min_deficiency = deficiency;
      res.witness.clear();
      for (std::size_t i : s) res.witness.push_back(tops[i]);
      res.witness_rank = rank_r;
      if (opts.stop_at_first_violation) stop = true;
    }
  };

  // Structured candidates: all top faces, and the top faces avoiding v.
  std::set<std::vector<std::size_t>> candidates;
  {
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
    candidates.insert(all);
    for (const Face& vf : x.faces(0)) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < m; ++i) {
        if (!tops[i].contains(vf[0])) s.push_back(i);
      }
      if (!s.empty()) candidates.insert(s);
    }
  }
  for (const auto& s : candidates) {
    if (stop) break;
    evaluate(s);
    ++res.structured_scanned;
  }

  // Exhaustive phase: by increasing size, lexicographic within a size.
  res.exhaustive = true;
  for (std::size_t size = 0; size <= m && !stop; ++size) {
    std::vector<std::size_t> s(size);
    for (std::size_t i = 0; i < size; ++i) s[i] = i;
    while (true) {
      if (res.scanned >= opts.budget) {
        res.exhaustive = false;
        stop = true;
        break;
      }
      evaluate(s);
      ++res.scanned;
      if (stop) break;
      long i = static_cast<long>(size) - 1;
      while (i >= 0 && s[i] == m - size + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++s[i];
      for (std::size_t j = i + 1; j < size; ++j) s[j] = s[j - 1] + 1;
    }
  }
  if (stop && res.scanned < opts.budget) res.exhaustive = false;
  return res;
}

}  // namespace volrig
