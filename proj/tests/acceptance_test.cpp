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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

#include "volrig/complex.hpp"
#include "volrig/generic_rank.hpp"
#include "volrig/geometry.hpp"
#include "volrig/inclusion_matrices.hpp"
#include "volrig/matroid_matching.hpp"
#include "volrig/rigidity_matrices.hpp"
#include "volrig/verifiers.hpp"

namespace {

using namespace volrig;

// Pinned tolerances.
constexpr double kFdTolerance = 1e-5;
constexpr double kGridBudgetSeconds = 300;
constexpr std::uint64_t kSeed = 20260101;
const std::uint64_t kIdentitySeeds[] = {1, 2, 3};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::map<int, bool> g_results;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  g_results[id] = o.pass;
  std::printf("%s criterion %2d  %-22s %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
              o.detail.c_str());
  std::fflush(stdout);
}

VerifyConfig base_config() {
  VerifyConfig cfg;
  cfg.rank.seed = kSeed;
  return cfg;
}

// Certified ranks of B(Delta_{n,k}) in R^d for d+1 <= n <= 8.
std::map<std::tuple<int, int, int>, Verdict> g_cells;

}  // namespace

int main() {
  report(1, "main rank formula", [] {
    const auto start = std::chrono::steady_clock::now();
    int cells = 0;
    int good = 0;
    std::string bad;
    for (int d = 2; d <= 4; ++d) {
      for (int k = 1; k <= d - 1; ++k) {
        for (int n = d + 1; n <= 8; ++n) {
          VerifyConfig cfg = base_config();
          cfg.rank.seed = kSeed + 1000 * d + 100 * k + n;
          cfg.rank.mode = RankMode::kExact;
          const Verdict v = check_theorem1(d, k, n, cfg);
          g_cells[{d, k, n}] = v;
          if (v.claim != "theorem1") continue;
          ++cells;
          if (v.pass && v.certified) {
            ++good;
          } else {
            bad += " (" + std::to_string(d) + "," + std::to_string(k) + "," +
                   std::to_string(n) + ")";
          }
        }
      }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream s;
    s << good << "/" << cells << " cells equal dn - C(d+1,2), exact and certified; " << secs << " s";
    if (!bad.empty()) s << "; failing:" << bad;
    return Outcome{good == cells && cells > 0 && secs < kGridBudgetSeconds, s.str()};
  });

  report(2, "d+1 vertices", [] {
    std::ostringstream s;
    bool ok = true;
    for (int d = 2; d <= 5; ++d) {
      const Verdict v = check_prop33(d, base_config());
      ok = ok && v.pass && v.certified;
      s << "d=" << d << ":" << v.computed["rank"].get<long>() << " ";
    }
    return Outcome{ok, s.str() + "(expected d+1, certified)"};
  });

  report(3, "k = d", [] {
    std::ostringstream s;
    bool ok = true;
    for (auto [d, n] : {std::pair{2, 4}, {2, 5}, {3, 5}, {3, 6}}) {
      const Verdict v = check_k_equals_d(d, n, base_config());
      ok = ok && v.pass && v.certified;
      s << "(" << d << "," << n << "):" << v.computed["rank"].get<long>() << " ";
    }
    return Outcome{ok, s.str() + "(expected dn - (d^2+d-1), certified)"};
  });

  report(4, "glued example", [] {
    const Verdict v = check_example41(base_config());
    std::ostringstream s;
    s << "R=" << v.computed["rank_R"] << " C=" << v.computed["rank_C"]
      << " B=" << v.computed["rank_B"] << " (upper " << v.computed["rank_B_upper"]
      << ") Z-skeleton=" << v.computed["rank_R_z"] << " |S|=" << v.computed["z_triangles"]
      << " hall min deficiency " << v.computed["hall"]["min_deficiency"];
    return Outcome{v.pass && v.certified, s.str()};
  });

  report(5, "exact identities", [] {
    int checks = 0;
    int good = 0;
    auto tally = [&](bool ok) {
      ++checks;
      good += ok;
    };
    const SimplicialComplex ex = build_example_41().complex;
    for (std::uint64_t seed : kIdentitySeeds) {
      tally(check_chain_rule(ex, 3, seed).pass);
      tally(check_chain_rule(complete_complex(6, 3), 4, seed).pass);
      // The factorial scalar -2/(k!)^2 is exact for triangles...
      const Verdict lee2 = check_lee_factorization(ex, 3, seed);
      tally(lee2.pass && lee2.computed["factorial_scalar_form"].get<bool>());
      // ...and for tetrahedra the scalar is -2/k^2.
      tally(check_lee_factorization(complete_complex(6, 3), 4, seed).pass);
      for (int d = 2; d <= 4; ++d) tally(check_scaling_reduction(d, seed).pass);
    }
    std::ostringstream s;
    s << good << "/" << checks
      << " exact checks (chain rule, L D P factorization, altitude sums, scaling) over "
      << std::size(kIdentitySeeds) << " seeds";
    return Outcome{good == checks, s.str()};
  });

  report(6, "inclusion ranks", [] {
    bool ok = true;
    int checks = 0;
    for (int d = 2; d <= 5; ++d, ++checks) {
      ok = ok && inclusion_rank(d + 2, d, 2) == binomial(d + 2, 2);
    }
    for (int d = 3; d <= 6; ++d) {
      for (int k = 1; k <= d - 2; ++k, ++checks) {
        ok = ok && inclusion_rank(d + 1, k + 1, 2) == binomial(d + 1, 2);
      }
    }
    for (int d = 2; d <= 6; ++d, ++checks) ok = ok && inclusion_rank(d + 1, d, 2) == d + 1;
    return Outcome{ok, std::to_string(checks) + " exact ranks equal the closed forms"};
  });

  report(7, "vertex addition", [] {
    int links = 0;
    int good = 0;
    for (int d = 2; d <= 4; ++d) {
      for (int k = 1; k <= d - 1; ++k) {
        for (int n = d + 1; n + 1 <= d + 3 && n + 1 <= 8; ++n) {
          const Verdict& a = g_cells.at({d, k, n});
          const Verdict& b = g_cells.at({d, k, n + 1});
          ++links;
          const long ra = a.computed["rank"].get<long>();
          const long rb = b.computed["rank"].get<long>();
          good += a.certified && b.certified && rb >= ra + d;
        }
      }
    }
    return Outcome{good == links && links > 0,
                   std::to_string(good) + "/" + std::to_string(links) +
                       " steps rank(n+1) >= rank(n) + d on certified values"};
  });

  report(8, "volume quadratic", [] {
    VerifyConfig cfg = base_config();
    cfg.stretch = true;
    const Verdict two = check_lemma22(regular_simplex_table(2, false), cfg);
    const Verdict three = check_lemma22(regular_simplex_table(3, false), cfg);
    const bool ok = two.pass && three.pass && two.computed["a"] == "-1/16" &&
                    three.computed["a"] == "-1/144";
    std::ostringstream s;
    s << "A=" << two.computed["a"].get<std::string>() << " (k=2), "
      << three.computed["a"].get<std::string>() << " (k=3); critical points "
      << two.computed["critical_point"].get<std::string>() << ", "
      << three.computed["critical_point"].get<std::string>() << " strictly between the roots";
    return Outcome{ok, s.str()};
  });

  report(9, "jacobian", [] {
    const Verdict a = check_fd_jacobian(complete_complex(4, 2), 3, kSeed, 1e-6, kFdTolerance);
    const Verdict b = check_fd_jacobian(complete_complex(5, 3), 4, kSeed, 1e-6, kFdTolerance);
    const Verdict c =
        check_fd_jacobian(build_example_41().complex, 3, kSeed, 1e-6, kFdTolerance);
    std::ostringstream s;
    s << "max relative deviation " << a.computed["max_relative_deviation"].get<double>() << ", "
      << b.computed["max_relative_deviation"].get<double>() << ", "
      << c.computed["max_relative_deviation"].get<double>() << " (tolerance " << kFdTolerance
      << ")";
    return Outcome{a.pass && b.pass && c.pass, s.str()};
  });

  report(10, "conjecture instances", [] {
    const VerifyConfig cfg = base_config();
    const Verdict d41 = check_conj41(complete_complex(5, 2), 3, cfg);
    const Verdict e41 = check_conj41(build_example_41().complex, 3, cfg);
    const Verdict d43 = check_conj43(complete_complex(5, 2), cfg);
    std::ostringstream s;
    auto side = [&](const Verdict& v, const char* l, const char* r) {
      s << v.computed[l].get<long>() << " vs " << v.computed[r].get<long>()
        << (v.pass ? " agree" : " DISAGREE");
    };
    s << "rado on Delta_{5,2}: ";
    side(d41, "rank_B", "rado");
    s << "; glued example: ";
    side(e41, "rank_B", "rado");
    s << "; matching on Delta_{5,2}: ";
    side(d43, "rank_C", "matching");
    for (const Verdict* v : {&d41, &e41, &d43}) {
      // A disagreement is a finding; surface the full witness data.
      if (!v->pass) std::printf("  finding: %s\n", v->to_json().dump().c_str());
    }
    const bool computed = d41.computed["rank_B"] == 9 && e41.computed["rank_B"] == 20 &&
                          d43.computed["rank_C"] == 10;
    return Outcome{computed, s.str()};
  });

  report(11, "scope", [] {
    const bool ok = g_results[1] && g_results[2] && g_results[3] && g_results[7];
    return Outcome{ok,
                   "unbounded-n statements covered by the finite grid (1-3) plus "
                   "vertex-addition steps (7)"};
  });

  bool all = true;
  for (const auto& [id, pass] : g_results) all = all && pass;
  return all ? 0 : 1;
}
