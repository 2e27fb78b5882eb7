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

#include "volrig/errors.hpp"
#include "volrig/matroid_matching.hpp"

namespace volrig {

nlohmann::json ConjectureVerdict::to_json() const {
  return {{"claim", claim}, {"lhs", lhs}, {"rhs", rhs}, {"agree", agree},
          {"details", details}};
}

ConjectureVerdict check_conjecture_41(const SimplicialComplex& x, int d,
                                      const RankConfig& cfg) {
  ConjectureVerdict v;
  v.claim = "conj41";
  const RankReport lhs = generic_rank_B(x, d, cfg);
  const RadoResult rhs = rado_rank(x, d, cfg);
  v.lhs = lhs.value;
  v.rhs = rhs.value;
  v.agree = v.lhs == v.rhs;
  v.details = {{"lhs_report", lhs.to_json()}, {"rado", rhs.to_json()}};
  return v;
}

ConjectureVerdict check_conjecture_43(const SimplicialComplex& x,
                                      const RankConfig& cfg) {
  const int k = x.dim();
  const int n = static_cast<int>(x.count(0));
  if (k < 2 || k > n - 2) {
    throw ParameterError("conj43 needs 2 <= k <= n-2 (k=" +
                         std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  ConjectureVerdict v;
  v.claim = "conj43";
  const RankReport lhs = generic_rank_C(x, cfg, LengthMode{});
  const IncidenceGraph h = incidence_graph(x.faces(1), x.faces(k));
  const Matching mt = maximum_matching(h);
  v.lhs = lhs.value;
  v.rhs = mt.size;
  v.agree = v.lhs == v.rhs;
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t i = 0; i < mt.mate_left.size(); ++i) {
    if (mt.mate_left[i] >= 0) {
      pairs.push_back({h.left[i].vertices(), h.right[mt.mate_left[i]].vertices()});
    }
  }
  v.details = {{"lhs_report", lhs.to_json()},
               {"matching", pairs},
               {"incidence_edges", h.edge_count()}};
  return v;
}

}  // namespace volrig
