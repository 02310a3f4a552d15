// Copyright 2026 The dmatch Authors
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

#ifndef DMATCH_CERTIFY_HPP
#define DMATCH_CERTIFY_HPP

#include <string>

#include "dmatch/matching.hpp"
#include "dmatch/separated.hpp"

namespace dmatch {

struct BoundClaim {
    std::string name;
    int bound = 0;
    int witness = 0;
};

/// Constructive certificate for a cubic graph: a separated maximum
/// matching F, a disjoint pair of total >= ceil(4n/5), and a triple of
/// total >= ceil(7n/6), each realized by explicit matchings on g.
struct Certificate {
    SeparatedMatching f;
    MatchingFamily pair_witness;    // 2 members, F first
    MatchingFamily triple_witness;  // 3 members, F first
    std::vector<BoundClaim> claimed_bounds;

    int pair_total() const { return pair_witness.total_size(); }
    int triple_total() const { return triple_witness.total_size(); }
};

/// Certify a loopless cubic multigraph: remove a separated maximum
/// matching, treat every component of the rest as a cycle or a subdivided
/// cubic pseudo-graph, and assemble per-component witnesses.
Certificate certify_cubic(const Multigraph& g);

/// From a maximal matching H (greedily extended when not) build a triple
/// (H, A, B) with A, B disjoint matchings of G \ H via per-component
/// systems; total >= |H| + 2 nu_1(G \ H) - (n - 2|H|) / 2.
MatchingFamily pair_to_triple(const Multigraph& g, const Matching& h,
                              const Matching& h_prime);

struct InequalityCheck {
    std::string name;
    bool pass = false;
    int slack = 0;
};

/// Exact values and the verdicts of every inequality checked on a cubic
/// graph. Deterministic: rerunning reproduces all fields.
struct InequalityReport {
    std::string graph_id;
    int n = 0;
    int m = 0;
    int nu[4] = {0, 0, 0, 0};  // nu_1 .. nu_4
    int alpha2 = 0;
    int chi_prime = 0;
    int max_disjoint_max_matchings = 0;
    std::vector<InequalityCheck> checks;
    bool all_pass = false;
};

InequalityReport verify_all(const Multigraph& g);

}  // namespace dmatch

#endif  // DMATCH_CERTIFY_HPP
