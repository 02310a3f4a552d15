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

#ifndef DMATCH_EXACT_HPP
#define DMATCH_EXACT_HPP

#include <optional>
#include <vector>

#include "dmatch/matching.hpp"

namespace dmatch {

/// Exact optimum for nu_k together with a witness family of k pairwise
/// edge-disjoint matchings whose sizes sum to value.
struct NuResult {
    int k = 0;
    int value = 0;
    MatchingFamily witness;
};

/// alpha_k: the largest single member size over all optimal k-families.
struct AlphaResult {
    int k = 0;
    int value = 0;
};

/// Exact maximum matching size (blossom algorithm); loops are ignored.
int nu1(const Multigraph& g);

/// Maximum matching size with a set of vertices deleted (mask[v] = false
/// removes v); support for greedy witness extraction.
int nu1_masked(const Multigraph& g, const std::vector<bool>& active);

/// Lexicographically smallest maximum matching by sorted edge-id sequence.
Matching maximum_matching(const Multigraph& g);

/// Exact nu_k by branch and bound over per-edge color assignments, with a
/// deterministic lexicographic witness. Requires loopless g, k >= 1.
NuResult nu_k(const Multigraph& g, int k);

/// Value-only variant (skips witness reconstruction).
int nu_k_value(const Multigraph& g, int k);

/// alpha_k over families attaining nu_k.
AlphaResult alpha_k(const Multigraph& g, int k);

/// Smallest k with nu_k = m. For cubic graphs this is 3 or 4.
int chromatic_index(const Multigraph& g);

/// Largest t such that t pairwise edge-disjoint matchings of size nu1
/// exist; equals max { t : nu_t = t * nu1 }.
int max_disjoint_maximum_matchings(const Multigraph& g);

}  // namespace dmatch

#endif  // DMATCH_EXACT_HPP
