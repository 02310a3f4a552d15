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

#ifndef DMATCH_SEPARATED_HPP
#define DMATCH_SEPARATED_HPP

#include <optional>
#include <tuple>

#include "dmatch/matching.hpp"

namespace dmatch {

/// A maximum matching whose unsaturated vertices pairwise share no
/// neighbor, together with the unsaturated set and the (zero) bad-pair
/// count.
struct SeparatedMatching {
    Matching matching;
    std::vector<Vertex> unsaturated;
    int bad_pairs = 0;
};

/// Number of unsaturated pairs sharing a neighbor.
int count_bad_pairs(const Multigraph& g, const Matching& m);

/// Lexicographically smallest (u, w, q): u < w unsaturated with common
/// neighbor q; nullopt when none.
std::optional<std::tuple<Vertex, Vertex, Vertex>> first_bad_pair(const Multigraph& g,
                                                                 const Matching& m);

/// One exchange step: from a maximum matching F with bad pair (u, w)
/// through q, produce a maximum matching with strictly fewer bad pairs.
/// Case (p,w) not an edge shifts F along the grown alternating path; case
/// (p,w) an edge swaps (p,v) for (p,w). Requires 2 <= delta, Delta <= 3.
Matching improvement_step(const Multigraph& g, const Matching& f, Vertex u, Vertex w,
                          Vertex q);

/// Maximum matching with no two unsaturated vertices sharing a neighbor
/// (requires loopless g with 2 <= delta <= Delta <= 3). Deterministic:
/// starts from the lex-smallest maximum matching and resolves bad pairs in
/// lexicographic order.
SeparatedMatching separated_maximum_matching(const Multigraph& g);

}  // namespace dmatch

#endif  // DMATCH_SEPARATED_HPP
