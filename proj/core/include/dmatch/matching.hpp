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

#ifndef DMATCH_MATCHING_HPP
#define DMATCH_MATCHING_HPP

#include <vector>

#include "dmatch/multigraph.hpp"

namespace dmatch {

/// Edge set with no two members sharing a vertex; loops are never members.
/// Kept sorted by edge id so equal matchings compare equal.
struct Matching {
    std::vector<EdgeId> edge_ids;

    int size() const { return static_cast<int>(edge_ids.size()); }
    bool contains(EdgeId e) const;
    void insert(EdgeId e);
    void erase(EdgeId e);

    friend bool operator==(const Matching&, const Matching&) = default;
};

/// Ordered list of pairwise edge-disjoint matchings (H_1, ..., H_k).
struct MatchingFamily {
    std::vector<Matching> members;

    int total_size() const;

    friend bool operator==(const MatchingFamily&, const MatchingFamily&) = default;
};

bool is_valid_matching(const Multigraph& g, const Matching& m);

/// True iff every member is a valid matching of g and members are pairwise
/// edge-disjoint.
bool validate_family(const Multigraph& g, const MatchingFamily& fam);

/// Vertices not covered by m, ascending.
std::vector<Vertex> unsaturated_vertices(const Multigraph& g, const Matching& m);

/// saturating_edge[v] = matching edge at v, or -1.
std::vector<EdgeId> saturating_edges(const Multigraph& g, const Matching& m);

/// One connected component of the symmetric difference of two matchings:
/// a path or an even cycle whose edges alternate between F \ F' and F' \ F.
/// For a path, vertices.size() == edges.size() + 1; for a cycle, edges[i]
/// joins vertices[i] and vertices[(i+1) % size].
struct AlternatingComponent {
    bool is_cycle = false;
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
};

/// Components of F (symmetric difference) F', deterministic order: paths
/// first by smallest endpoint, then cycles by smallest vertex.
std::vector<AlternatingComponent> symmetric_difference_components(
    const Multigraph& g, const Matching& f, const Matching& f_prime);

}  // namespace dmatch

#endif  // DMATCH_MATCHING_HPP
