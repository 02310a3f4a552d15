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

#ifndef DMATCH_PSEUDOGRAPH_HPP
#define DMATCH_PSEUDOGRAPH_HPP

#include <optional>

#include "dmatch/matching.hpp"

namespace dmatch {

/// 3-regular pseudo-graph (loops allowed, counting two toward the degree).
struct CubicPseudograph {
    Multigraph graph;

    CubicPseudograph() : graph(0, LoopPolicy::allowed) {}
    explicit CubicPseudograph(Multigraph g);

    int n0() const { return graph.vertex_count(); }
    int m0() const { return graph.edge_count(); }
};

/// Per-edge subdivision counts k(e), indexed by pseudo-graph edge id.
using SubdivisionMap = std::vector<int>;

/// One chain of a realization: the path (or cycle, for a loop) standing in
/// for a skeleton edge. vertices holds both endpoints (equal for a loop);
/// edges[i] joins vertices[i] and vertices[i+1]. Non-loop chains run from
/// the smaller skeleton endpoint.
struct ChainTrace {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;

    int internal_count() const { return static_cast<int>(vertices.size()) - 2; }
};

struct RealizeResult {
    Multigraph graph;
    std::vector<ChainTrace> chains;  // by skeleton edge id
};

/// Subdivide each skeleton edge e by k(e): skeleton vertices keep their
/// ids, chain internals get ids n0, n0+1, ... in edge-id then path order.
/// Loops need k >= 1 (a loop with k = 0 is not a graph edge).
RealizeResult realize(const CubicPseudograph& g0, const SubdivisionMap& k);

/// Inverse of realize: contract degree-2 chains of a connected graph with
/// 2 <= delta <= Delta = 3 into a cubic pseudo-graph; cycles hanging off a
/// single degree-3 vertex become loops with k = length - 1.
struct ToSkeletonResult {
    CubicPseudograph skeleton;
    SubdivisionMap k;
    std::vector<ChainTrace> chains;   // by skeleton edge id, vertices in host ids
    std::vector<Vertex> vertex_map;   // skeleton vertex -> host vertex
};

ToSkeletonResult to_cubic_pseudograph(const Multigraph& g);

/// Bijection realize(G0, k) -> host graph recovered from the chain traces.
struct GraphIsomorphism {
    std::vector<Vertex> vertex_map;
    std::vector<EdgeId> edge_map;
};

GraphIsomorphism realize_to_host(const RealizeResult& realized, const ToSkeletonResult& host);

/// The two-vertex pseudo-graph: a loop at each vertex plus the connecting
/// edge (the terminal case of loop cutting).
bool is_trivial_pseudograph(const CubicPseudograph& g0);

/// Cutting the loop e at u0 with neighbor edge f = (u0, v0): delete u0 and
/// v0 and reconnect the loose ends u, v of the other two edges h, h' at v0
/// with a fresh edge g (a loop when u = v).
struct LoopCut {
    CubicPseudograph result;
    EdgeId new_edge = -1;            // id of g in result
    EdgeId e = -1, f = -1, h = -1, h_prime = -1;  // ids in the source
    Vertex u0 = -1, v0 = -1;         // deleted vertices (source ids)
    Vertex u = -1, v = -1;           // endpoints of h, h' kept (source ids)
    std::vector<EdgeId> edge_map;    // result edge -> source edge (-1 for g)
    std::vector<Vertex> vertex_map;  // result vertex -> source vertex
};

/// Throws std::invalid_argument when e is not a loop or its v0 carries a
/// loop (the operation is then not applicable).
LoopCut cut_loop(const CubicPseudograph& g0, EdgeId e);

/// Lowest-id loop with an applicable cut, or nullopt (then the graph has
/// no loop or is the trivial pseudo-graph).
std::optional<EdgeId> find_cuttable_loop(const CubicPseudograph& g0);

/// k'(g) = k(h) + k(h') - 2, everything else inherited.
SubdivisionMap derive_k_after_cut(const SubdivisionMap& k, const LoopCut& cut);

/// Class M: removing the loops (not cutting) leaves a tree and the map is
/// 1 on loops, 2 elsewhere; the extremal family for the 6/13 ratio.
struct ClassMembership {
    bool in_class = false;
    std::optional<Multigraph> tree_skeleton;
    std::optional<int> internal_vertex_count;
};

ClassMembership in_class_M(const CubicPseudograph& g0, const SubdivisionMap& k);

/// True when k >= 1 on loops and k >= 2 on non-loops (the hypothesis of
/// every certification below).
bool valid_subdivision_map(const CubicPseudograph& g0, const SubdivisionMap& k);

/// Disjoint pair on realize(g0, k) with total >= ceil(5n/6), and
/// >= ceil(7n/8) when g0 is loopless, >= ceil(6n/7) when some loop has
/// k >= 2 or some non-loop k >= 3. Exact (k(e)+k(f)+k(g)+1) on the trivial
/// pseudo-graph.
MatchingFamily certify_pair(const CubicPseudograph& g0, const SubdivisionMap& k);

/// Matching on realize(g0, k) of size >= ceil(3n/7), and >= ceil(6n/13)
/// on class-M instances.
Matching certify_matching(const CubicPseudograph& g0, const SubdivisionMap& k);

}  // namespace dmatch

#endif  // DMATCH_PSEUDOGRAPH_HPP
