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

#ifndef DMATCH_SUBDIVIDE_HPP
#define DMATCH_SUBDIVIDE_HPP

#include <vector>

#include "dmatch/multigraph.hpp"

namespace dmatch {

/// Record of one k-subdivision: the replaced edge and the path that stands
/// in for it in the derived graph. path_vertices runs from the lower
/// endpoint of the base edge to the higher (or back to the same vertex for
/// a loop) and path_edges[i] joins path_vertices[i] and path_vertices[i+1].
struct SubdivisionTrace {
    EdgeId base_edge_id = -1;
    std::vector<Vertex> path_vertices;
    std::vector<EdgeId> path_edges;
};

struct SubdivisionResult {
    Multigraph graph;
    SubdivisionTrace trace;
};

/// Replace edge e by a path with k internal vertices; new vertices get ids
/// n, n+1, ... in path order from the lower-numbered endpoint of e, the
/// first path edge reuses id e and the rest get ids m, m+1, .... k = 0
/// returns an isomorphic copy with an identity trace.
SubdivisionResult subdivide_edge(const Multigraph& g, EdgeId e, int k);

/// Undo a subdivision: delete the trace's internal vertices and restore a
/// single edge between the path endpoints (test support for the
/// subdivide/contract round-trip property).
Multigraph contract_trace(const Multigraph& g, const SubdivisionTrace& trace);

}  // namespace dmatch

#endif  // DMATCH_SUBDIVIDE_HPP
