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

#include "dmatch/subdivide.hpp"

#include <algorithm>

namespace dmatch {

SubdivisionResult subdivide_edge(const Multigraph& g, EdgeId e, int k) {
    g.check_edge(e);
    if (k < 0) throw std::invalid_argument("negative subdivision count");

    const Edge base = g.edge(e);
    Vertex a = std::min(base.u, base.v);
    Vertex b = std::max(base.u, base.v);
    int n = g.vertex_count();
    int m = g.edge_count();

    SubdivisionResult out{Multigraph(n + k, g.loop_policy()), {}};
    out.trace.base_edge_id = e;

    // Copy every edge, leaving a placeholder where e was so that ids are
    // preserved; the placeholder becomes the first path edge.
    std::vector<Edge> new_edges(g.edges().begin(), g.edges().end());
    if (k > 0) new_edges[static_cast<std::size_t>(e)] = {a, n};
    for (int i = 0; i + 1 < k; ++i) new_edges.push_back({n + i, n + i + 1});
    if (k > 0) new_edges.push_back({n + k - 1, b});
    for (const Edge& ed : new_edges) out.graph.add_edge(ed.u, ed.v);

    out.trace.path_vertices.push_back(a);
    for (int i = 0; i < k; ++i) out.trace.path_vertices.push_back(n + i);
    out.trace.path_vertices.push_back(b);
    out.trace.path_edges.push_back(e);
    for (int i = 0; i < k; ++i) out.trace.path_edges.push_back(m + i);
    if (k == 0) out.trace.path_edges.resize(1);
    return out;
}

Multigraph contract_trace(const Multigraph& g, const SubdivisionTrace& trace) {
    std::vector<bool> drop_vertex(static_cast<std::size_t>(g.vertex_count()), false);
    for (std::size_t i = 1; i + 1 < trace.path_vertices.size(); ++i)
        drop_vertex[static_cast<std::size_t>(trace.path_vertices[i])] = true;
    std::vector<bool> drop_edge(static_cast<std::size_t>(g.edge_count()), false);
    for (EdgeId e : trace.path_edges) drop_edge[static_cast<std::size_t>(e)] = true;

    std::vector<Vertex> remap(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!drop_vertex[static_cast<std::size_t>(v)]) remap[static_cast<std::size_t>(v)] = next++;

    Multigraph out(next, LoopPolicy::allowed);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (drop_edge[static_cast<std::size_t>(e)]) continue;
        const Edge& ed = g.edge(e);
        out.add_edge(remap[static_cast<std::size_t>(ed.u)],
                     remap[static_cast<std::size_t>(ed.v)]);
    }
    out.add_edge(remap[static_cast<std::size_t>(trace.path_vertices.front())],
                 remap[static_cast<std::size_t>(trace.path_vertices.back())]);
    return out;
}

}  // namespace dmatch
