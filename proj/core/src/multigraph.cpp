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

#include "dmatch/multigraph.hpp"

#include <algorithm>

namespace dmatch {

int Multigraph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < vertex_count(); ++v) d = std::max(d, degree(v));
    return d;
}

int Multigraph::min_degree() const {
    if (vertex_count() == 0) return 0;
    int d = degree(0);
    for (Vertex v = 1; v < vertex_count(); ++v) d = std::min(d, degree(v));
    return d;
}

bool Multigraph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.is_loop(); });
}

bool Multigraph::adjacent(Vertex u, Vertex v) const {
    return find_edge(u, v) >= 0;
}

EdgeId Multigraph::find_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    EdgeId best = -1;
    for (const IncidentEdge& ie : incident(u))
        if (ie.other == v && (best < 0 || ie.id < best)) best = ie.id;
    return best;
}

bool Multigraph::is_connected() const {
    int n = vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const IncidentEdge& ie : incident(v)) {
            if (!seen[static_cast<std::size_t>(ie.other)]) {
                seen[static_cast<std::size_t>(ie.other)] = true;
                ++reached;
                stack.push_back(ie.other);
            }
        }
    }
    return reached == n;
}

bool Multigraph::is_regular(int d) const {
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (degree(v) != d) return false;
    return true;
}

bool Multigraph::is_cycle_graph() const {
    return vertex_count() >= 2 && !has_loop() && is_regular(2) && is_connected();
}

std::vector<InducedSubgraph> connected_components(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int comp_count = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        int c = comp_count++;
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = c;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (const IncidentEdge& ie : g.incident(v)) {
                if (comp[static_cast<std::size_t>(ie.other)] < 0) {
                    comp[static_cast<std::size_t>(ie.other)] = c;
                    stack.push_back(ie.other);
                }
            }
        }
    }

    std::vector<InducedSubgraph> out(static_cast<std::size_t>(comp_count));
    std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        auto& part = out[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
        local[static_cast<std::size_t>(v)] = static_cast<Vertex>(part.vertex_map.size());
        part.vertex_map.push_back(v);
    }
    for (auto& part : out)
        part.graph = Multigraph(static_cast<int>(part.vertex_map.size()), g.loop_policy());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        auto& part = out[static_cast<std::size_t>(comp[static_cast<std::size_t>(ed.u)])];
        part.graph.add_edge(local[static_cast<std::size_t>(ed.u)],
                            local[static_cast<std::size_t>(ed.v)]);
        part.edge_map.push_back(e);
    }
    return out;
}

}  // namespace dmatch
