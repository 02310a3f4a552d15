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

#include "dmatch/matching.hpp"

#include <algorithm>
#include <numeric>

namespace dmatch {

bool Matching::contains(EdgeId e) const {
    return std::binary_search(edge_ids.begin(), edge_ids.end(), e);
}

void Matching::insert(EdgeId e) {
    auto it = std::lower_bound(edge_ids.begin(), edge_ids.end(), e);
    if (it == edge_ids.end() || *it != e) edge_ids.insert(it, e);
}

void Matching::erase(EdgeId e) {
    auto it = std::lower_bound(edge_ids.begin(), edge_ids.end(), e);
    if (it != edge_ids.end() && *it == e) edge_ids.erase(it);
}

int MatchingFamily::total_size() const {
    return std::accumulate(members.begin(), members.end(), 0,
                           [](int acc, const Matching& m) { return acc + m.size(); });
}

bool is_valid_matching(const Multigraph& g, const Matching& m) {
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    EdgeId prev = -1;
    for (EdgeId e : m.edge_ids) {
        if (e <= prev) return false;  // sorted, no duplicates
        prev = e;
        if (e < 0 || e >= g.edge_count()) return false;
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) return false;
        if (used[static_cast<std::size_t>(ed.u)] || used[static_cast<std::size_t>(ed.v)])
            return false;
        used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = true;
    }
    return true;
}

bool validate_family(const Multigraph& g, const MatchingFamily& fam) {
    std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
    for (const Matching& m : fam.members) {
        if (!is_valid_matching(g, m)) return false;
        for (EdgeId e : m.edge_ids) {
            if (used[static_cast<std::size_t>(e)]) return false;
            used[static_cast<std::size_t>(e)] = true;
        }
    }
    return true;
}

std::vector<Vertex> unsaturated_vertices(const Multigraph& g, const Matching& m) {
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    for (EdgeId e : m.edge_ids) {
        const Edge& ed = g.edge(e);
        used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = true;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!used[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<EdgeId> saturating_edges(const Multigraph& g, const Matching& m) {
    std::vector<EdgeId> sat(static_cast<std::size_t>(g.vertex_count()), -1);
    for (EdgeId e : m.edge_ids) {
        const Edge& ed = g.edge(e);
        sat[static_cast<std::size_t>(ed.u)] = e;
        sat[static_cast<std::size_t>(ed.v)] = e;
    }
    return sat;
}

std::vector<AlternatingComponent> symmetric_difference_components(
    const Multigraph& g, const Matching& f, const Matching& f_prime) {
    // D = F (symm diff) F'; every vertex meets at most one F-edge and one
    // F'-edge, so D has maximum degree two and its components are paths or
    // alternating (hence even) cycles.
    std::vector<EdgeId> diff;
    std::set_symmetric_difference(f.edge_ids.begin(), f.edge_ids.end(),
                                  f_prime.edge_ids.begin(), f_prime.edge_ids.end(),
                                  std::back_inserter(diff));
    std::vector<std::vector<IncidentEdge>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (EdgeId e : diff) {
        const Edge& ed = g.edge(e);
        DMATCH_CHECK(!ed.is_loop(), "loop in matching symmetric difference");
        adj[static_cast<std::size_t>(ed.u)].push_back({e, ed.v});
        adj[static_cast<std::size_t>(ed.v)].push_back({e, ed.u});
    }
    for (auto& lst : adj)
        DMATCH_CHECK(lst.size() <= 2, "degree > 2 in matching symmetric difference");

    std::vector<bool> edge_done(static_cast<std::size_t>(g.edge_count()), false);
    std::vector<AlternatingComponent> out;

    auto walk = [&](Vertex start, bool cycle) {
        AlternatingComponent comp;
        comp.is_cycle = cycle;
        comp.vertices.push_back(start);
        Vertex at = start;
        for (;;) {
            EdgeId next = -1;
            Vertex to = -1;
            for (const IncidentEdge& ie : adj[static_cast<std::size_t>(at)]) {
                if (!edge_done[static_cast<std::size_t>(ie.id)]) {
                    next = ie.id;
                    to = ie.other;
                    break;
                }
            }
            if (next < 0) break;
            edge_done[static_cast<std::size_t>(next)] = true;
            comp.edges.push_back(next);
            at = to;
            if (cycle && at == start) break;
            comp.vertices.push_back(at);
        }
        out.push_back(std::move(comp));
    };

    // Paths first, starting from degree-1 vertices in ascending order.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (adj[static_cast<std::size_t>(v)].size() != 1) continue;
        bool fresh = !edge_done[static_cast<std::size_t>(
            adj[static_cast<std::size_t>(v)][0].id)];
        if (fresh) walk(v, false);
    }
    // Remaining edges lie on cycles.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const IncidentEdge& ie : adj[static_cast<std::size_t>(v)]) {
            if (!edge_done[static_cast<std::size_t>(ie.id)]) {
                walk(v, true);
                break;
            }
        }
    }

    for (const AlternatingComponent& comp : out) {
        if (comp.is_cycle)
            DMATCH_CHECK(comp.edges.size() % 2 == 0,
                         "odd cycle in matching symmetric difference");
        for (std::size_t i = 0; i + 1 < comp.edges.size(); ++i) {
            bool a = f.contains(comp.edges[i]);
            bool b = f.contains(comp.edges[i + 1]);
            DMATCH_CHECK(a != b, "non-alternating component");
        }
    }
    return out;
}

}  // namespace dmatch
