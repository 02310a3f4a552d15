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

#include "dmatch/system.hpp"

#include <algorithm>

namespace dmatch {

namespace {

bool edge_joins(const Multigraph& g, EdgeId e, Vertex a, Vertex b) {
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    return (ed.u == a && ed.v == b) || (ed.u == b && ed.v == a);
}

struct SystemIndex {
    std::vector<bool> vertex_on;
    std::vector<bool> edge_on;

    SystemIndex(const Multigraph& g, const PathCycleSystem& sys)
        : vertex_on(static_cast<std::size_t>(g.vertex_count()), false),
          edge_on(static_cast<std::size_t>(g.edge_count()), false) {
        for (const SystemPath& p : sys.paths) {
            for (Vertex v : p.vertices) vertex_on[static_cast<std::size_t>(v)] = true;
            for (EdgeId e : p.edges) edge_on[static_cast<std::size_t>(e)] = true;
        }
        for (const SystemCycle& c : sys.cycles) {
            for (Vertex v : c.vertices) vertex_on[static_cast<std::size_t>(v)] = true;
            for (EdgeId e : c.edges) edge_on[static_cast<std::size_t>(e)] = true;
        }
    }
};

}  // namespace

bool validate_system_structure(const Multigraph& g, const PathCycleSystem& sys) {
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    auto claim = [&seen](Vertex v) {
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
        return true;
    };
    for (const SystemPath& p : sys.paths) {
        if (p.vertices.empty()) return false;
        if (p.edges.size() + 1 != p.vertices.size()) return false;
        for (Vertex v : p.vertices)
            if (v < 0 || v >= g.vertex_count() || !claim(v)) return false;
        for (std::size_t i = 0; i < p.edges.size(); ++i)
            if (!edge_joins(g, p.edges[i], p.vertices[i], p.vertices[i + 1])) return false;
    }
    for (const SystemCycle& c : sys.cycles) {
        if (c.vertices.size() < 2) return false;
        if (c.edges.size() != c.vertices.size()) return false;
        for (Vertex v : c.vertices)
            if (v < 0 || v >= g.vertex_count() || !claim(v)) return false;
        for (std::size_t i = 0; i < c.edges.size(); ++i)
            if (!edge_joins(g, c.edges[i], c.vertices[i],
                            c.vertices[(i + 1) % c.vertices.size()]))
                return false;
        // Distinct edges around the cycle (a doubled edge is a 2-cycle).
        std::vector<EdgeId> ids = c.edges;
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
    }
    return true;
}

bool satisfies_system_conditions(const Multigraph& g, const PathCycleSystem& sys) {
    if (!validate_system_structure(g, sys)) return false;
    SystemIndex idx(g, sys);

    // (2) all vertices covered.
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!idx.vertex_on[static_cast<std::size_t>(v)]) return false;

    // (1) cycles alternate degree 2 / >= 3 (hence are even); a cycle that
    // is a whole 2-regular component (all degrees two) is also accepted.
    for (const SystemCycle& c : sys.cycles) {
        if (c.length() % 2 != 0) return false;
        bool all_two = true;
        for (Vertex v : c.vertices)
            if (g.degree(v) != 2) all_two = false;
        if (all_two) continue;
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            bool low = g.degree(c.vertices[i]) == 2;
            bool next_low = g.degree(c.vertices[(i + 1) % c.vertices.size()]) == 2;
            if (low == next_low) return false;
        }
    }

    // (3) path ends: degree 2, and neighbors lying on no path have degree
    // >= 3.
    std::vector<bool> on_some_path(static_cast<std::size_t>(g.vertex_count()), false);
    for (const SystemPath& p : sys.paths)
        for (Vertex v : p.vertices) on_some_path[static_cast<std::size_t>(v)] = true;
    for (const SystemPath& p : sys.paths) {
        for (Vertex end : {p.vertices.front(), p.vertices.back()}) {
            if (g.degree(end) != 2) return false;
            for (const IncidentEdge& ie : g.incident(end)) {
                if (!on_some_path[static_cast<std::size_t>(ie.other)] &&
                    g.degree(ie.other) < 3)
                    return false;
            }
        }
    }

    // (4) off-system edges join degree 2 to degree >= 3.
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (idx.edge_on[static_cast<std::size_t>(e)]) continue;
        const Edge& ed = g.edge(e);
        int du = g.degree(ed.u), dv = g.degree(ed.v);
        bool ok = (du == 2 && dv >= 3) || (dv == 2 && du >= 3);
        if (!ok) return false;
    }
    return true;
}

bool matching_on_system(const PathCycleSystem& sys, const Matching& m) {
    std::vector<EdgeId> on;
    for (const SystemPath& p : sys.paths) on.insert(on.end(), p.edges.begin(), p.edges.end());
    for (const SystemCycle& c : sys.cycles) on.insert(on.end(), c.edges.begin(), c.edges.end());
    std::sort(on.begin(), on.end());
    return std::all_of(m.edge_ids.begin(), m.edge_ids.end(), [&on](EdgeId e) {
        return std::binary_search(on.begin(), on.end(), e);
    });
}

}  // namespace dmatch
