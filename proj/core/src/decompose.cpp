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

#include "dmatch/decompose.hpp"

#include <algorithm>

#include "dmatch/exact.hpp"

namespace dmatch {

namespace {

bool is_even_cycle_graph(const Multigraph& g) {
    return g.is_cycle_graph() && g.vertex_count() % 2 == 0;
}

bool is_odd_cycle_graph(const Multigraph& g) {
    return g.is_cycle_graph() && g.vertex_count() % 2 == 1;
}

void require_subdivision_shape(const Multigraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("graph must be connected");
    if (g.vertex_count() == 0 || g.min_degree() < 2)
        throw std::invalid_argument("requires delta >= 2");
    for (const Edge& e : g.edges())
        if (g.degree(e.u) >= 3 && g.degree(e.v) >= 3)
            throw std::invalid_argument("edge joins two degree->=3 vertices");
}

// Any cycle of the graph induced on the still-remaining vertices, as a
// closed walk; deterministic (smallest start, smallest edge id first).
std::optional<SystemCycle> find_cycle(const Multigraph& g, const std::vector<bool>& remaining) {
    int n = g.vertex_count();
    std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 active, 2 done
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<EdgeId> parent_edge(static_cast<std::size_t>(n), -1);

    for (Vertex s = 0; s < n; ++s) {
        if (!remaining[static_cast<std::size_t>(s)] || state[static_cast<std::size_t>(s)] != 0)
            continue;
        // Iterative DFS keeping an explicit walk stack.
        std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
        state[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            auto& [v, it] = stack.back();
            auto inc = g.incident(v);
            if (it == inc.size()) {
                state[static_cast<std::size_t>(v)] = 2;
                stack.pop_back();
                continue;
            }
            const IncidentEdge ie = inc[it++];
            if (!remaining[static_cast<std::size_t>(ie.other)]) continue;
            if (ie.id == parent_edge[static_cast<std::size_t>(v)]) continue;
            if (ie.other == v) continue;  // loops are not cycles
            if (state[static_cast<std::size_t>(ie.other)] == 1) {
                // Back edge: walk the tree path from v up to ie.other; the
                // collected lists already satisfy edges[i] joining
                // vertices[i] and vertices[i+1 mod L].
                SystemCycle cyc;
                Vertex at = v;
                while (at != ie.other) {
                    cyc.vertices.push_back(at);
                    cyc.edges.push_back(parent_edge[static_cast<std::size_t>(at)]);
                    at = parent[static_cast<std::size_t>(at)];
                }
                cyc.vertices.push_back(ie.other);
                cyc.edges.push_back(ie.id);
                return cyc;
            }
            if (state[static_cast<std::size_t>(ie.other)] == 0) {
                state[static_cast<std::size_t>(ie.other)] = 1;
                parent[static_cast<std::size_t>(ie.other)] = v;
                parent_edge[static_cast<std::size_t>(ie.other)] = ie.id;
                stack.push_back({ie.other, 0});
            }
        }
    }
    return std::nullopt;
}

int degree_in(const Multigraph& g, const std::vector<bool>& remaining, Vertex v) {
    int d = 0;
    for (const IncidentEdge& ie : g.incident(v)) {
        if (ie.other == v) continue;
        if (remaining[static_cast<std::size_t>(ie.other)]) ++d;
    }
    return d;
}

}  // namespace

std::pair<Matching, Matching> system_alternating_pair(const Multigraph& g,
                                                      const PathCycleSystem& sys) {
    Matching h, hp;
    auto spread = [&](const std::vector<EdgeId>& seq) {
        for (std::size_t i = 0; i < seq.size(); ++i)
            (i % 2 == 0 ? h : hp).insert(seq[i]);
    };
    for (const SystemCycle& c : sys.cycles) spread(c.edges);
    for (const SystemPath& p : sys.paths) spread(p.edges);
    DMATCH_CHECK(validate_family(g, MatchingFamily{{h, hp}}),
                 "alternating pair is not a disjoint pair of matchings");
    return {h, hp};
}

SystemWitness build_system(const Multigraph& g) {
    if (g.vertex_count() == 0 || g.min_degree() < 2)
        throw std::invalid_argument("requires delta >= 2");
    if (g.has_loop()) throw std::invalid_argument("loopless graph required");

    // Every edge must join a degree-2 vertex to a degree->=3 vertex; a
    // degree-2-to-degree-2 edge is tolerated only inside an even 2-regular
    // component, which enters the system as a single cycle.
    auto comps = connected_components(g);
    std::vector<bool> in_two_regular(static_cast<std::size_t>(g.vertex_count()), false);
    for (const InducedSubgraph& part : comps) {
        if (part.graph.is_regular(2)) {
            if (part.graph.vertex_count() % 2 != 0)
                throw std::invalid_argument("odd 2-regular component");
            for (Vertex v : part.vertex_map) in_two_regular[static_cast<std::size_t>(v)] = true;
        }
    }
    for (const Edge& e : g.edges()) {
        int du = g.degree(e.u), dv = g.degree(e.v);
        bool bipartite_edge = (du == 2 && dv >= 3) || (dv == 2 && du >= 3);
        bool cycle_edge = in_two_regular[static_cast<std::size_t>(e.u)];
        if (!bipartite_edge && !cycle_edge)
            throw std::invalid_argument("edge joins two degree-2 or two degree->=3 vertices");
    }

    std::vector<bool> remaining(static_cast<std::size_t>(g.vertex_count()), true);
    PathCycleSystem sys;

    // Cycles first, until the remainder contains none.
    while (auto cyc = find_cycle(g, remaining)) {
        for (Vertex v : cyc->vertices) remaining[static_cast<std::size_t>(v)] = false;
        DMATCH_CHECK(cyc->length() % 2 == 0, "system cycle must be even");
        sys.cycles.push_back(std::move(*cyc));
    }

    // The remainder is a forest; peel leaf-to-leaf paths.
    for (;;) {
        Vertex leaf = -1;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (remaining[static_cast<std::size_t>(v)] && degree_in(g, remaining, v) == 1) {
                leaf = v;
                break;
            }
        }
        if (leaf < 0) break;
        SystemPath path;
        path.vertices.push_back(leaf);
        Vertex at = leaf;
        EdgeId came_by = -1;
        for (;;) {
            EdgeId next = -1;
            Vertex to = -1;
            for (const IncidentEdge& ie : g.incident(at)) {
                if (ie.other == at || !remaining[static_cast<std::size_t>(ie.other)]) continue;
                if (ie.id == came_by) continue;
                bool fresh = std::find(path.vertices.begin(), path.vertices.end(), ie.other) ==
                             path.vertices.end();
                if (fresh) {
                    next = ie.id;
                    to = ie.other;
                    break;
                }
            }
            if (next < 0) break;
            path.edges.push_back(next);
            path.vertices.push_back(to);
            came_by = next;
            at = to;
        }
        DMATCH_CHECK(path.length() % 2 == 0, "leaf-to-leaf path must be even");
        for (Vertex v : path.vertices) remaining[static_cast<std::size_t>(v)] = false;
        sys.paths.push_back(std::move(path));
    }

    // Leftover isolated vertices are zero-length paths.
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (remaining[static_cast<std::size_t>(v)]) sys.paths.push_back({{v}, {}});

    // r = |V_2| - |V_>=3| = (1/2) sum_{d(v)>=3} (d(v)-2) over the bipartite
    // part; 2-regular components contribute no paths.
    int expected_r = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) expected_r += g.degree(v) - 2;
    DMATCH_CHECK(expected_r % 2 == 0, "odd path-count numerator");
    expected_r /= 2;
    DMATCH_CHECK(sys.path_count() == expected_r, "path count does not match (1.1)");
    DMATCH_CHECK(satisfies_system_conditions(g, sys), "system conditions violated");
    for (const SystemPath& p : sys.paths)
        DMATCH_CHECK(p.length() % 2 == 0, "system path must be even");

    SystemWitness w;
    w.system = std::move(sys);
    std::tie(w.h, w.h_prime) = system_alternating_pair(g, w.system);
    DMATCH_CHECK(w.h.size() == w.h_prime.size(), "alternating pair must split evenly");
    DMATCH_CHECK(w.h.size() == nu1(g), "alternating pair member is not maximum");
    w.included_max_matching = w.h;
    DMATCH_CHECK(matching_on_system(w.system, *w.included_max_matching),
                 "included matching must lie on the system");
    return w;
}

namespace {

// Orient a path's vertex/edge lists so that `endpoint` comes first.
SystemPath oriented(SystemPath p, Vertex endpoint) {
    if (p.vertices.front() == endpoint) return p;
    DMATCH_CHECK(p.vertices.back() == endpoint, "vertex is not a path endpoint");
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

// The two g'-halves of the base edge after a 1-subdivision: ids of the
// halves incident to each original endpoint.
struct SplitEdge {
    Vertex mid;
    EdgeId half_at(const Multigraph& gp, Vertex v, const SubdivisionTrace& t) const {
        DMATCH_CHECK(t.path_edges.size() == 2, "expected a 1-subdivision trace");
        const Edge& first = gp.edge(t.path_edges[0]);
        if (first.u == v || first.v == v) return t.path_edges[0];
        return t.path_edges[1];
    }
};

}  // namespace

LiftResult lift_system(const Multigraph& g, const SystemWitness& w, EdgeId e) {
    require_subdivision_shape(g);
    if (!satisfies_system_conditions(g, w.system))
        throw std::invalid_argument("input system violates conditions (1)-(4)");
    g.check_edge(e);

    SubdivisionResult sub = subdivide_edge(g, e, 1);
    const Multigraph& gp = sub.graph;
    Vertex w_e = g.vertex_count();
    SplitEdge split{w_e};

    PathCycleSystem sys = w.system;  // lifted in place
    int r_before = sys.path_count();

    // Locate e on the system.
    int on_path = -1, on_cycle = -1;
    for (std::size_t i = 0; i < sys.paths.size(); ++i)
        if (std::find(sys.paths[i].edges.begin(), sys.paths[i].edges.end(), e) !=
            sys.paths[i].edges.end())
            on_path = static_cast<int>(i);
    for (std::size_t i = 0; i < sys.cycles.size(); ++i)
        if (std::find(sys.cycles[i].edges.begin(), sys.cycles[i].edges.end(), e) !=
            sys.cycles[i].edges.end())
            on_cycle = static_cast<int>(i);

    if (on_path >= 0) {
        // Case 1: splice the new vertex into the path.
        SystemPath& p = sys.paths[static_cast<std::size_t>(on_path)];
        std::size_t idx = static_cast<std::size_t>(
            std::find(p.edges.begin(), p.edges.end(), e) - p.edges.begin());
        Vertex x = p.vertices[idx];
        EdgeId first = split.half_at(gp, x, sub.trace);
        EdgeId second = sub.trace.path_edges[0] == first ? sub.trace.path_edges[1]
                                                         : sub.trace.path_edges[0];
        p.vertices.insert(p.vertices.begin() + static_cast<std::ptrdiff_t>(idx) + 1, w_e);
        p.edges[idx] = first;
        p.edges.insert(p.edges.begin() + static_cast<std::ptrdiff_t>(idx) + 1, second);
    } else if (on_cycle < 0) {
        // Case 2: e is off the system; prepend the new vertex to the path
        // ending at e's degree-2 endpoint.
        const Edge& ed = g.edge(e);
        Vertex u = (g.degree(ed.u) == 2) ? ed.u : ed.v;
        DMATCH_CHECK(g.degree(u) == 2, "off-system edge needs a degree-2 endpoint");
        EdgeId half_u = split.half_at(gp, u, sub.trace);
        bool placed = false;
        for (SystemPath& p : sys.paths) {
            if (p.vertices.front() == u || p.vertices.back() == u) {
                p = oriented(std::move(p), u);
                p.vertices.insert(p.vertices.begin(), w_e);
                p.edges.insert(p.edges.begin(), half_u);
                placed = true;
                break;
            }
        }
        DMATCH_CHECK(placed, "degree-2 endpoint of an off-system edge must end a path");
    } else {
        // Case 3: e lies on a cycle; dissolve the cycle into a path through
        // a neighbouring path.
        SystemCycle cyc = sys.cycles[static_cast<std::size_t>(on_cycle)];
        sys.cycles.erase(sys.cycles.begin() + on_cycle);

        const Edge& ed = g.edge(e);
        Vertex v = (g.degree(ed.u) >= 3) ? ed.u : ed.v;
        Vertex u = ed.other(v);
        DMATCH_CHECK(g.degree(v) >= 3 && g.degree(u) == 2,
                     "cycle edge must join degree 2 to degree >= 3");

        // Smallest off-cycle edge (v, z); z is an end of some path.
        EdgeId vz = -1;
        Vertex z = -1;
        for (const IncidentEdge& ie : g.incident(v)) {
            bool on_c = std::find(cyc.edges.begin(), cyc.edges.end(), ie.id) != cyc.edges.end();
            if (!on_c && vz < 0) {
                vz = ie.id;
                z = ie.other;
            }
        }
        DMATCH_CHECK(vz >= 0, "degree->=3 cycle vertex needs an off-cycle edge");

        int pz_idx = -1;
        for (std::size_t i = 0; i < sys.paths.size(); ++i)
            if (sys.paths[i].vertices.front() == z || sys.paths[i].vertices.back() == z)
                if (pz_idx < 0) pz_idx = static_cast<int>(i);
        DMATCH_CHECK(pz_idx >= 0, "off-cycle neighbor must end a path");
        SystemPath pz = oriented(sys.paths[static_cast<std::size_t>(pz_idx)], z);
        std::reverse(pz.vertices.begin(), pz.vertices.end());
        std::reverse(pz.edges.begin(), pz.edges.end());  // now ends at z
        sys.paths.erase(sys.paths.begin() + pz_idx);

        // P = C - e starting from v and ending at u.
        std::size_t le = static_cast<std::size_t>(
            std::find(cyc.edges.begin(), cyc.edges.end(), e) - cyc.edges.begin());
        std::size_t L = cyc.vertices.size();
        std::vector<Vertex> pv;
        std::vector<EdgeId> pe;
        // cyc.edges[le] joins cyc.vertices[le] and cyc.vertices[le+1 mod L].
        bool v_at_le = cyc.vertices[le] == v;
        std::size_t start = v_at_le ? le : (le + 1) % L;
        int dir = v_at_le ? -1 : 1;  // walk away from e
        std::size_t at = start;
        pv.push_back(cyc.vertices[at]);
        for (std::size_t step = 0; step + 1 < L; ++step) {
            std::size_t edge_idx = (dir == 1) ? at : (at + L - 1) % L;
            std::size_t nxt = (dir == 1) ? (at + 1) % L : (at + L - 1) % L;
            pe.push_back(cyc.edges[edge_idx]);
            pv.push_back(cyc.vertices[nxt]);
            at = nxt;
        }
        DMATCH_CHECK(pv.front() == v && pv.back() == u, "cycle walk must run v .. u");

        SystemPath joined;
        joined.vertices = pz.vertices;
        joined.edges = pz.edges;
        joined.edges.push_back(vz);
        joined.vertices.insert(joined.vertices.end(), pv.begin(), pv.end());
        joined.edges.insert(joined.edges.end(), pe.begin(), pe.end());
        joined.edges.push_back(split.half_at(gp, u, sub.trace));
        joined.vertices.push_back(w_e);
        sys.paths.push_back(std::move(joined));
    }

    DMATCH_CHECK(sys.path_count() == r_before, "lift must preserve the path count");
    DMATCH_CHECK(satisfies_system_conditions(gp, sys), "lifted system violates (1)-(4)");

    // Property (5): start from a maximum matching and strictly increase its
    // on-system edge count via cycle exchanges and path splices.
    Matching m = maximum_matching(gp);
    int max_size = m.size();
    auto on_system_count = [&](const Matching& mm) {
        std::vector<EdgeId> on;
        for (const SystemPath& p : sys.paths) on.insert(on.end(), p.edges.begin(), p.edges.end());
        for (const SystemCycle& c : sys.cycles) on.insert(on.end(), c.edges.begin(), c.edges.end());
        std::sort(on.begin(), on.end());
        int cnt = 0;
        for (EdgeId id : mm.edge_ids)
            if (std::binary_search(on.begin(), on.end(), id)) ++cnt;
        return cnt;
    };

    for (int guard = 0;; ++guard) {
        DMATCH_CHECK(guard <= max_size + 1, "property-(5) loop did not terminate");
        int before = on_system_count(m);

        // Under-matched cycle: swap in its 1-factor.
        bool swapped = false;
        for (const SystemCycle& c : sys.cycles) {
            int on_c = 0;
            for (EdgeId id : c.edges)
                if (m.contains(id)) ++on_c;
            if (on_c * 2 == c.length()) continue;
            Matching next = m;
            for (Vertex cv : c.vertices) {
                std::vector<EdgeId> sat = saturating_edges(gp, next);
                EdgeId se = sat[static_cast<std::size_t>(cv)];
                if (se >= 0) next.erase(se);
            }
            for (std::size_t i = 0; i < c.edges.size(); i += 2) next.insert(c.edges[i]);
            DMATCH_CHECK(is_valid_matching(gp, next), "cycle exchange broke the matching");
            DMATCH_CHECK(next.size() == max_size, "cycle exchange changed the matching size");
            m = std::move(next);
            swapped = true;
            break;
        }
        if (swapped) {
            DMATCH_CHECK(on_system_count(m) > before, "cycle exchange must gain an edge");
            continue;
        }

        // Off-system matching edge: splice the two paths it joins.
        EdgeId off = -1;
        {
            std::vector<EdgeId> on;
            for (const SystemPath& p : sys.paths)
                on.insert(on.end(), p.edges.begin(), p.edges.end());
            for (const SystemCycle& c : sys.cycles)
                on.insert(on.end(), c.edges.begin(), c.edges.end());
            std::sort(on.begin(), on.end());
            for (EdgeId id : m.edge_ids)
                if (!std::binary_search(on.begin(), on.end(), id)) {
                    off = id;
                    break;
                }
        }
        if (off < 0) break;

        const Edge& ed = gp.edge(off);
        Vertex hi = (gp.degree(ed.u) >= 3) ? ed.u : ed.v;
        Vertex lo = ed.other(hi);
        DMATCH_CHECK(gp.degree(hi) >= 3 && gp.degree(lo) == 2,
                     "off-system matching edge must join degree 2 to degree >= 3");

        int pv_idx = -1, pu_idx = -1;
        for (std::size_t i = 0; i < sys.paths.size(); ++i) {
            const SystemPath& p = sys.paths[i];
            if (p.vertices.front() == lo || p.vertices.back() == lo)
                if (pv_idx < 0) pv_idx = static_cast<int>(i);
            if (std::find(p.vertices.begin(), p.vertices.end(), hi) != p.vertices.end())
                pu_idx = static_cast<int>(i);
        }
        DMATCH_CHECK(pv_idx >= 0, "degree-2 end of off-system edge must end a path");
        DMATCH_CHECK(pu_idx >= 0, "degree->=3 end of off-system edge must lie on a path");

        if (pu_idx == pv_idx) {
            // Both ends on one path [w..u, x_1..x_t, v]: reroute it as
            // [w..u, v, x_t..x_1] through the matching edge; the dropped
            // path edge (u, x_1) joins degree 3 to degree 2, so (4) holds.
            SystemPath p = sys.paths[static_cast<std::size_t>(pv_idx)];
            if (p.vertices.front() == lo) {
                std::reverse(p.vertices.begin(), p.vertices.end());
                std::reverse(p.edges.begin(), p.edges.end());
            }
            DMATCH_CHECK(p.vertices.back() == lo, "degree-2 end must close the reroute");
            std::size_t j = static_cast<std::size_t>(
                std::find(p.vertices.begin(), p.vertices.end(), hi) - p.vertices.begin());
            std::size_t s = p.edges.size();
            DMATCH_CHECK(j + 1 <= s, "degree->=3 vertex must precede the rerouted segment");
            SystemPath rerouted;
            rerouted.vertices.assign(p.vertices.begin(),
                                     p.vertices.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            rerouted.edges.assign(p.edges.begin(),
                                  p.edges.begin() + static_cast<std::ptrdiff_t>(j));
            rerouted.edges.push_back(off);
            rerouted.vertices.push_back(lo);
            for (std::size_t i = s; i > j + 1; --i) {
                rerouted.edges.push_back(p.edges[i - 1]);
                rerouted.vertices.push_back(p.vertices[i - 1]);
            }
            sys.paths[static_cast<std::size_t>(pv_idx)] = std::move(rerouted);
        } else {
            SystemPath pu = sys.paths[static_cast<std::size_t>(pu_idx)];
            SystemPath pv = oriented(sys.paths[static_cast<std::size_t>(pv_idx)], lo);
            // Remove pv and pu (higher index first to keep the other valid).
            std::vector<int> kill{pv_idx, pu_idx};
            std::sort(kill.begin(), kill.end(), std::greater<int>());
            for (int idx : kill) sys.paths.erase(sys.paths.begin() + idx);

            std::size_t at_u = static_cast<std::size_t>(
                std::find(pu.vertices.begin(), pu.vertices.end(), hi) - pu.vertices.begin());
            DMATCH_CHECK(at_u > 0 && at_u + 1 < pu.vertices.size(),
                         "degree->=3 vertex cannot be a path end");

            SystemPath tail;  // P_zu - u
            tail.vertices.assign(pu.vertices.begin() + static_cast<std::ptrdiff_t>(at_u) + 1,
                                 pu.vertices.end());
            tail.edges.assign(pu.edges.begin() + static_cast<std::ptrdiff_t>(at_u) + 1,
                              pu.edges.end());

            SystemPath glued;  // P_wu, (u,v), v, P_v
            glued.vertices.assign(pu.vertices.begin(),
                                  pu.vertices.begin() + static_cast<std::ptrdiff_t>(at_u) + 1);
            glued.edges.assign(pu.edges.begin(),
                               pu.edges.begin() + static_cast<std::ptrdiff_t>(at_u));
            glued.edges.push_back(off);
            glued.vertices.insert(glued.vertices.end(), pv.vertices.begin(), pv.vertices.end());
            glued.edges.insert(glued.edges.end(), pv.edges.begin(), pv.edges.end());

            sys.paths.push_back(std::move(tail));
            sys.paths.push_back(std::move(glued));
        }

        DMATCH_CHECK(sys.path_count() == r_before, "splice must preserve the path count");
        DMATCH_CHECK(satisfies_system_conditions(gp, sys), "spliced system violates (1)-(4)");
        DMATCH_CHECK(on_system_count(m) > before, "splice must gain an on-system edge");
    }

    DMATCH_CHECK(m.size() == nu1(gp), "included matching must stay maximum");
    DMATCH_CHECK(matching_on_system(sys, m), "included matching must lie on the system");
    for (const SystemCycle& c : sys.cycles) {
        int on_c = 0;
        for (EdgeId id : c.edges)
            if (m.contains(id)) ++on_c;
        DMATCH_CHECK(on_c * 2 == c.length(), "cycle must carry exactly half its edges in M");
    }

    LiftResult out{gp, sub.trace, SystemWitness{}};
    out.witness.system = std::move(sys);
    std::tie(out.witness.h, out.witness.h_prime) =
        system_alternating_pair(out.graph, out.witness.system);
    out.witness.included_max_matching = std::move(m);
    return out;
}

TransformedPair transform_pair_through_subdivision(const Multigraph& g, const Matching& h,
                                                   const Matching& h_prime, EdgeId e) {
    require_subdivision_shape(g);
    if (is_even_cycle_graph(g)) throw std::invalid_argument("g must not be an even cycle");
    if (!validate_family(g, MatchingFamily{{h, h_prime}}))
        throw std::invalid_argument("input is not a disjoint pair of matchings");
    g.check_edge(e);

    SubdivisionResult sub = subdivide_edge(g, e, 1);
    const Multigraph& gp = sub.graph;
    SplitEdge split{g.vertex_count()};
    int total_before = h.size() + h_prime.size();

    Matching nh = h, nhp = h_prime;

    auto drop_all = [](Matching& m, const std::vector<EdgeId>& ids) {
        for (EdgeId id : ids) m.erase(id);
    };
    // Alternate seq into (nh, nhp); start = 0 puts the first edge in nh.
    auto alternate = [&](const std::vector<EdgeId>& seq, int start) {
        for (std::size_t i = 0; i < seq.size(); ++i)
            ((static_cast<int>(i) + start) % 2 == 0 ? nh : nhp).insert(seq[i]);
    };
    // The subdivided edge sequence of a walk: replace e by its two halves.
    auto lifted_edges = [&](const std::vector<EdgeId>& edges,
                            const std::vector<Vertex>& verts) {
        std::vector<EdgeId> out;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i] != e) {
                out.push_back(edges[i]);
            } else {
                out.push_back(split.half_at(gp, verts[i], sub.trace));
                out.push_back(split.half_at(gp, verts[i + 1], sub.trace));
            }
        }
        return out;
    };

    bool in_pair = h.contains(e) || h_prime.contains(e);
    if (in_pair) {
        auto comps = symmetric_difference_components(g, h, h_prime);
        const AlternatingComponent* comp = nullptr;
        for (const AlternatingComponent& c : comps)
            if (std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end()) comp = &c;
        DMATCH_CHECK(comp != nullptr, "pair edge must lie in the symmetric difference");

        if (comp->is_cycle) {
            // Case 1: alternating cycle. Pick v of degree >= 3 on C, an
            // off-C neighbour u of degree 2, and rebuild C + (u,v) as one
            // alternating path that skips one cycle edge f at v.
            Vertex v = -1;
            for (Vertex cand : comp->vertices)
                if (g.degree(cand) >= 3 && (v < 0 || cand < v)) v = cand;
            DMATCH_CHECK(v >= 0, "alternating cycle in a non-cycle graph needs a deg-3 vertex");

            EdgeId uv = -1;
            for (const IncidentEdge& ie : g.incident(v)) {
                bool on_c = std::find(comp->edges.begin(), comp->edges.end(), ie.id) !=
                            comp->edges.end();
                if (on_c) continue;
                bool other_on_c = std::find(comp->vertices.begin(), comp->vertices.end(),
                                            ie.other) != comp->vertices.end();
                if (other_on_c) continue;
                if (uv < 0) uv = ie.id;
            }
            DMATCH_CHECK(uv >= 0, "no off-cycle edge at v");
            DMATCH_CHECK(!h.contains(uv) && !h_prime.contains(uv),
                         "(u,v) must avoid both matchings");
            Vertex u = g.edge(uv).other(v);
            DMATCH_CHECK(g.degree(u) == 2, "u must have degree 2");

            EdgeId f = -1;
            std::size_t L = comp->vertices.size();
            for (std::size_t i = 0; i < L; ++i) {
                EdgeId ce = comp->edges[i];
                if (ce == e) continue;
                const Edge& ced = g.edge(ce);
                if (ced.touches(v) && (f < 0 || ce < f)) f = ce;
            }
            DMATCH_CHECK(f >= 0, "v needs a cycle edge besides e");

            // Walk C - f from v; then prepend u.
            std::size_t lf = static_cast<std::size_t>(
                std::find(comp->edges.begin(), comp->edges.end(), f) - comp->edges.begin());
            bool v_at_lf = comp->vertices[lf] == v;
            std::size_t start = v_at_lf ? lf : (lf + 1) % L;
            int dir = v_at_lf ? -1 : 1;
            std::vector<Vertex> walk_v{u, v};
            std::vector<EdgeId> walk_e{uv};
            std::size_t at = start;
            for (std::size_t step = 0; step + 1 < L; ++step) {
                std::size_t edge_idx = (dir == 1) ? at : (at + L - 1) % L;
                std::size_t nxt = (dir == 1) ? (at + 1) % L : (at + L - 1) % L;
                walk_e.push_back(comp->edges[edge_idx]);
                walk_v.push_back(comp->vertices[nxt]);
                at = nxt;
            }

            // u's other edge decides which class the walk starts in.
            EdgeId uw = -1;
            for (const IncidentEdge& ie : g.incident(u))
                if (ie.id != uv && (uw < 0 || ie.id < uw)) uw = ie.id;
            DMATCH_CHECK(uw >= 0, "u must have a second edge");
            int start_class = !h.contains(uw) ? 0 : 1;

            drop_all(nh, comp->edges);
            drop_all(nhp, comp->edges);
            alternate(lifted_edges(walk_e, walk_v), start_class);
        } else {
            // Case 2: alternating path; re-alternate its subdivision.
            drop_all(nh, comp->edges);
            drop_all(nhp, comp->edges);
            alternate(lifted_edges(comp->edges, comp->vertices), 0);
        }
    } else {
        // Case 3: e carries no pair edge; give the degree-2 endpoint's new
        // half edge to whichever matching its other edge avoids.
        const Edge& ed = g.edge(e);
        Vertex u;
        if (g.degree(ed.u) == 2 && g.degree(ed.v) == 2) u = std::min(ed.u, ed.v);
        else u = (g.degree(ed.u) == 2) ? ed.u : ed.v;
        DMATCH_CHECK(g.degree(u) == 2, "e needs a degree-2 endpoint");
        EdgeId f = -1;
        for (const IncidentEdge& ie : g.incident(u))
            if (ie.id != e && (f < 0 || ie.id < f)) f = ie.id;
        DMATCH_CHECK(f >= 0, "u must have a second edge");
        EdgeId half_u = split.half_at(gp, u, sub.trace);
        if (!nh.contains(f)) nh.insert(half_u);
        else nhp.insert(half_u);
    }

    DMATCH_CHECK(validate_family(gp, MatchingFamily{{nh, nhp}}),
                 "transformed pair is not a disjoint pair of matchings");
    DMATCH_CHECK(nh.size() + nhp.size() == total_before + 1,
                 "transformed pair must gain exactly one edge");
    return {gp, sub.trace, std::move(nh), std::move(nhp)};
}

int nu2_subdivision_value(const Multigraph& g, EdgeId e) {
    require_subdivision_shape(g);
    if (is_even_cycle_graph(g)) throw std::invalid_argument("g must not be an even cycle");
    g.check_edge(e);
    int base = nu_k_value(g, 2);
    return is_odd_cycle_graph(g) ? base + 2 : base + 1;
}

}  // namespace dmatch
