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

#include "dmatch/separated.hpp"

#include <algorithm>

#include "dmatch/exact.hpp"

namespace dmatch {

namespace {

std::vector<bool> saturation(const Multigraph& g, const Matching& m) {
    std::vector<bool> sat(static_cast<std::size_t>(g.vertex_count()), false);
    for (EdgeId e : m.edge_ids) {
        const Edge& ed = g.edge(e);
        sat[static_cast<std::size_t>(ed.u)] = true;
        sat[static_cast<std::size_t>(ed.v)] = true;
    }
    return sat;
}

std::optional<Vertex> common_neighbor(const Multigraph& g, Vertex a, Vertex b) {
    std::optional<Vertex> best;
    for (const IncidentEdge& ia : g.incident(a))
        for (const IncidentEdge& ib : g.incident(b))
            if (ia.other == ib.other && (!best || ia.other < *best)) best = ia.other;
    return best;
}

// The alternating component of F (symm diff) F' that contains edge e.
AlternatingComponent component_containing(const Multigraph& g, const Matching& f,
                                          const Matching& f_prime, EdgeId e) {
    auto comps = symmetric_difference_components(g, f, f_prime);
    for (AlternatingComponent& c : comps)
        if (std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end())
            return std::move(c);
    throw std::logic_error("edge not in symmetric difference");
}

bool on_path(const AlternatingComponent& p, Vertex v) {
    return std::find(p.vertices.begin(), p.vertices.end(), v) != p.vertices.end();
}

}  // namespace

int count_bad_pairs(const Multigraph& g, const Matching& m) {
    std::vector<Vertex> uns = unsaturated_vertices(g, m);
    int bad = 0;
    for (std::size_t i = 0; i < uns.size(); ++i)
        for (std::size_t j = i + 1; j < uns.size(); ++j)
            if (common_neighbor(g, uns[i], uns[j])) ++bad;
    return bad;
}

std::optional<std::tuple<Vertex, Vertex, Vertex>> first_bad_pair(const Multigraph& g,
                                                                 const Matching& m) {
    std::vector<Vertex> uns = unsaturated_vertices(g, m);
    for (std::size_t i = 0; i < uns.size(); ++i)
        for (std::size_t j = i + 1; j < uns.size(); ++j)
            if (auto q = common_neighbor(g, uns[i], uns[j]))
                return std::make_tuple(uns[i], uns[j], *q);
    return std::nullopt;
}

Matching improvement_step(const Multigraph& g, const Matching& f, Vertex u, Vertex w,
                          Vertex q) {
    std::vector<bool> sat = saturation(g, f);
    std::vector<EdgeId> mate = saturating_edges(g, f);
    if (u == w || sat[static_cast<std::size_t>(u)] || sat[static_cast<std::size_t>(w)] ||
        !g.adjacent(u, q) || !g.adjacent(w, q))
        throw std::invalid_argument("inputs do not form a bad pair");
    if (!sat[static_cast<std::size_t>(q)])
        throw std::invalid_argument("q unsaturated: F is not maximum");
    if (f.size() != nu1(g)) throw std::invalid_argument("F is not maximum");

    int bad_before = count_bad_pairs(g, f);

    // F' = (F \ {e_q}) u {e}: a maximum matching containing e = (u, q).
    EdgeId e = g.find_edge(u, q);
    EdgeId e_q = mate[static_cast<std::size_t>(q)];
    Matching f_prime = f;
    f_prime.erase(e_q);
    f_prime.insert(e);

    // Constructive reading of the proof's "P_e of maximum length": while the
    // far endpoint v has a neighbor off the path, exchange an F'-edge to
    // extend the alternating component containing e.
    AlternatingComponent path = component_containing(g, f, f_prime, e);
    DMATCH_CHECK(!path.is_cycle, "P_e must be a path");
    for (int guard = 0; ; ++guard) {
        DMATCH_CHECK(guard <= g.vertex_count(), "P_e lengthening did not terminate");
        DMATCH_CHECK(path.edges.size() % 2 == 0, "P_e must be even");
        Vertex v = (path.vertices.front() == u) ? path.vertices.back()
                                                : path.vertices.front();
        DMATCH_CHECK(path.vertices.front() == u || path.vertices.back() == u,
                     "u must be an endpoint of P_e");
        Vertex off = -1;
        for (const IncidentEdge& ie : g.incident(v))
            if (!on_path(path, ie.other) && (off < 0 || ie.other < off)) off = ie.other;
        if (off < 0) break;
        std::vector<EdgeId> mate_p = saturating_edges(g, f_prime);
        EdgeId to_off = g.find_edge(v, off);
        DMATCH_CHECK(!f.contains(to_off) && !f_prime.contains(to_off),
                     "(v,v') may not lie in F or F'");
        EdgeId drop = mate_p[static_cast<std::size_t>(off)];
        DMATCH_CHECK(drop >= 0, "off-path neighbor must be F'-saturated");
        f_prime.erase(drop);
        f_prime.insert(to_off);
        std::size_t old_len = path.edges.size();
        path = component_containing(g, f, f_prime, e);
        DMATCH_CHECK(path.edges.size() > old_len, "P_e must grow strictly");
    }

    Vertex v = (path.vertices.front() == u) ? path.vertices.back() : path.vertices.front();
    // Claim: the neighbours of v lie on P_e and differ from u and q.
    for (const IncidentEdge& ie : g.incident(v)) {
        DMATCH_CHECK(on_path(path, ie.other), "neighbor of v off P_e after lengthening");
        DMATCH_CHECK(ie.other != u && ie.other != q, "v adjacent to u or q");
    }
    DMATCH_CHECK(path.edges.size() >= 4, "P_e shorter than four edges");

    std::vector<EdgeId> mate_now = saturating_edges(g, f);
    EdgeId pv = mate_now[static_cast<std::size_t>(v)];
    DMATCH_CHECK(pv >= 0, "v must be F-saturated");
    Vertex p = g.edge(pv).other(v);

    Matching result = f;
    if (!g.adjacent(p, w)) {
        // Case 1: shift F along P_e.
        for (EdgeId pe : path.edges) {
            if (result.contains(pe)) result.erase(pe);
            else result.insert(pe);
        }
    } else {
        // Case 2: F_1 = (F \ {(p,v)}) u {(p,w)}.
        result.erase(pv);
        result.insert(g.find_edge(p, w));
    }

    DMATCH_CHECK(is_valid_matching(g, result), "improvement step broke the matching");
    DMATCH_CHECK(result.size() == f.size(), "improvement step changed the size");
    DMATCH_CHECK(count_bad_pairs(g, result) < bad_before,
                 "improvement step did not reduce bad pairs");
    return result;
}

SeparatedMatching separated_maximum_matching(const Multigraph& g) {
    if (g.has_loop()) throw std::invalid_argument("loopless graph required");
    if (g.vertex_count() == 0 || g.min_degree() < 2 || g.max_degree() > 3)
        throw std::invalid_argument("requires 2 <= delta <= Delta <= 3");

    Matching f = maximum_matching(g);
    int guard = count_bad_pairs(g, f);
    while (auto bad = first_bad_pair(g, f)) {
        DMATCH_CHECK(guard-- > 0, "bad-pair elimination did not terminate");
        auto [u, w, q] = *bad;
        f = improvement_step(g, f, u, w, q);
    }
    SeparatedMatching out;
    out.matching = std::move(f);
    out.unsaturated = unsaturated_vertices(g, out.matching);
    out.bad_pairs = 0;
    return out;
}

}  // namespace dmatch
