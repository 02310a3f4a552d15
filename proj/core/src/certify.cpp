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

#include "dmatch/certify.hpp"

#include <algorithm>

#include "dmatch/canonical.hpp"
#include "dmatch/decompose.hpp"
#include "dmatch/exact.hpp"
#include "dmatch/pseudograph.hpp"

namespace dmatch {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_cubic(const Multigraph& g) {
    if (g.vertex_count() == 0 || !g.is_cubic())
        throw std::invalid_argument("cubic multigraph required");
}

struct DeletedMatching {
    Multigraph rest;                // g minus the matching edges
    std::vector<EdgeId> edge_map;   // rest edge -> g edge
};

DeletedMatching delete_matching(const Multigraph& g, const Matching& m) {
    DeletedMatching out{Multigraph(g.vertex_count(), g.loop_policy()), {}};
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (m.contains(e)) continue;
        const Edge& ed = g.edge(e);
        out.rest.add_edge(ed.u, ed.v);
        out.edge_map.push_back(e);
    }
    return out;
}

// Alternate cycle-component edges into two matchings (odd cycles leave one
// edge uncovered); edge ids are the component's own.
std::pair<Matching, Matching> cycle_alternation(const InducedSubgraph& comp) {
    // Walk the cycle from vertex 0.
    const Multigraph& c = comp.graph;
    std::vector<EdgeId> order;
    Vertex at = 0;
    EdgeId came = -1;
    do {
        EdgeId next = -1;
        Vertex to = -1;
        for (const IncidentEdge& ie : c.incident(at))
            if (ie.id != came && (next < 0)) {
                next = ie.id;
                to = ie.other;
            }
        DMATCH_CHECK(next >= 0, "cycle walk stuck");
        order.push_back(next);
        came = next;
        at = to;
    } while (at != 0);
    DMATCH_CHECK(static_cast<int>(order.size()) == c.edge_count(), "cycle walk incomplete");

    Matching a, b;
    int usable = c.edge_count() - (c.edge_count() % 2);
    for (int i = 0; i < usable; ++i) (i % 2 == 0 ? a : b).insert(order[static_cast<std::size_t>(i)]);
    return {a, b};
}

void insert_mapped(Matching& into, const Matching& from, const std::vector<EdgeId>& map) {
    for (EdgeId e : from.edge_ids) into.insert(map[static_cast<std::size_t>(e)]);
}

// Compose: realize(G0,k) edge -> component edge -> rest edge -> g edge.
std::vector<EdgeId> compose_maps(const GraphIsomorphism& iso,
                                 const std::vector<EdgeId>& comp_to_rest,
                                 const std::vector<EdgeId>& rest_to_g) {
    std::vector<EdgeId> out(iso.edge_map.size(), -1);
    for (std::size_t e = 0; e < iso.edge_map.size(); ++e)
        out[e] = rest_to_g[static_cast<std::size_t>(
            comp_to_rest[static_cast<std::size_t>(iso.edge_map[e])])];
    return out;
}

}  // namespace

Certificate certify_cubic(const Multigraph& g) {
    require_cubic(g);
    int n = g.vertex_count();

    Certificate cert;
    cert.f = separated_maximum_matching(g);
    DeletedMatching rest = delete_matching(g, cert.f.matching);

    Matching pair_member;       // one matching of G \ F
    Matching triple_a, triple_b;  // a disjoint pair of G \ F

    for (const InducedSubgraph& comp : connected_components(rest.rest)) {
        std::vector<EdgeId> comp_to_g(comp.edge_map.size());
        for (std::size_t e = 0; e < comp.edge_map.size(); ++e)
            comp_to_g[e] = rest.edge_map[static_cast<std::size_t>(comp.edge_map[e])];

        if (comp.graph.is_cycle_graph()) {
            auto [a, b] = cycle_alternation(comp);
            insert_mapped(pair_member, a, comp_to_g);
            insert_mapped(triple_a, a, comp_to_g);
            insert_mapped(triple_b, b, comp_to_g);
            continue;
        }

        // Type (b): a subdivided cubic pseudo-graph with k >= 1 on loops
        // and k >= 2 on chains (separatedness of F gives the 2).
        ToSkeletonResult skel = to_cubic_pseudograph(comp.graph);
        DMATCH_CHECK(valid_subdivision_map(skel.skeleton, skel.k),
                     "separated deletion must leave k >= 2 chains");
        RealizeResult realized = realize(skel.skeleton, skel.k);
        GraphIsomorphism iso = realize_to_host(realized, skel);
        std::vector<EdgeId> to_g = compose_maps(iso, comp.edge_map, rest.edge_map);

        Matching mm = certify_matching(skel.skeleton, skel.k);
        insert_mapped(pair_member, mm, to_g);

        MatchingFamily pp = certify_pair(skel.skeleton, skel.k);
        insert_mapped(triple_a, pp.members[0], to_g);
        insert_mapped(triple_b, pp.members[1], to_g);
    }

    cert.pair_witness.members = {cert.f.matching, std::move(pair_member)};
    cert.triple_witness.members = {cert.f.matching, std::move(triple_a), std::move(triple_b)};
    DMATCH_CHECK(validate_family(g, cert.pair_witness), "pair witness invalid");
    DMATCH_CHECK(validate_family(g, cert.triple_witness), "triple witness invalid");

    cert.claimed_bounds = {
        {"nu1_2_5", ceil_div(2 * n, 5), cert.f.matching.size()},
        {"nu2_4_5", ceil_div(4 * n, 5), cert.pair_total()},
        {"nu3_7_6", ceil_div(7 * n, 6), cert.triple_total()},
    };
    for (const BoundClaim& claim : cert.claimed_bounds)
        DMATCH_CHECK(claim.witness >= claim.bound, "certificate misses its bound: " + claim.name);
    return cert;
}

MatchingFamily pair_to_triple(const Multigraph& g, const Matching& h,
                              const Matching& h_prime) {
    require_cubic(g);
    if (!validate_family(g, MatchingFamily{{h, h_prime}}))
        throw std::invalid_argument("input is not a disjoint pair of matchings");

    // The construction only needs H maximal; extend greedily when not.
    Matching hm = h;
    {
        std::vector<bool> sat(static_cast<std::size_t>(g.vertex_count()), false);
        for (EdgeId e : hm.edge_ids) {
            const Edge& ed = g.edge(e);
            sat[static_cast<std::size_t>(ed.u)] = sat[static_cast<std::size_t>(ed.v)] = true;
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (ed.is_loop() || sat[static_cast<std::size_t>(ed.u)] ||
                sat[static_cast<std::size_t>(ed.v)])
                continue;
            hm.insert(e);
            sat[static_cast<std::size_t>(ed.u)] = sat[static_cast<std::size_t>(ed.v)] = true;
        }
    }

    int n = g.vertex_count();
    int l = n - 2 * hm.size();
    DMATCH_CHECK(l % 2 == 0, "l = n - 2|H| must be even");

    DeletedMatching rest = delete_matching(g, hm);
    Matching triple_a, triple_b;
    int mu = 0;

    for (const InducedSubgraph& comp : connected_components(rest.rest)) {
        std::vector<EdgeId> comp_to_g(comp.edge_map.size());
        for (std::size_t e = 0; e < comp.edge_map.size(); ++e)
            comp_to_g[e] = rest.edge_map[static_cast<std::size_t>(comp.edge_map[e])];

        if (comp.graph.is_cycle_graph()) {
            auto [a, b] = cycle_alternation(comp);
            insert_mapped(triple_a, a, comp_to_g);
            insert_mapped(triple_b, b, comp_to_g);
            mu += comp.graph.edge_count() / 2;
            continue;
        }

        // Uniform 1-subdivision, its system, then one lift per extra unit.
        ToSkeletonResult skel = to_cubic_pseudograph(comp.graph);
        SubdivisionMap ones(static_cast<std::size_t>(skel.skeleton.m0()), 1);
        RealizeResult start = realize(skel.skeleton, ones);
        Multigraph cur = start.graph;
        std::vector<ChainTrace> chains = start.chains;
        SystemWitness wit = build_system(cur);
        DMATCH_CHECK(wit.system.path_count() * 2 == skel.skeleton.n0(),
                     "system must carry n0/2 paths");

        for (EdgeId e0 = 0; e0 < skel.skeleton.m0(); ++e0) {
            for (int unit = 1; unit < skel.k[static_cast<std::size_t>(e0)]; ++unit) {
                EdgeId split = chains[static_cast<std::size_t>(e0)].edges.back();
                LiftResult lifted = lift_system(cur, wit, split);
                cur = std::move(lifted.graph);
                wit = std::move(lifted.witness);
                // Update the chain bookkeeping for the split edge.
                ChainTrace& chain = chains[static_cast<std::size_t>(e0)];
                Vertex mid = lifted.trace.path_vertices[1];
                Vertex x = chain.vertices[chain.vertices.size() - 2];
                EdgeId x_half = (lifted.trace.path_vertices.front() == x)
                                    ? lifted.trace.path_edges[0]
                                    : lifted.trace.path_edges[1];
                EdgeId y_half = (x_half == lifted.trace.path_edges[0])
                                    ? lifted.trace.path_edges[1]
                                    : lifted.trace.path_edges[0];
                chain.vertices.insert(chain.vertices.end() - 1, mid);
                chain.edges.back() = x_half;
                chain.edges.push_back(y_half);
            }
        }
        DMATCH_CHECK(wit.system.path_count() * 2 == skel.skeleton.n0(),
                     "lifts must preserve the path count");

        // cur is the component, chain by chain.
        std::vector<EdgeId> cur_to_comp(static_cast<std::size_t>(cur.edge_count()), -1);
        for (std::size_t c = 0; c < chains.size(); ++c) {
            DMATCH_CHECK(chains[c].edges.size() == skel.chains[c].edges.size(),
                         "chain length mismatch after lifts");
            for (std::size_t i = 0; i < chains[c].edges.size(); ++i)
                cur_to_comp[static_cast<std::size_t>(chains[c].edges[i])] =
                    skel.chains[c].edges[i];
        }
        std::vector<EdgeId> to_g(cur_to_comp.size(), -1);
        for (std::size_t e = 0; e < cur_to_comp.size(); ++e)
            to_g[e] = comp_to_g[static_cast<std::size_t>(cur_to_comp[e])];

        auto [a, b] = system_alternating_pair(cur, wit.system);
        insert_mapped(triple_a, a, to_g);
        insert_mapped(triple_b, b, to_g);
        int mu_i = wit.included_max_matching->size();
        DMATCH_CHECK(a.size() + b.size() >=
                         2 * mu_i - wit.system.path_count(),
                     "component pair must attain 2 nu_1 - paths");
        mu += mu_i;
    }

    MatchingFamily triple;
    triple.members = {std::move(hm), std::move(triple_a), std::move(triple_b)};
    DMATCH_CHECK(validate_family(g, triple), "triple witness invalid");
    DMATCH_CHECK(triple.total_size() >= triple.members[0].size() + 2 * mu - l / 2,
                 "triple must attain |H| + 2 mu - l/2");
    return triple;
}

InequalityReport verify_all(const Multigraph& g) {
    require_cubic(g);
    InequalityReport rep;
    rep.graph_id = canonical_hash(g);
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.nu[0] = nu1(g);
    for (int k = 2; k <= 4; ++k) rep.nu[k - 1] = nu_k_value(g, k);
    rep.alpha2 = alpha_k(g, 2).value;
    rep.chi_prime = (rep.nu[2] == rep.m) ? 3 : 4;

    int t = 1;
    while (t < 4 && rep.nu[t] == (t + 1) * rep.nu[0]) ++t;
    rep.max_disjoint_max_matchings = t;

    int n = rep.n;
    auto add = [&rep](std::string name, int slack) {
        rep.checks.push_back({std::move(name), slack >= 0, slack});
    };
    add("nu2_ge_ceil_4n_5", rep.nu[1] - ceil_div(4 * n, 5));
    add("nu3_ge_ceil_7n_6", rep.nu[2] - ceil_div(7 * n, 6));
    add("arithmetical_mean_4nu2_le_n_plus_2nu3", n + 2 * rep.nu[2] - 4 * rep.nu[1]);
    add("nu2_plus_nu3_ge_2n", rep.nu[1] + rep.nu[2] - 2 * n);
    add("nu1_ge_ceil_5n_minus_2_over_12", rep.nu[0] - ceil_div(5 * n - 2, 12));
    add("nu1_over_alpha2_in_1_to_5_4",
        std::min(rep.nu[0] - rep.alpha2, 5 * rep.alpha2 - 4 * rep.nu[0]));
    add("disjoint_maximum_matchings_le_3", 3 - rep.max_disjoint_max_matchings);
    add("nu4_eq_m", rep.nu[3] == rep.m ? 0 : -(rep.m - rep.nu[3]));

    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const InequalityCheck& c) { return c.pass; });
    return rep;
}

}  // namespace dmatch
