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

#include "dmatch/exact.hpp"

#include <algorithm>
#include <queue>

namespace dmatch {

namespace {

void require_loopless(const Multigraph& g) {
    if (g.has_loop()) throw std::invalid_argument("loopless graph required");
}

// ---------------------------------------------------------------------------
// Maximum matching: classic blossom (contracted BFS) algorithm, O(V^3).
// Parallel edges are irrelevant for the size, so adjacency is deduplicated.
// ---------------------------------------------------------------------------

struct BlossomSolver {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, parent, base;
    std::vector<bool> used, blossom;

    BlossomSolver(const Multigraph& g, const std::vector<bool>* active)
        : n(g.vertex_count()), adj(static_cast<std::size_t>(n)) {
        std::vector<std::vector<bool>> seen(
            static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) continue;
            if (active && (!(*active)[static_cast<std::size_t>(e.u)] ||
                           !(*active)[static_cast<std::size_t>(e.v)]))
                continue;
            if (seen[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)]) continue;
            seen[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
            seen[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
            adj[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        match.assign(static_cast<std::size_t>(n), -1);
    }

    int lca(int a, int b) {
        std::vector<bool> mark(static_cast<std::size_t>(n), false);
        for (;;) {
            a = base[static_cast<std::size_t>(a)];
            mark[static_cast<std::size_t>(a)] = true;
            if (match[static_cast<std::size_t>(a)] < 0) break;
            a = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(a)])];
        }
        for (;;) {
            b = base[static_cast<std::size_t>(b)];
            if (mark[static_cast<std::size_t>(b)]) return b;
            b = parent[static_cast<std::size_t>(match[static_cast<std::size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[static_cast<std::size_t>(v)] != b) {
            int mv = match[static_cast<std::size_t>(v)];
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] = true;
            blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(mv)])] = true;
            parent[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent[static_cast<std::size_t>(mv)];
        }
    }

    int find_path(int root) {
        used.assign(static_cast<std::size_t>(n), false);
        parent.assign(static_cast<std::size_t>(n), -1);
        base.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
        used[static_cast<std::size_t>(root)] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj[static_cast<std::size_t>(v)]) {
                if (base[static_cast<std::size_t>(v)] == base[static_cast<std::size_t>(to)] ||
                    match[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<std::size_t>(to)] >= 0 &&
                     parent[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] >= 0)) {
                    int cur = lca(v, to);
                    blossom.assign(static_cast<std::size_t>(n), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(i)])]) {
                            base[static_cast<std::size_t>(i)] = cur;
                            if (!used[static_cast<std::size_t>(i)]) {
                                used[static_cast<std::size_t>(i)] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[static_cast<std::size_t>(to)] < 0) {
                    parent[static_cast<std::size_t>(to)] = v;
                    if (match[static_cast<std::size_t>(to)] < 0) {
                        return to;
                    }
                    used[static_cast<std::size_t>(match[static_cast<std::size_t>(to)])] = true;
                    q.push(match[static_cast<std::size_t>(to)]);
                }
            }
        }
        return -1;
    }

    int solve() {
        // Greedy seed keeps the augmenting phase short.
        for (int v = 0; v < n; ++v) {
            if (match[static_cast<std::size_t>(v)] >= 0) continue;
            for (int to : adj[static_cast<std::size_t>(v)]) {
                if (match[static_cast<std::size_t>(to)] < 0) {
                    match[static_cast<std::size_t>(v)] = to;
                    match[static_cast<std::size_t>(to)] = v;
                    break;
                }
            }
        }
        int size = 0;
        for (int v = 0; v < n; ++v) {
            if (match[static_cast<std::size_t>(v)] >= 0) continue;
            int end = find_path(v);
            if (end < 0) continue;
            ++size;
            while (end >= 0) {
                int pv = parent[static_cast<std::size_t>(end)];
                int ppv = match[static_cast<std::size_t>(pv)];
                match[static_cast<std::size_t>(end)] = pv;
                match[static_cast<std::size_t>(pv)] = end;
                end = ppv;
            }
        }
        size = 0;
        for (int v = 0; v < n; ++v)
            if (match[static_cast<std::size_t>(v)] > v) ++size;
        return size;
    }
};

// ---------------------------------------------------------------------------
// nu_k branch and bound. Edges are processed in a connectivity-friendly
// order; each gets a label in {uncolored, 1..k}. Class symmetry is broken by
// requiring the first edge of class i to precede the first edge of class
// i+1 in branching order.
// ---------------------------------------------------------------------------

std::vector<EdgeId> branch_order(const Multigraph& g) {
    int m = g.edge_count();
    std::vector<EdgeId> order;
    order.reserve(static_cast<std::size_t>(m));
    std::vector<bool> edge_in(static_cast<std::size_t>(m), false);
    std::vector<bool> vertex_in(static_cast<std::size_t>(g.vertex_count()), false);
    while (static_cast<int>(order.size()) < m) {
        EdgeId pick = -1;
        for (EdgeId e = 0; e < m; ++e) {
            if (edge_in[static_cast<std::size_t>(e)]) continue;
            const Edge& ed = g.edge(e);
            if (vertex_in[static_cast<std::size_t>(ed.u)] ||
                vertex_in[static_cast<std::size_t>(ed.v)]) {
                pick = e;
                break;
            }
        }
        if (pick < 0) {  // start a new component at the smallest unused edge
            for (EdgeId e = 0; e < m; ++e)
                if (!edge_in[static_cast<std::size_t>(e)]) {
                    pick = e;
                    break;
                }
        }
        edge_in[static_cast<std::size_t>(pick)] = true;
        const Edge& ed = g.edge(pick);
        vertex_in[static_cast<std::size_t>(ed.u)] = true;
        vertex_in[static_cast<std::size_t>(ed.v)] = true;
        order.push_back(pick);
    }
    return order;
}

constexpr int kMaxColors = 16;

struct NuSolver {
    const Multigraph& g;
    int k;
    int m;
    uint32_t full_mask;
    std::vector<EdgeId> order;
    std::vector<uint32_t> vertex_mask;   // colors used at each vertex
    std::vector<int8_t> assign;          // by edge id: -2 free, -1 uncolored, c-1
    const std::vector<int8_t>* forced;   // by edge id: same encoding, -2 free
    int best = -1;
    int target = -1;                     // stop early once reached (if >= 0)
    std::vector<int8_t> best_assign;

    NuSolver(const Multigraph& graph, int colors, const std::vector<int8_t>* forced_in)
        : g(graph),
          k(colors),
          m(graph.edge_count()),
          full_mask((colors >= 32) ? ~0u : ((1u << colors) - 1)),
          order(branch_order(graph)),
          vertex_mask(static_cast<std::size_t>(graph.vertex_count()), 0),
          assign(static_cast<std::size_t>(graph.edge_count()), -2),
          forced(forced_in) {}

    // Remaining edges (positions >= pos) that could still take some color.
    int colorable_remaining(std::size_t pos) const {
        int cnt = 0;
        for (std::size_t i = pos; i < order.size(); ++i) {
            EdgeId e = order[i];
            if (forced && (*forced)[static_cast<std::size_t>(e)] == -1) continue;
            const Edge& ed = g.edge(e);
            uint32_t free_mask = full_mask & ~(vertex_mask[static_cast<std::size_t>(ed.u)] |
                                               vertex_mask[static_cast<std::size_t>(ed.v)]);
            if (free_mask) ++cnt;
        }
        return cnt;
    }

    // Returns true when the target was reached (early exit).
    bool dfs(std::size_t pos, int colored, int max_color) {
        if (target >= 0 && colored >= target) {
            best = colored;
            best_assign = assign;
            return true;
        }
        if (pos == order.size()) {
            if (colored > best) {
                best = colored;
                best_assign = assign;
            }
            return false;
        }
        int remaining = m - static_cast<int>(pos);
        int goal = (target >= 0) ? target : best + 1;
        if (colored + remaining < goal) return false;
        if (colored + remaining < goal + 2) {
            if (colored + colorable_remaining(pos) < goal) return false;
        }

        EdgeId e = order[pos];
        const Edge& ed = g.edge(e);
        int8_t pinned = forced ? (*forced)[static_cast<std::size_t>(e)] : int8_t{-2};
        uint32_t free_mask = full_mask & ~(vertex_mask[static_cast<std::size_t>(ed.u)] |
                                           vertex_mask[static_cast<std::size_t>(ed.v)]);

        if (pinned >= 0) {
            uint32_t bit = 1u << pinned;
            if (!(free_mask & bit)) return false;
            vertex_mask[static_cast<std::size_t>(ed.u)] |= bit;
            vertex_mask[static_cast<std::size_t>(ed.v)] |= bit;
            assign[static_cast<std::size_t>(e)] = pinned;
            bool hit = dfs(pos + 1, colored + 1, std::max(max_color, pinned + 1));
            assign[static_cast<std::size_t>(e)] = -2;
            vertex_mask[static_cast<std::size_t>(ed.u)] &= ~bit;
            vertex_mask[static_cast<std::size_t>(ed.v)] &= ~bit;
            return hit;
        }
        if (pinned == -1) {
            assign[static_cast<std::size_t>(e)] = -1;
            bool hit = dfs(pos + 1, colored, max_color);
            assign[static_cast<std::size_t>(e)] = -2;
            return hit;
        }

        int limit = std::min(k, max_color + 1);
        for (int c = 0; c < limit; ++c) {
            uint32_t bit = 1u << c;
            if (!(free_mask & bit)) continue;
            vertex_mask[static_cast<std::size_t>(ed.u)] |= bit;
            vertex_mask[static_cast<std::size_t>(ed.v)] |= bit;
            assign[static_cast<std::size_t>(e)] = static_cast<int8_t>(c);
            bool hit = dfs(pos + 1, colored + 1, std::max(max_color, c + 1));
            assign[static_cast<std::size_t>(e)] = -2;
            vertex_mask[static_cast<std::size_t>(ed.u)] &= ~bit;
            vertex_mask[static_cast<std::size_t>(ed.v)] &= ~bit;
            if (hit) return true;
        }
        assign[static_cast<std::size_t>(e)] = -1;
        bool hit = dfs(pos + 1, colored, max_color);
        assign[static_cast<std::size_t>(e)] = -2;
        return hit;
    }

    // Greedy seed: proper coloring along the branch order.
    void seed_incumbent() {
        std::vector<uint32_t> mask(vertex_mask.size(), 0);
        std::vector<int8_t> greedy(static_cast<std::size_t>(m), -1);
        int colored = 0;
        int max_color = 0;
        for (EdgeId e : order) {
            if (forced) {
                int8_t p = (*forced)[static_cast<std::size_t>(e)];
                if (p == -1) continue;
            }
            const Edge& ed = g.edge(e);
            uint32_t free_mask = full_mask & ~(mask[static_cast<std::size_t>(ed.u)] |
                                               mask[static_cast<std::size_t>(ed.v)]);
            int8_t pinned = forced ? (*forced)[static_cast<std::size_t>(e)] : int8_t{-2};
            int c = -1;
            if (pinned >= 0) {
                if (free_mask & (1u << pinned)) c = pinned;
                else continue;
            } else {
                int limit = std::min(k, max_color + 1);
                for (int cc = 0; cc < limit; ++cc)
                    if (free_mask & (1u << cc)) {
                        c = cc;
                        break;
                    }
            }
            if (c < 0) continue;
            mask[static_cast<std::size_t>(ed.u)] |= 1u << c;
            mask[static_cast<std::size_t>(ed.v)] |= 1u << c;
            greedy[static_cast<std::size_t>(e)] = static_cast<int8_t>(c);
            ++colored;
            max_color = std::max(max_color, c + 1);
        }
        best = colored - 1;  // strict improvement still finds an optimum
        best_assign = greedy;
        if (target >= 0) best = target - 1;
    }

    int run() {
        seed_incumbent();
        int start_max = 0;
        if (forced)
            for (int8_t p : *forced) start_max = std::max(start_max, static_cast<int>(p) + 1);
        dfs(0, 0, start_max);
        return best;
    }
};

MatchingFamily family_from_assignment(const Multigraph& g, int k,
                                      const std::vector<int8_t>& assign) {
    MatchingFamily fam;
    fam.members.resize(static_cast<std::size_t>(k));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int8_t c = assign[static_cast<std::size_t>(e)];
        if (c >= 0) fam.members[static_cast<std::size_t>(c)].edge_ids.push_back(e);
    }
    return fam;
}

bool achievable(const Multigraph& g, int k, const std::vector<int8_t>& forced, int target) {
    NuSolver solver(g, k, &forced);
    solver.target = target;
    return solver.run() >= target;
}

}  // namespace

int nu1(const Multigraph& g) {
    BlossomSolver solver(g, nullptr);
    return solver.solve();
}

int nu1_masked(const Multigraph& g, const std::vector<bool>& active) {
    BlossomSolver solver(g, &active);
    return solver.solve();
}

Matching maximum_matching(const Multigraph& g) {
    int total = nu1(g);
    Matching out;
    std::vector<bool> active(static_cast<std::size_t>(g.vertex_count()), true);
    int chosen = 0;
    for (EdgeId e = 0; e < g.edge_count() && chosen < total; ++e) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        if (!active[static_cast<std::size_t>(ed.u)] || !active[static_cast<std::size_t>(ed.v)])
            continue;
        active[static_cast<std::size_t>(ed.u)] = false;
        active[static_cast<std::size_t>(ed.v)] = false;
        if (chosen + 1 + nu1_masked(g, active) == total) {
            out.edge_ids.push_back(e);
            ++chosen;
        } else {
            active[static_cast<std::size_t>(ed.u)] = true;
            active[static_cast<std::size_t>(ed.v)] = true;
        }
    }
    DMATCH_CHECK(out.size() == total, "lex maximum matching has wrong size");
    return out;
}

int nu_k_value(const Multigraph& g, int k) {
    require_loopless(g);
    if (k < 1 || k > kMaxColors) throw std::invalid_argument("k out of range");
    NuSolver solver(g, k, nullptr);
    return solver.run();
}

NuResult nu_k(const Multigraph& g, int k) {
    int value = nu_k_value(g, k);
    // Lexicographic witness: walk edges by id, pinning the smallest label
    // (color 1, ..., color k, then uncolored) that still completes to the
    // optimum. Colors above the running maximum+1 are symmetric duplicates.
    std::vector<int8_t> forced(static_cast<std::size_t>(g.edge_count()), -2);
    int max_used = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int limit = std::min(k, max_used + 1);
        bool pinned = false;
        for (int c = 0; c < limit; ++c) {
            forced[static_cast<std::size_t>(e)] = static_cast<int8_t>(c);
            if (achievable(g, k, forced, value)) {
                pinned = true;
                max_used = std::max(max_used, c + 1);
                break;
            }
        }
        if (!pinned) forced[static_cast<std::size_t>(e)] = -1;
    }
    NuResult out{k, value, family_from_assignment(g, k, forced)};
    DMATCH_CHECK(out.witness.total_size() == value, "nu_k witness size mismatch");
    DMATCH_CHECK(validate_family(g, out.witness), "nu_k witness invalid");
    return out;
}

AlphaResult alpha_k(const Multigraph& g, int k) {
    require_loopless(g);
    if (k < 1 || k > kMaxColors) throw std::invalid_argument("k out of range");
    int value = nu_k_value(g, k);
    int cap = nu1(g);

    // Maximize |H_1| subject to total = nu_k. Color 1 is special, so the
    // first-use symmetry break applies to colors 2..k only.
    struct AlphaSolver {
        const Multigraph& g;
        int k, m, value, cap;
        uint32_t full_mask;
        std::vector<EdgeId> order;
        std::vector<uint32_t> vertex_mask;
        int best_h1 = -1;

        void dfs(std::size_t pos, int colored, int h1, int max_color) {
            if (best_h1 >= cap) return;
            int remaining = m - static_cast<int>(pos);
            if (colored + remaining < value) return;
            if (h1 + remaining <= best_h1) return;
            if (pos == order.size()) {
                if (colored == value) best_h1 = std::max(best_h1, h1);
                return;
            }
            const Edge& ed = g.edge(order[pos]);
            uint32_t free_mask =
                full_mask & ~(vertex_mask[static_cast<std::size_t>(ed.u)] |
                              vertex_mask[static_cast<std::size_t>(ed.v)]);
            int limit = std::min(k, max_color + 1);
            for (int c = 0; c < limit; ++c) {
                uint32_t bit = 1u << c;
                if (!(free_mask & bit)) continue;
                vertex_mask[static_cast<std::size_t>(ed.u)] |= bit;
                vertex_mask[static_cast<std::size_t>(ed.v)] |= bit;
                dfs(pos + 1, colored + 1, h1 + (c == 0 ? 1 : 0),
                    std::max(max_color, c + 1));
                vertex_mask[static_cast<std::size_t>(ed.u)] &= ~bit;
                vertex_mask[static_cast<std::size_t>(ed.v)] &= ~bit;
            }
            dfs(pos + 1, colored, h1, max_color);
        }
    };

    AlphaSolver solver{g,
                       k,
                       g.edge_count(),
                       value,
                       cap,
                       (k >= 32) ? ~0u : ((1u << k) - 1),
                       branch_order(g),
                       std::vector<uint32_t>(static_cast<std::size_t>(g.vertex_count()), 0),
                       -1};
    solver.dfs(0, 0, 0, 1);  // max_color = 1: color 1 usable from the start
    DMATCH_CHECK(solver.best_h1 >= 0, "alpha_k found no optimal family");
    DMATCH_CHECK(solver.best_h1 <= cap, "alpha_k exceeds nu1");
    return {k, solver.best_h1};
}

int chromatic_index(const Multigraph& g) {
    require_loopless(g);
    if (g.edge_count() == 0) return 0;
    int k = std::max(1, g.max_degree());
    while (nu_k_value(g, k) < g.edge_count()) ++k;
    return k;
}

int max_disjoint_maximum_matchings(const Multigraph& g) {
    require_loopless(g);
    int max_size = nu1(g);
    if (max_size == 0) return 0;
    // t disjoint maximum matchings exist iff nu_t = t * nu1 (every member of
    // an optimal t-family is itself maximum exactly in that case).
    int t = 1;
    while (t + 1 <= kMaxColors && nu_k_value(g, t + 1) == (t + 1) * max_size) ++t;
    return t;
}

}  // namespace dmatch
