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

#include "dmatch/generate.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "dmatch/canonical.hpp"
#include "dmatch/exact.hpp"
#include "dmatch/parallel.hpp"

namespace dmatch {

namespace {

// Enumerate symmetric multiplicity matrices with all row sums 3, walking
// the upper triangle (diagonal first when loops are allowed) row by row.
struct MatrixEnumerator {
    int n;
    bool loops;
    std::vector<std::vector<int>> mult;
    std::vector<int> residual;
    std::set<std::string> seen;
    std::vector<CanonicalForm> out;

    explicit MatrixEnumerator(int n_, bool loops_)
        : n(n_),
          loops(loops_),
          mult(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), 0)),
          residual(static_cast<std::size_t>(n_), 3) {}

    void emit() {
        Multigraph g(n, loops ? LoopPolicy::allowed : LoopPolicy::forbidden);
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
                 ++c)
                g.add_edge(i, i);
            for (int j = i + 1; j < n; ++j)
                for (int c = 0; c < mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                     ++c)
                    g.add_edge(i, j);
        }
        if (!g.is_connected()) return;
        CanonicalForm form = canonical_form(g);
        if (seen.insert(form.key).second) out.push_back(std::move(form));
    }

    void fill(int i, int j) {
        if (i == n) {
            emit();
            return;
        }
        if (j == n) {
            if (residual[static_cast<std::size_t>(i)] == 0) fill(i + 1, loops ? i + 1 : i + 2);
            return;
        }
        // Row-capacity prune: what is left of row i must fit.
        int capacity = 0;
        for (int j2 = j; j2 < n; ++j2)
            capacity += (j2 == i) ? 2 : std::min(3, residual[static_cast<std::size_t>(j2)]);
        if (residual[static_cast<std::size_t>(i)] > capacity) return;

        if (i == j) {  // loop slot: 0 or 1 loop (each eats two degrees)
            for (int c = 0; c <= residual[static_cast<std::size_t>(i)] / 2 && c <= 1; ++c) {
                mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = c;
                residual[static_cast<std::size_t>(i)] -= 2 * c;
                fill(i, j + 1);
                residual[static_cast<std::size_t>(i)] += 2 * c;
            }
            mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
            return;
        }
        int cap = std::min({3, residual[static_cast<std::size_t>(i)],
                            residual[static_cast<std::size_t>(j)]});
        for (int c = 0; c <= cap; ++c) {
            mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
            mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c;
            residual[static_cast<std::size_t>(i)] -= c;
            residual[static_cast<std::size_t>(j)] -= c;
            fill(i, j + 1);
            residual[static_cast<std::size_t>(i)] += c;
            residual[static_cast<std::size_t>(j)] += c;
        }
        mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
        mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 0;
    }

    std::vector<CanonicalForm> run() {
        if (n > 0) fill(0, loops ? 0 : 1);
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Deterministic Fisher-Yates; std::shuffle is implementation-defined, and
// byte-identical runs across toolchains matter here.
template <typename T>
void shuffle_deterministic(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
}

}  // namespace

std::vector<Multigraph> enumerate_cubic(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("no cubic multigraph on an odd or tiny vertex count");
    MatrixEnumerator en(n, false);
    std::vector<CanonicalForm> forms = en.run();
    std::vector<Multigraph> out;
    out.reserve(forms.size());
    for (const CanonicalForm& f : forms) out.push_back(from_canonical(f, LoopPolicy::forbidden));
    return out;
}

std::vector<CubicPseudograph> enumerate_cubic_pseudographs(int n0) {
    if (n0 < 2 || n0 % 2 != 0)
        throw std::invalid_argument("no cubic pseudo-graph on an odd or tiny vertex count");
    MatrixEnumerator en(n0, true);
    std::vector<CanonicalForm> forms = en.run();
    std::vector<CubicPseudograph> out;
    out.reserve(forms.size());
    for (const CanonicalForm& f : forms)
        out.emplace_back(from_canonical(f, LoopPolicy::allowed));
    return out;
}

Multigraph random_cubic(int n, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("cubic graphs need even n >= 2");
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<Vertex> stubs;
        stubs.reserve(static_cast<std::size_t>(3 * n));
        for (Vertex v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) stubs.push_back(v);
        shuffle_deterministic(stubs, rng);
        bool loop = false;
        for (std::size_t i = 0; i < stubs.size(); i += 2)
            if (stubs[i] == stubs[i + 1]) loop = true;
        if (loop) continue;  // resample the whole pairing
        Multigraph g(n, LoopPolicy::forbidden);
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            Vertex a = std::min(stubs[i], stubs[i + 1]);
            Vertex b = std::max(stubs[i], stubs[i + 1]);
            g.add_edge(a, b);
        }
        return g;
    }
}

Multigraph random_subcubic(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_subcubic needs n >= 3");
    std::mt19937_64 rng(seed);
    if (n % 2 == 0) {
        Multigraph g = random_cubic(n, rng());
        // Random maximal matching over a shuffled edge order.
        std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
        for (EdgeId e = 0; e < g.edge_count(); ++e) order[static_cast<std::size_t>(e)] = e;
        shuffle_deterministic(order, rng);
        std::vector<bool> sat(static_cast<std::size_t>(n), false);
        std::vector<EdgeId> matched;
        for (EdgeId e : order) {
            const Edge& ed = g.edge(e);
            if (sat[static_cast<std::size_t>(ed.u)] || sat[static_cast<std::size_t>(ed.v)])
                continue;
            sat[static_cast<std::size_t>(ed.u)] = sat[static_cast<std::size_t>(ed.v)] = true;
            matched.push_back(e);
        }
        // Drop a random subset of it; degrees stay in {2, 3}.
        std::vector<bool> drop(static_cast<std::size_t>(g.edge_count()), false);
        for (EdgeId e : matched)
            if (rng() % 2 == 0) drop[static_cast<std::size_t>(e)] = true;
        Multigraph out(n, LoopPolicy::forbidden);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!drop[static_cast<std::size_t>(e)])
                out.add_edge(g.edge(e).u, g.edge(e).v);
        return out;
    }
    // Odd n: random cycle plus chords (no cubic base exists by parity).
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    shuffle_deterministic(perm, rng);
    Multigraph out(n, LoopPolicy::forbidden);
    for (int i = 0; i < n; ++i)
        out.add_edge(std::min(perm[static_cast<std::size_t>(i)],
                              perm[static_cast<std::size_t>((i + 1) % n)]),
                     std::max(perm[static_cast<std::size_t>(i)],
                              perm[static_cast<std::size_t>((i + 1) % n)]));
    std::vector<int> deg(static_cast<std::size_t>(n), 2);
    int chords = static_cast<int>(rng() % static_cast<std::uint64_t>(n / 2 + 1));
    for (int c = 0, attempts = 0; c < chords && attempts < 8 * n; ++attempts) {
        Vertex a = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
        Vertex b = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
        if (a == b || deg[static_cast<std::size_t>(a)] >= 3 ||
            deg[static_cast<std::size_t>(b)] >= 3)
            continue;
        out.add_edge(std::min(a, b), std::max(a, b));
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
        ++c;
    }
    return out;
}

std::optional<TightBound> tight_bound_from_name(const std::string& name) {
    if (name == "nu1_2_5") return TightBound::nu1_2_5;
    if (name == "nu2_4_5") return TightBound::nu2_4_5;
    if (name == "nu3_7_6") return TightBound::nu3_7_6;
    if (name == "arithmetical_mean") return TightBound::arithmetical_mean;
    return std::nullopt;
}

std::string tight_bound_name(TightBound bound) {
    switch (bound) {
        case TightBound::nu1_2_5: return "nu1_2_5";
        case TightBound::nu2_4_5: return "nu2_4_5";
        case TightBound::nu3_7_6: return "nu3_7_6";
        case TightBound::arithmetical_mean: return "arithmetical_mean";
    }
    return "?";
}

std::vector<Multigraph> search_tight(int n, TightBound bound) {
    std::vector<Multigraph> all = enumerate_cubic(n);
    std::vector<char> keep(all.size(), 0);
    parallel_for(all.size(), [&](std::size_t i) {
        const Multigraph& g = all[i];
        bool tight = false;
        switch (bound) {
            case TightBound::nu1_2_5:
                tight = 5 * nu1(g) == 2 * n;
                break;
            case TightBound::nu2_4_5:
                tight = 5 * nu_k_value(g, 2) == 4 * n;
                break;
            case TightBound::nu3_7_6:
                tight = 6 * nu_k_value(g, 3) == 7 * n;
                break;
            case TightBound::arithmetical_mean:
                tight = 4 * nu_k_value(g, 2) == n + 2 * nu_k_value(g, 3);
                break;
        }
        keep[i] = tight ? 1 : 0;
    });
    std::vector<Multigraph> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (keep[i]) out.push_back(std::move(all[i]));
    return out;
}

}  // namespace dmatch
