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

#include "dmatch/canonical.hpp"

#include <algorithm>
#include <cstring>

namespace dmatch {

namespace {

// The key lists, per placed position p, the vertex's loop count followed by
// its multiplicities towards positions 0..p-1. The canonical labeling is the
// one maximizing the flattened key, which front-loads dense rows and makes
// the prefix pruning effective.
struct Canonicalizer {
    int n;
    std::vector<std::vector<uint8_t>> mult;  // multiplicity matrix
    std::vector<uint8_t> loops;              // loop edge count per vertex
    std::vector<int> placed;                 // position -> vertex
    std::vector<bool> used;
    std::string cur;
    std::string best;
    bool have_best = false;

    explicit Canonicalizer(const Multigraph& g)
        : n(g.vertex_count()),
          mult(static_cast<std::size_t>(n),
               std::vector<uint8_t>(static_cast<std::size_t>(n), 0)),
          loops(static_cast<std::size_t>(n), 0),
          used(static_cast<std::size_t>(n), false) {
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) {
                ++loops[static_cast<std::size_t>(e.u)];
            } else {
                ++mult[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
                ++mult[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
            }
        }
    }

    std::string segment(int v, std::size_t p) const {
        std::string seg;
        seg.reserve(p + 1);
        seg.push_back(static_cast<char>(loops[static_cast<std::size_t>(v)]));
        for (std::size_t q = 0; q < p; ++q)
            seg.push_back(static_cast<char>(
                mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(placed[q])]));
        return seg;
    }

    void dfs(std::size_t p) {
        if (p == static_cast<std::size_t>(n)) {
            if (!have_best || cur > best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        std::vector<std::pair<std::string, int>> cands;
        for (int v = 0; v < n; ++v)
            if (!used[static_cast<std::size_t>(v)]) cands.emplace_back(segment(v, p), v);
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        std::size_t base_len = cur.size();
        for (const auto& [seg, v] : cands) {
            cur += seg;
            if (have_best &&
                cur.compare(0, cur.size(), best, 0, cur.size()) < 0) {
                cur.resize(base_len);
                break;  // sorted descending: the rest are no better
            }
            used[static_cast<std::size_t>(v)] = true;
            placed.push_back(v);
            dfs(p + 1);
            placed.pop_back();
            used[static_cast<std::size_t>(v)] = false;
            cur.resize(base_len);
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Multigraph& g) {
    Canonicalizer c(g);
    c.placed.reserve(static_cast<std::size_t>(c.n));
    c.cur.reserve(static_cast<std::size_t>(c.n * (c.n + 1) / 2));
    c.dfs(0);
    return {c.n, std::move(c.best)};
}

Multigraph from_canonical(const CanonicalForm& form, LoopPolicy policy) {
    int n = form.n;
    Multigraph g(n, policy);
    std::vector<std::vector<uint8_t>> mult(
        static_cast<std::size_t>(n), std::vector<uint8_t>(static_cast<std::size_t>(n), 0));
    std::vector<uint8_t> loops(static_cast<std::size_t>(n), 0);
    std::size_t at = 0;
    for (int p = 0; p < n; ++p) {
        loops[static_cast<std::size_t>(p)] = static_cast<uint8_t>(form.key[at++]);
        for (int q = 0; q < p; ++q) {
            uint8_t k = static_cast<uint8_t>(form.key[at++]);
            mult[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = k;
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < loops[static_cast<std::size_t>(u)]; ++i) g.add_edge(u, u);
        for (int v = u + 1; v < n; ++v)
            for (int i = 0; i < mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]; ++i)
                g.add_edge(u, v);
    }
    return g;
}

bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

std::string canonical_hash(const Multigraph& g) {
    CanonicalForm form = canonical_form(g);
    uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](uint8_t byte) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    };
    mix(static_cast<uint8_t>(form.n));
    for (char ch : form.key) mix(static_cast<uint8_t>(ch));
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace dmatch
