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

#ifndef DMATCH_MULTIGRAPH_HPP
#define DMATCH_MULTIGRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmatch {

using Vertex = int;
using EdgeId = int;

/// Unordered endpoint pair of an edge. A loop has u == v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    bool is_loop() const { return u == v; }
    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool touches(Vertex w) const { return u == w || v == w; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class LoopPolicy { forbidden, allowed };

struct IncidentEdge {
    EdgeId id;
    Vertex other;  // == the vertex itself for a loop
};

/// Loopless multigraph (or pseudo-graph when loop_policy = allowed) with
/// dense edge ids 0..m-1. Parallel edges are first-class: edge identity is
/// by id, not endpoint pair. A loop contributes two to its vertex's degree.
///
/// Values are intended to be immutable once built; every algorithm in this
/// library takes `const Multigraph&` and never mutates its input.
class Multigraph {
public:
    explicit Multigraph(int vertex_count = 0,
                        LoopPolicy policy = LoopPolicy::forbidden)
        : policy_(policy) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
        degree_.assign(static_cast<std::size_t>(vertex_count), 0);
        incident_.resize(static_cast<std::size_t>(vertex_count));
    }

    Multigraph(int vertex_count, const std::vector<Edge>& edges,
               LoopPolicy policy = LoopPolicy::forbidden)
        : Multigraph(vertex_count, policy) {
        for (const Edge& e : edges) add_edge(e.u, e.v);
    }

    EdgeId add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v && policy_ == LoopPolicy::forbidden)
            throw std::invalid_argument("loop on a loopless multigraph");
        EdgeId id = static_cast<EdgeId>(edges_.size());
        edges_.push_back({u, v});
        incident_[static_cast<std::size_t>(u)].push_back({id, v});
        if (u != v) incident_[static_cast<std::size_t>(v)].push_back({id, u});
        degree_[static_cast<std::size_t>(u)] += (u == v) ? 2 : 1;
        if (u != v) degree_[static_cast<std::size_t>(v)] += 1;
        return id;
    }

    int vertex_count() const { return static_cast<int>(degree_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    LoopPolicy loop_policy() const { return policy_; }

    const Edge& edge(EdgeId e) const {
        check_edge(e);
        return edges_[static_cast<std::size_t>(e)];
    }
    bool is_loop(EdgeId e) const { return edge(e).is_loop(); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Degree of v; a loop counts two.
    int degree(Vertex v) const {
        check_vertex(v);
        return degree_[static_cast<std::size_t>(v)];
    }

    /// Incident edges of v; a loop appears once in the list.
    std::span<const IncidentEdge> incident(Vertex v) const {
        check_vertex(v);
        return incident_[static_cast<std::size_t>(v)];
    }

    int max_degree() const;
    int min_degree() const;
    bool has_loop() const;

    /// True if u and v are joined by at least one edge.
    bool adjacent(Vertex u, Vertex v) const;
    /// Smallest edge id joining u and v, or -1.
    EdgeId find_edge(Vertex u, Vertex v) const;

    bool is_connected() const;
    /// d-regular, counting loops twice.
    bool is_regular(int d) const;
    bool is_cubic() const { return !has_loop() && is_regular(3); }
    /// Connected 2-regular graph with at least two vertices (a loop is not
    /// a cycle).
    bool is_cycle_graph() const;

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex out of range");
    }
    void check_edge(EdgeId e) const {
        if (e < 0 || e >= edge_count()) throw std::out_of_range("edge id out of range");
    }

private:
    LoopPolicy policy_;
    std::vector<Edge> edges_;
    std::vector<int> degree_;
    std::vector<std::vector<IncidentEdge>> incident_;
};

/// Induced subgraph of one connected component, with maps back to the host:
/// vertex_map[new] = old vertex, edge_map[new] = old edge id.
struct InducedSubgraph {
    Multigraph graph;
    std::vector<Vertex> vertex_map;
    std::vector<EdgeId> edge_map;
};

/// Partition of the vertices by connectivity, components ordered by their
/// smallest vertex; vertex and edge maps are ascending in host ids.
std::vector<InducedSubgraph> connected_components(const Multigraph& g);

/// Internal invariant check; throws std::logic_error on violation.
#define DMATCH_CHECK(cond, msg)                                   \
    do {                                                          \
        if (!(cond)) throw std::logic_error(std::string("invariant violated: ") + (msg)); \
    } while (0)

}  // namespace dmatch

#endif  // DMATCH_MULTIGRAPH_HPP
