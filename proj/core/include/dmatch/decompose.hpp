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

#ifndef DMATCH_DECOMPOSE_HPP
#define DMATCH_DECOMPOSE_HPP

#include <utility>

#include "dmatch/subdivide.hpp"
#include "dmatch/system.hpp"

namespace dmatch {

/// Vertex-disjoint system of even paths and even cycles covering all
/// vertices of a graph in which every edge joins a degree-2 vertex to a
/// degree->=3 vertex (even 2-regular components are accepted and become
/// system cycles). Greedy and deterministic: extract cycles until the
/// remainder is a forest, peel leaf-to-leaf paths, keep isolated vertices
/// as zero-length paths. The returned witness carries the alternating pair
/// and a maximum matching lying on the system.
SystemWitness build_system(const Multigraph& g);

/// Alternately assign the edges of every path and cycle to H and H'.
std::pair<Matching, Matching> system_alternating_pair(const Multigraph& g,
                                                      const PathCycleSystem& sys);

struct LiftResult {
    Multigraph graph;  // the 1-subdivision
    SubdivisionTrace trace;
    SystemWitness witness;
};

/// Lift a system through the 1-subdivision of edge e, preserving the path
/// count and restoring a maximum matching that lies on the system
/// (conditions (1)-(5)). Requires: g connected, delta >= 2, no edge joining
/// two degree->=3 vertices, and a system satisfying (1)-(4).
LiftResult lift_system(const Multigraph& g, const SystemWitness& w, EdgeId e);

struct TransformedPair {
    Multigraph graph;  // the 1-subdivision
    SubdivisionTrace trace;
    Matching h;
    Matching h_prime;
};

/// Rebuild a disjoint pair across the 1-subdivision of e with total size
/// exactly one larger. Requires: g connected, delta >= 2, g not an even
/// cycle, no edge joining two degree->=3 vertices.
TransformedPair transform_pair_through_subdivision(const Multigraph& g, const Matching& h,
                                                   const Matching& h_prime, EdgeId e);

/// Exact nu_2 of the 1-subdivision predicted from exact nu_2 of g:
/// nu_2 + 2 when g is an odd cycle, nu_2 + 1 otherwise.
int nu2_subdivision_value(const Multigraph& g, EdgeId e);

}  // namespace dmatch

#endif  // DMATCH_DECOMPOSE_HPP
