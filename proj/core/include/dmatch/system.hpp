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

#ifndef DMATCH_SYSTEM_HPP
#define DMATCH_SYSTEM_HPP

#include <optional>
#include <vector>

#include "dmatch/matching.hpp"

namespace dmatch {

/// Path as a vertex walk with its chosen edge ids; a single vertex with no
/// edges is a zero-length path (a legitimate system member).
struct SystemPath {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
};

/// Cycle as a closed walk: edges[i] joins vertices[i] and
/// vertices[(i+1) % size]; at least two vertices.
struct SystemCycle {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;

    int length() const { return static_cast<int>(edges.size()); }
};

/// Vertex-disjoint system of paths and cycles.
struct PathCycleSystem {
    std::vector<SystemPath> paths;
    std::vector<SystemCycle> cycles;

    int path_count() const { return static_cast<int>(paths.size()); }
};

/// System together with its alternating pair and, when property (5) holds,
/// a maximum matching lying entirely on the system.
struct SystemWitness {
    PathCycleSystem system;
    Matching h;
    Matching h_prime;
    std::optional<Matching> included_max_matching;
};

/// Structural validity: walks consistent with g, pairwise vertex-disjoint,
/// cycles with >= 2 vertices.
bool validate_system_structure(const Multigraph& g, const PathCycleSystem& sys);

/// The conditions a lifted system must satisfy:
///  (1) cycle degrees alternate 2 / >=3 (and cycles are even),
///  (2) every vertex lies on the system,
///  (3) path ends have degree 2 and their off-path neighbors degree >= 3,
///  (4) every off-system edge joins a degree-2 to a degree->=3 vertex.
bool satisfies_system_conditions(const Multigraph& g, const PathCycleSystem& sys);

/// Property (5): every edge of m lies on the system.
bool matching_on_system(const PathCycleSystem& sys, const Matching& m);

}  // namespace dmatch

#endif  // DMATCH_SYSTEM_HPP
