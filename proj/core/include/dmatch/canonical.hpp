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

#ifndef DMATCH_CANONICAL_HPP
#define DMATCH_CANONICAL_HPP

#include <compare>
#include <string>

#include "dmatch/multigraph.hpp"

namespace dmatch {

/// Canonical form of a multigraph or pseudo-graph under vertex relabeling.
/// Computed by exhaustive labeling with prefix pruning; intended for desk
/// scale (n <= ~10 for bulk use, ~30 for single calls).
struct CanonicalForm {
    int n = 0;
    std::string key;  // one byte per loop count and multiplicity entry

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Multigraph& g);

/// Rebuild the canonical representative graph from its form; edge ids are
/// sorted by endpoint pair (loops first per vertex).
Multigraph from_canonical(const CanonicalForm& form, LoopPolicy policy);

bool is_isomorphic(const Multigraph& a, const Multigraph& b);

/// 64-bit FNV-1a of the canonical form, hex encoded; stable graph id.
std::string canonical_hash(const Multigraph& g);

}  // namespace dmatch

#endif  // DMATCH_CANONICAL_HPP
