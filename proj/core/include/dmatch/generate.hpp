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

#ifndef DMATCH_GENERATE_HPP
#define DMATCH_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "dmatch/pseudograph.hpp"

namespace dmatch {

/// All connected cubic (loopless) multigraphs on n vertices, one canonical
/// representative per isomorphism class, ordered by canonical form.
/// Exhaustive labeled generation with canonical dedup; practical for
/// n <= 10. Throws on odd n (handshake).
std::vector<Multigraph> enumerate_cubic(int n);

/// Same, loops allowed (skeleton substrate).
std::vector<CubicPseudograph> enumerate_cubic_pseudographs(int n0);

/// Configuration-model 3-regular loopless multigraph: random stub pairing,
/// resampled whole whenever a loop appears. Deterministic per seed.
Multigraph random_cubic(int n, std::uint64_t seed);

/// Random graph with 2 <= delta <= Delta <= 3: for even n a random cubic
/// graph minus a random subset of a random maximal matching; for odd n
/// (where no cubic base exists) a random cycle with random chords.
Multigraph random_subcubic(int n, std::uint64_t seed);

enum class TightBound { nu1_2_5, nu2_4_5, nu3_7_6, arithmetical_mean };

std::optional<TightBound> tight_bound_from_name(const std::string& name);
std::string tight_bound_name(TightBound bound);

/// The enumerated graphs of order n attaining the named inequality with
/// equality (exact-solver verified).
std::vector<Multigraph> search_tight(int n, TightBound bound);

}  // namespace dmatch

#endif  // DMATCH_GENERATE_HPP
