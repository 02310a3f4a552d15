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

#ifndef DMATCH_EDGE_LIST_HPP
#define DMATCH_EDGE_LIST_HPP

#include <string>

#include "dmatch/multigraph.hpp"

namespace dmatch {

/// Text format, bit-exact on write:
///   line 1: "p <n> <m>" or "p <n> <m> pseudo"
///   then m lines "e <u> <v>" with 0-based endpoints, u <= v, records
///   sorted lexicographically; LF line endings; '#' lines are comments.
/// Parsing accepts any record order and assigns edge ids in line order;
/// writing canonicalizes the order.
std::string write_edge_list(const Multigraph& g);

/// Throws std::runtime_error on malformed input (bad header, endpoint out
/// of range, a loop without the pseudo flag, record count mismatch).
Multigraph parse_edge_list(const std::string& text);

}  // namespace dmatch

#endif  // DMATCH_EDGE_LIST_HPP
