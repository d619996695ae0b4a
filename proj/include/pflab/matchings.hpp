// Copyright 2026 The pflab Authors.
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

#ifndef PFLAB_MATCHINGS_HPP_
#define PFLAB_MATCHINGS_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "pflab/graph.hpp"

namespace pflab {

// All perfect matchings, sorted lexicographically on their edge-id lists.
// Throws DomainError for an odd vertex count.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g);

// Visits every perfect matching of the subgraph induced by `alive` (index by
// vertex). The visitor returns false to stop early. Returns false iff stopped.
bool for_each_perfect_matching(
    const Graph& g, const std::vector<char>& alive,
    const std::function<bool(const std::vector<EdgeId>&)>& visit);

std::uint64_t count_perfect_matchings(const Graph& g);

// The empty graph counts as matchable.
bool is_matchable(const Graph& g);
bool is_matchable_within(const Graph& g, const std::vector<char>& alive);

bool is_perfect_matching(const Graph& g, const Matching& m);
bool is_matching_covered(const Graph& g);
// Flags per edge id: does the edge lie in some perfect matching.
std::vector<char> matchable_edges(const Graph& g);

// Both the subgraph induced by `vertices` and the one induced by the rest
// are matchable.
bool is_conformal(const Graph& g, const VertexSet& vertices);

std::vector<EdgeId> symmetric_difference(const Matching& a, const Matching& b);

}  // namespace pflab

#endif  // PFLAB_MATCHINGS_HPP_
