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

#ifndef PFLAB_ISOMORPHISM_HPP_
#define PFLAB_ISOMORPHISM_HPP_

#include <vector>

#include "pflab/graph.hpp"
#include "pflab/limits.hpp"

namespace pflab {

enum class EdgeComparison {
  kMultiplicity,   // parallel edges must correspond one to one
  kUnderlyingSimple,
};

// Lexicographically least adjacency encoding over all vertex orders that
// respect a colour refinement of the degrees. Equal codes iff isomorphic.
std::vector<int> canonical_form(const Graph& g,
                                EdgeComparison mode = EdgeComparison::kMultiplicity,
                                const Limits& limits = {});

bool is_isomorphic(const Graph& a, const Graph& b,
                   EdgeComparison mode = EdgeComparison::kMultiplicity,
                   const Limits& limits = {});

}  // namespace pflab

#endif  // PFLAB_ISOMORPHISM_HPP_
