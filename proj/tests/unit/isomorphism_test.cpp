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

#include <doctest.h>

#include "pflab/cuts.hpp"
#include "pflab/errors.hpp"
#include "pflab/families.hpp"
#include "pflab/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace pflab;

namespace {

Graph shuffled(const Graph& g, oracle::Rng& rng) {
  std::vector<Vertex> label(g.vertex_count() + 1);
  for (int i = 0; i <= g.vertex_count(); ++i) label[i] = i;
  for (int i = g.vertex_count(); i > 1; --i) std::swap(label[i], label[1 + rng.below(i)]);
  return relabel(g, label);
}

}  // namespace

TEST_CASE("isomorphism examples") {
  Graph c4 = cycle(4);
  std::vector<Vertex> label{0, 3, 1, 4, 2};
  CHECK(is_isomorphic(c4, relabel(c4, label)));
  CHECK_FALSE(is_isomorphic(c4, complete(4)));
  Contraction c = contract_shore(cycle(6), {1, 2, 3});
  CHECK(is_isomorphic(c.graph, c4));
}

TEST_CASE("multiplicity versus underlying simple graph") {
  Graph doubled(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 2}});
  CHECK_FALSE(is_isomorphic(doubled, cycle(4)));
  CHECK(is_isomorphic(doubled, cycle(4), EdgeComparison::kUnderlyingSimple));
}

TEST_CASE("canonical form is invariant under relabelling") {
  oracle::Rng rng(21);
  for (const auto& [name, g] : small_corpus()) {
    CAPTURE(name);
    for (int t = 0; t < 3; ++t) CHECK(canonical_form(shuffled(g, rng)) == canonical_form(g));
  }
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
  oracle::Rng rng(22);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + static_cast<int>(rng.below(5));
    Graph a = oracle::random_graph(rng, n, 1, 2);
    Graph b = rng.coin() ? shuffled(a, rng) : oracle::random_graph(rng, n, 1, 2);
    CHECK(is_isomorphic(a, b) == oracle::isomorphic_by_search(a, b, false));
  }
}

TEST_CASE("isomorphism limit") {
  Limits tiny;
  tiny.isomorphism_vertices = 4;
  CHECK_THROWS_AS(canonical_form(cycle(6), EdgeComparison::kMultiplicity, tiny), ResourceError);
}
