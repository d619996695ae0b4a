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

#include "pflab/errors.hpp"
#include "pflab/families.hpp"
#include "pflab/graph.hpp"
#include "support/oracles.hpp"

using namespace pflab;

TEST_CASE("parse_graph reads edge lists") {
  Graph c4 = parse_graph("4 4\n1 2\n2 3\n3 4\n4 1\n");
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.edge(3) == Edge{4, 1});
  CHECK(c4 == cycle(4));

  Graph k2 = parse_graph("2 1\n1 2\n");
  CHECK(k2.edge_count() == 1);

  Graph parallel = parse_graph("4 2\n1 2\n1 2\n");
  CHECK(parallel.edge_count() == 2);
  CHECK_FALSE(parallel.is_simple());
  CHECK(parallel.multiplicity(1, 2) == 2);
}

TEST_CASE("parse_graph skips comments and blank lines") {
  Graph g = parse_graph("# a comment\n\n2 1\n\n# more\n1 2\n");
  CHECK(g.edge_count() == 1);
}

TEST_CASE("parse_graph names the offending line") {
  try {
    parse_graph("3 2\n1 2\n2 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_graph("3 1\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("format_graph round trips") {
  for (const auto& [name, g] : small_corpus()) {
    CHECK(parse_graph(format_graph(g)) == g);
  }
}

TEST_CASE("Graph rejects loops and out-of-range endpoints") {
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(Graph(2, {{1, 3}}), DomainError);
}

TEST_CASE("connectivity and bipartition") {
  CHECK(cycle(6).is_bipartite());
  CHECK_FALSE(cycle(5).is_bipartite());
  CHECK_FALSE(petersen().is_bipartite());
  CHECK(complete_bipartite(3, 3).is_connected());
  CHECK_FALSE(Graph(4, {{1, 2}, {3, 4}}).is_connected());
}

TEST_CASE("induced and edge subgraphs keep parent maps") {
  Graph g = complete_bipartite(3, 3);
  Subgraph s = induced_subgraph(g, {1, 2, 4, 5});
  CHECK(s.graph.vertex_count() == 4);
  CHECK(s.graph.edge_count() == 4);
  for (EdgeId e = 0; e < s.graph.edge_count(); ++e) {
    const Edge& child = s.graph.edge(e);
    const Edge& parent = g.edge(s.parent_edge[e]);
    CHECK(s.parent_vertex[child.u] == parent.u);
    CHECK(s.parent_vertex[child.v] == parent.v);
  }
  Subgraph t = edge_subgraph(g, {1, 4}, {0});
  CHECK(t.graph.edge_count() == 1);
}

TEST_CASE("relabel, disjoint union and simplify") {
  Graph c4 = cycle(4);
  std::vector<Vertex> label{0, 2, 3, 4, 1};
  Graph r = relabel(c4, label);
  CHECK(r.edge(0) == Edge{2, 3});
  Graph u = disjoint_union(c4, c4);
  CHECK(u.vertex_count() == 8);
  CHECK(u.edge(4) == Edge{5, 6});
  Graph s = simplify(Graph(3, {{1, 2}, {2, 1}, {2, 3}}));
  CHECK(s.edge_count() == 2);
}

TEST_CASE("permutation_sign matches inversion counting") {
  oracle::Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng.below(8));
    std::vector<Vertex> p(n + 1);
    for (int i = 0; i <= n; ++i) p[i] = i;
    for (int i = n; i > 1; --i) std::swap(p[i], p[1 + rng.below(i)]);
    int inv = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) inv += p[i] > p[j];
    }
    CHECK(permutation_sign(p) == (inv % 2 ? -1 : 1));
  }
}
