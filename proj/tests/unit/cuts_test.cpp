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
#include "pflab/matchings.hpp"
#include "support/oracles.hpp"

using namespace pflab;

TEST_CASE("make_cut") {
  Graph c4 = cycle(4);
  CHECK(make_cut(c4, {1, 2}).edge_ids.size() == 2);
  Cut star = make_cut(c4, {3});
  CHECK(star.trivial);
  CHECK(star.edge_ids == std::vector<EdgeId>{1, 2});
  Graph c6 = cycle(6);
  CHECK(make_cut(c6, {1, 2, 3}).edge_ids == std::vector<EdgeId>{2, 5});
  CHECK(make_cut(c6, {1, 2, 3}).edge_ids == make_cut(c6, {4, 5, 6}).edge_ids);
  CHECK_THROWS_AS(make_cut(c4, {}), DomainError);
  CHECK_THROWS_AS(make_cut(c4, {1, 2, 3, 4}), DomainError);
}

TEST_CASE("tight cuts") {
  Graph c6 = cycle(6);
  CHECK(is_tight(c6, make_cut(c6, {1, 2, 3})));
  Graph c4 = cycle(4);
  CHECK_FALSE(is_tight(c4, make_cut(c4, {1, 2})));
  for (Vertex v = 1; v <= 6; ++v) CHECK(is_tight(c6, make_cut(c6, {v})));
}

TEST_CASE("separating cuts") {
  Graph pet = petersen();
  CHECK(is_separating(pet, make_cut(pet, {1, 2, 3, 4, 5})));
  Graph c4 = cycle(4);
  CHECK_FALSE(is_separating(c4, make_cut(c4, {1, 2})));
  Graph p4(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK_THROWS_AS(is_separating(p4, make_cut(p4, {1})), DomainError);
}

TEST_CASE("separating: edge test agrees with the contraction oracle") {
  for (const auto& [name, g] : small_corpus()) {
    if (g.vertex_count() > 8) continue;
    CAPTURE(name);
    const int n = g.vertex_count();
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      VertexSet x{1};
      for (int b = 0; b < n - 1; ++b) {
        if (mask & (1u << b)) x.push_back(b + 2);
      }
      if (static_cast<int>(x.size()) == n) continue;
      const Cut c = make_cut(g, x);
      const bool by_definition =
          oracle::matching_covered_by_subsets(contract_shore(g, x).graph) &&
          oracle::matching_covered_by_subsets(contract_shore(g, complement(g, x)).graph);
      CHECK(separating_by_edges(g, c) == by_definition);
      CHECK(is_separating(g, c) == by_definition);
      if (is_tight(g, c)) CHECK(by_definition);
      // |M ∩ ∂(X)| has the parity of |X|.
      for (const Matching& m : enumerate_perfect_matchings(g)) {
        std::size_t k = 0;
        for (EdgeId e : c.edge_ids) k += m.contains(e);
        CHECK(k % 2 == x.size() % 2);
      }
    }
  }
}

TEST_CASE("contract_shore") {
  Graph c6 = cycle(6);
  Contraction c = contract_shore(c6, {1, 2, 3});
  CHECK(c.graph.vertex_count() == 4);
  CHECK(c.contracted == 4);
  CHECK(oracle::isomorphic_by_search(c.graph, cycle(4), false));
  CHECK(c.edge_map[0] == -1);
  CHECK(c.edge_map[1] == -1);

  Graph k33 = complete_bipartite(3, 3);
  Contraction side = contract_shore(k33, {1, 2});
  CHECK(side.graph.vertex_count() == 5);
  CHECK(side.graph.edge_count() == 9);
  CHECK_FALSE(side.graph.is_simple());

  Graph k4 = complete(4);
  Contraction hub = contract_shore(k4, {2, 3, 4});
  CHECK(hub.graph.vertex_count() == 2);
  CHECK(hub.graph.edge_count() == 3);
  CHECK(hub.graph.multiplicity(1, 2) == 3);
}

TEST_CASE("tight cut decomposition") {
  auto d = tight_cut_decomposition(cycle(6));
  REQUIRE(d.pieces.size() == 2);
  for (const auto& p : d.pieces) {
    CHECK(p.kind == PieceKind::kBrace);
    CHECK(oracle::isomorphic_by_search(p.graph, cycle(4), true));
  }
  auto k33 = tight_cut_decomposition(complete_bipartite(3, 3));
  REQUIRE(k33.pieces.size() == 1);
  CHECK(k33.pieces[0].kind == PieceKind::kBrace);
  CHECK(nontrivial_tight_shores(complete_bipartite(3, 3)).empty());
  auto pet = tight_cut_decomposition(petersen());
  REQUIRE(pet.pieces.size() == 1);
  CHECK(pet.pieces[0].kind == PieceKind::kBrick);
}

TEST_CASE("decomposition is independent of the order seed") {
  for (const auto& [name, g] : small_corpus()) {
    CAPTURE(name);
    auto codes = [&](std::uint64_t seed) {
      std::vector<std::vector<int>> out;
      for (const auto& p : tight_cut_decomposition(g, seed).pieces) {
        out.push_back(canonical_form(p.graph, EdgeComparison::kUnderlyingSimple));
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    const auto reference = codes(0);
    for (std::uint64_t s = 1; s < 5; ++s) CHECK(codes(s) == reference);
  }
}

TEST_CASE("decomposition enforces the vertex limit") {
  Limits tiny;
  tiny.decomposition_vertices = 4;
  CHECK_THROWS_AS(tight_cut_decomposition(cycle(6), 0, tiny), ResourceError);
}

TEST_CASE("bicontract") {
  CHECK(oracle::isomorphic_by_search(bicontract(cycle(6), 3), cycle(4), false));
  Graph b = bisubdivide(complete_bipartite(3, 3), 0, 5);
  Graph shorter = bicontract(b, 7);
  CHECK(shorter.vertex_count() == 8);
  CHECK(oracle::isomorphic_by_search(shorter, bisubdivide(complete_bipartite(3, 3), 0, 3),
                                     false));
  CHECK_THROWS_AS(bicontract(complete_bipartite(3, 3), 1), DomainError);
  Graph p4(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK_THROWS_AS(bicontract(p4, 1), DomainError);
  CHECK_NOTHROW(bicontract(p4, 2));
}

TEST_CASE("retract") {
  Graph k33 = complete_bipartite(3, 3);
  CHECK(oracle::isomorphic_by_search(retract(bisubdivide(k33, 0, 3)), k33, false));
  CHECK(retract(k33) == k33);
  Graph block = vyalyi_block();
  Graph r = retract(block);
  CHECK(oracle::isomorphic_by_search(r, k33, true));
  CHECK(retract(r) == r);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(oracle::isomorphic_by_search(retract(block, seed), r, false));
  }
}

TEST_CASE("bisubdivide") {
  Graph k33 = complete_bipartite(3, 3);
  CHECK(bisubdivide(k33, 0, 1) == k33);
  Graph b = bisubdivide(k33, 0, 3);
  CHECK(b.vertex_count() == 8);
  CHECK(b.edge_count() == 11);
  CHECK(b.edge(0) == Edge{1, 7});
  CHECK_THROWS_AS(bisubdivide(k33, 0, 2), DomainError);
  Graph h = bisubdivide(b, 4, 3);
  CHECK(h.vertex_count() == 10);
  CHECK(h.edge_count() == 13);
  CHECK(h == vyalyi_block());
}
