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
#include "pflab/skew.hpp"
#include "support/oracles.hpp"

using namespace pflab;

TEST_CASE("small pfaffians") {
  CHECK(pfaffian_int(SkewMatrix(0)) == 1);
  CHECK(pfaffian_int(SkewMatrix(3)) == 0);
  CHECK(pfaffian_int(SkewMatrix::from_rows({{0, 1}, {-1, 0}})) == 1);
  SkewMatrix a(4);
  a.set(0, 1, 2);
  a.set(2, 3, 3);
  a.set(0, 2, 5);
  a.set(1, 3, 7);
  a.set(0, 3, 11);
  a.set(1, 2, 13);
  CHECK(pfaffian_int(a) == 2 * 3 - 5 * 7 + 11 * 13);
  CHECK(a.at(1, 0) == -2);
  CHECK_THROWS_AS(SkewMatrix::from_rows({{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(SkewMatrix::from_rows({{1, 0}, {0, 0}}), DomainError);
}

TEST_CASE("pfaffian squared is the determinant") {
  oracle::Rng rng(61);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 * (1 + static_cast<int>(rng.below(3)));
    SkewMatrix a(n);
    std::vector<std::vector<std::int64_t>> raw(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        a.set(i, j, rng.between(-3, 3));
        raw[i][j] = a.at(i, j);
        raw[j][i] = a.at(j, i);
      }
    }
    const BigInt pf = pfaffian_int(a);
    CHECK(pf * pf == oracle::leibniz_det(raw));
  }
}

TEST_CASE("pfaffian of the skew adjacency matrix sums matching signs") {
  oracle::Rng rng(62);
  for (const auto& [name, g] : small_corpus()) {
    if (!g.is_simple() || g.edge_count() > 20) continue;
    CAPTURE(name);
    auto gp = share(g);
    const auto ms = oracle::matchings_by_subsets(g);
    for (int t = 0; t < 3; ++t) {
      std::vector<bool> bits(g.edge_count());
      for (std::size_t e = 0; e < bits.size(); ++e) bits[e] = rng.coin();
      BigInt sum = 0;
      for (const auto& m : ms) sum += oracle::matching_sign(g, bits, m);
      CHECK(pfaffian_int(skew_adjacency(Orientation(gp, bits))) == sum);
    }
  }
}

TEST_CASE("pf_star agrees with search over every orientation") {
  for (const Graph& g : {cycle(4), cycle(6), complete(4), complete_bipartite(3, 3),
                         triangular_prism()}) {
    auto gp = share(g);
    BigInt best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
      std::vector<bool> bits(g.edge_count());
      for (int e = 0; e < g.edge_count(); ++e) bits[e] = (mask >> e) & 1;
      BigInt p = abs(pfaffian_int(skew_adjacency(Orientation(gp, bits))));
      if (p > best) best = p;
    }
    CHECK(pf_star(g) == best);
  }
  CHECK(pf_star(complete_bipartite(3, 3)) == 4);
}

TEST_CASE("skew adjacency refuses multigraphs") {
  Graph doubled(2, {{1, 2}, {1, 2}});
  CHECK_THROWS_AS(skew_adjacency(Orientation(share(doubled))), DomainError);
  CHECK_THROWS_AS(pf_star(doubled), DomainError);
}
