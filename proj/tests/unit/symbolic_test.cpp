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

#include <map>

#include "pflab/errors.hpp"
#include "pflab/families.hpp"
#include "pflab/matchings.hpp"
#include "pflab/pfaffian_number.hpp"
#include "pflab/ring.hpp"
#include "pflab/skew.hpp"
#include "pflab/symbolic.hpp"
#include "support/oracles.hpp"

using namespace pflab;

TEST_CASE("ring arithmetic") {
  const RingPoly one = RingPoly::constant(2, 1);
  const RingPoly t1 = RingPoly::monomial(2, 0b01);
  const RingPoly t2 = RingPoly::monomial(2, 0b10);
  CHECK(t1 * t1 == one);
  CHECK((one + t1) * (one - t1) == RingPoly(2));
  CHECK((t1 * t2).coefficient(0b11) == 1);
  CHECK((one + t1 + t2).evaluate_at_ones() == 3);
  CHECK((one - t1 - t1).abs_coefficient_sum() == 3);
  CHECK((-t2).coefficient(0b10) == -1);
  CHECK(RingPoly(2).is_zero());
  CHECK_THROWS_AS(t1 + RingPoly::monomial(3, 1), DomainError);
  CHECK_THROWS_AS(RingPoly(RingPoly::kMaxDimension + 1), DomainError);
}

TEST_CASE("ring multiplication is associative and commutative") {
  oracle::Rng rng(71);
  auto random_poly = [&] {
    RingPoly p(3);
    for (int t = 0; t < 4; ++t) {
      p = p + RingPoly::monomial(3, static_cast<RingPoly::Exponent>(rng.below(8)),
                                 rng.between(-3, 3));
    }
    return p;
  };
  for (int t = 0; t < 100; ++t) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).evaluate_at_ones() == a.evaluate_at_ones() * b.evaluate_at_ones());
  }
}

TEST_CASE("zero labeling reduces to the ordinary pfaffian") {
  oracle::Rng rng(72);
  for (const Graph& g : {complete(4), cycle(6), complete_bipartite(3, 3)}) {
    auto gp = share(g);
    std::vector<bool> bits(g.edge_count());
    for (std::size_t e = 0; e < bits.size(); ++e) bits[e] = rng.coin();
    Orientation d(gp, bits);
    RingPoly p = pfaffian_ring(symbolic_matrix(d, zero_labeling(g, 1)));
    CHECK(BigInt(p.coefficient(0)) == pfaffian_int(skew_adjacency(d)));
  }
}

TEST_CASE("standard basis labeling counts every matching") {
  for (const auto& [name, g] : small_corpus()) {
    if (!g.is_simple() || g.edge_count() > RingPoly::kMaxDimension) continue;
    CAPTURE(name);
    Orientation d(share(g));
    SymbolicLabeling l = standard_basis_labeling(g);
    CHECK(is_pfaffian_symbolic(d, l));
    CHECK(count_via_symbolic(d, l) == count_perfect_matchings(g));
  }
}

TEST_CASE("obstructions") {
  Graph k33 = complete_bipartite(3, 3);
  Orientation d(share(k33));
  auto pair = find_symbolic_obstruction(d, zero_labeling(k33, 1));
  REQUIRE(pair.has_value());
  CHECK(matching_sign(d, pair->first) != matching_sign(d, pair->second));
  CHECK_THROWS_AS(count_via_symbolic(d, zero_labeling(k33, 1)), DomainError);
  SymbolicLabeling wrong{2, {0, 0, 0}};
  CHECK_THROWS_AS(wrong.validate(k33), DomainError);
  SymbolicLabeling wide{1, std::vector<std::uint64_t>(9, 0b10)};
  CHECK_THROWS_AS(wide.validate(k33), DomainError);
}

TEST_CASE("symbolic orientation from a pfaffian k-orientation") {
  for (const Graph& g : {complete_bipartite(3, 3), petersen(), cycle(6)}) {
    auto r = pfaffian_number(g);
    REQUIRE(r.witness.has_value());
    SymbolicOrientation so = symbolic_from_korientation(*r.witness);
    CHECK(so.labeling.d == static_cast<int>(r.k) - 1);
    CHECK(is_pfaffian_symbolic(so.orientation, so.labeling));
    CHECK(count_via_symbolic(so.orientation, so.labeling) == count_perfect_matchings(g));
    // tau(M) = tau(M') forces equal signs.
    std::map<std::uint64_t, Sign> seen;
    for (const Matching& m : enumerate_perfect_matchings(g)) {
      const auto tau = tau_of_matching(so.labeling, m);
      const Sign s = matching_sign(so.orientation, m);
      auto [it, fresh] = seen.emplace(tau, s);
      if (!fresh) CHECK(it->second == s);
    }
  }
  auto k33 = share(complete_bipartite(3, 3));
  KOrientation one({Orientation(k33)});
  CHECK_THROWS_AS(symbolic_from_korientation(one), DomainError);
}

TEST_CASE("spf lower bound") {
  SpfBound k33 = spf_lower_bound(complete_bipartite(3, 3));
  CHECK(k33.matchings == 6);
  CHECK(k33.pf_star == 4);
  CHECK(k33.bound == 1);
  SpfBound c6 = spf_lower_bound(cycle(6));
  CHECK(c6.bound == 0);
  for (const Graph& g : {complete(4), petersen(), cube(), complete_bipartite(4, 4)}) {
    SpfBound b = spf_lower_bound(g);
    REQUIRE(b.bound.has_value());
    const int t = *b.bound;
    CHECK(b.pf_star * (BigInt(1) << (2 * t)) >= b.matchings);
    if (t > 0) CHECK(b.pf_star * (BigInt(1) << (2 * (t - 1))) < b.matchings);
  }
}
