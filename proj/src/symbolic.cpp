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

#include "pflab/symbolic.hpp"

#include <map>
#include <string>

#include "pflab/detail/pfaffian_expansion.hpp"
#include "pflab/errors.hpp"
#include "pflab/matchings.hpp"
#include "pflab/skew.hpp"

namespace pflab {

void SymbolicLabeling::validate(const Graph& g) const {
  if (d < 0 || d > 64) throw DomainError("labeling dimension outside [0, 64]");
  if (static_cast<int>(tau.size()) != g.edge_count()) {
    throw DomainError("labeling has " + std::to_string(tau.size()) +
                      " labels for " + std::to_string(g.edge_count()) + " edges");
  }
  for (std::uint64_t t : tau) {
    if (d < 64 && (t >> d) != 0) {
      throw DomainError("label uses a coordinate beyond d = " + std::to_string(d));
    }
  }
}

SymbolicLabeling zero_labeling(const Graph& g, int d) {
  SymbolicLabeling l{d, std::vector<std::uint64_t>(g.edge_count(), 0)};
  l.validate(g);
  return l;
}

SymbolicLabeling standard_basis_labeling(const Graph& g) {
  SymbolicLabeling l = zero_labeling(g, g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) l.tau[e] = std::uint64_t{1} << e;
  return l;
}

std::uint64_t tau_of_matching(const SymbolicLabeling& l, const Matching& m) {
  std::uint64_t t = 0;
  for (EdgeId e : m.edge_ids) t ^= l.tau.at(e);
  return t;
}

std::optional<std::pair<Matching, Matching>> find_symbolic_obstruction(
    const Orientation& d0, const SymbolicLabeling& l) {
  l.validate(d0.graph());
  std::map<std::uint64_t, std::pair<Matching, Sign>> seen;
  for (const Matching& m : enumerate_perfect_matchings(d0.graph())) {
    Sign s = matching_sign(d0, m);
    auto [it, inserted] = seen.emplace(tau_of_matching(l, m), std::make_pair(m, s));
    if (!inserted && it->second.second != s) {
      return std::make_pair(it->second.first, m);
    }
  }
  return std::nullopt;
}

bool is_pfaffian_symbolic(const Orientation& d0, const SymbolicLabeling& l) {
  return !find_symbolic_obstruction(d0, l).has_value();
}

RingMatrix symbolic_matrix(const Orientation& d0, const SymbolicLabeling& l,
                           const Limits& limits) {
  const Graph& g = d0.graph();
  l.validate(g);
  if (l.d > limits.symbolic_dimension || l.d > RingPoly::kMaxDimension) {
    throw DomainError("symbolic dimension " + std::to_string(l.d) +
                      " exceeds the limit");
  }
  SkewMatrix a = skew_adjacency(d0);
  const int n = g.vertex_count();
  RingMatrix m(n, std::vector<RingPoly>(n, RingPoly(l.d)));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int i = g.edge(e).u - 1;
    const int j = g.edge(e).v - 1;
    const auto exponent = static_cast<RingPoly::Exponent>(l.tau[e]);
    m[i][j] = RingPoly::monomial(l.d, exponent, a.at(i, j));
    m[j][i] = RingPoly::monomial(l.d, exponent, a.at(j, i));
  }
  return m;
}

RingPoly pfaffian_ring(const RingMatrix& m) {
  const int n = static_cast<int>(m.size());
  int d = 0;
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) {
      throw DomainError("ring matrix is not square");
    }
  }
  if (n > 0) d = m[0][0].dimension();
  for (const auto& row : m) {
    for (const RingPoly& p : row) {
      if (p.dimension() != d) throw DomainError("ring matrix mixes dimensions");
    }
  }
  return detail::expand_pfaffian<RingPoly>(
      n, [&](int i, int j) { return m[i][j]; },
      [&](int i, int j) { return m[i][j].is_zero(); }, RingPoly::constant(d, 1),
      RingPoly(d));
}

BigInt count_via_symbolic(const Orientation& d0, const SymbolicLabeling& l,
                          const Limits& limits) {
  if (auto pair = find_symbolic_obstruction(d0, l)) {
    throw DomainError("symbolic orientation is not pfaffian: two perfect "
                      "matchings share tau but differ in sign");
  }
  return pfaffian_ring(symbolic_matrix(d0, l, limits)).abs_coefficient_sum();
}

SymbolicOrientation symbolic_candidate(const KOrientation& kd) {
  const std::size_t k = kd.size();
  if (k - 1 > 64) throw DomainError("more than 65 orientations");
  const Orientation& last = kd[k - 1];
  SymbolicLabeling l = zero_labeling(kd.graph(), static_cast<int>(k - 1));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (EdgeId e : orientation_difference(kd[i], last)) {
      l.tau[e] |= std::uint64_t{1} << i;
    }
  }
  return {last, std::move(l)};
}

SymbolicOrientation symbolic_from_korientation(const KOrientation& kd) {
  if (!solve_pfaffian_system(signature_matrix(kd))) {
    throw DomainError("k-orientation is not pfaffian");
  }
  SymbolicOrientation out = symbolic_candidate(kd);
  if (!is_pfaffian_symbolic(out.orientation, out.labeling)) {
    throw VerificationError("labeling built from a pfaffian k-orientation is "
                            "not a pfaffian symbolic orientation");
  }
  return out;
}

SpfBound spf_lower_bound(const Graph& g, const Limits& limits) {
  SpfBound out;
  out.matchings = count_perfect_matchings(g);
  out.pf_star = pf_star(g, limits);
  if (out.pf_star == 0) return out;
  BigInt scaled = out.pf_star;
  int t = 0;
  while (scaled < out.matchings) {
    scaled *= 4;
    ++t;
  }
  out.bound = t;
  return out;
}

}  // namespace pflab
