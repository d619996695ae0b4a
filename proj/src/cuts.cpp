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

#include "pflab/cuts.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "pflab/errors.hpp"
#include "pflab/matchings.hpp"

namespace pflab {

Cut make_cut(const Graph& g, const VertexSet& shore) {
  VertexSet x = make_vertex_set(shore);
  if (x.empty() || static_cast<int>(x.size()) >= g.vertex_count()) {
    throw DomainError("cut shore must be a non-empty proper vertex subset");
  }
  auto in = indicator(g, x);
  Cut c;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in[g.edge(e).u] != in[g.edge(e).v]) c.edge_ids.push_back(e);
  }
  c.trivial = x.size() == 1 || static_cast<int>(x.size()) == g.vertex_count() - 1;
  c.shore = std::move(x);
  return c;
}

namespace {

int meet(const Matching& m, const Cut& c) {
  int count = 0;
  for (EdgeId e : c.edge_ids) count += m.contains(e) ? 1 : 0;
  return count;
}

}  // namespace

bool is_tight(const Graph& g, const Cut& c) {
  for (const Matching& m : enumerate_perfect_matchings(g)) {
    if (meet(m, c) != 1) return false;
  }
  return true;
}

bool separating_by_edges(const Graph& g, const Cut& c) {
  std::vector<char> covered(g.edge_count(), 0);
  for (const Matching& m : enumerate_perfect_matchings(g)) {
    if (meet(m, c) != 1) continue;
    for (EdgeId e : m.edge_ids) covered[e] = 1;
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](char f) { return f != 0; });
}

bool is_separating(const Graph& g, const Cut& c) {
  if (!is_matching_covered(g)) {
    throw DomainError("is_separating: graph is not matching covered");
  }
  bool by_edges = separating_by_edges(g, c);
  bool by_definition =
      is_matching_covered(contract_shore(g, c.shore).graph) &&
      is_matching_covered(contract_shore(g, complement(g, c.shore)).graph);
  if (by_edges != by_definition) {
    throw VerificationError(
        "separating-cut characterisation disagrees with the definition");
  }
  return by_edges;
}

Contraction contract_shore(const Graph& g, const VertexSet& shore) {
  VertexSet x = make_vertex_set(shore);
  if (x.empty() || static_cast<int>(x.size()) >= g.vertex_count()) {
    throw DomainError("contraction shore must be a non-empty proper subset");
  }
  auto in = indicator(g, x);
  Contraction out;
  out.vertex_map.assign(g.vertex_count() + 1, 0);
  Vertex next = 1;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (!in[v]) out.vertex_map[v] = next++;
  }
  out.contracted = next;
  for (Vertex v : x) out.vertex_map[v] = out.contracted;
  std::vector<Edge> edges;
  out.edge_map.assign(g.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (in[ed.u] && in[ed.v]) continue;
    out.edge_map[e] = static_cast<EdgeId>(edges.size());
    edges.push_back({out.vertex_map[ed.u], out.vertex_map[ed.v]});
  }
  out.graph = Graph(out.contracted, std::move(edges));
  return out;
}

std::vector<VertexSet> nontrivial_tight_shores(const Graph& g,
                                               const Limits& limits) {
  const int n = g.vertex_count();
  if (n > limits.decomposition_vertices) {
    throw ResourceError("tight cut search limited to " +
                        std::to_string(limits.decomposition_vertices) +
                        " vertices, graph has " + std::to_string(n));
  }
  std::vector<std::vector<Vertex>> mates;
  for (const Matching& m : enumerate_perfect_matchings(g)) {
    std::vector<Vertex> mate(n + 1, 0);
    for (EdgeId e : m.edge_ids) {
      mate[g.edge(e).u] = g.edge(e).v;
      mate[g.edge(e).v] = g.edge(e).u;
    }
    mates.push_back(std::move(mate));
  }
  std::vector<VertexSet> shores;
  // Shores contain vertex 1 (bit 0), which fixes one side of each cut.
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    std::uint32_t mask = (rest << 1) | 1u;
    int size = std::popcount(mask);
    if (size < 3 || size > n - 3 || size % 2 == 0) continue;
    bool tight = true;
    for (const auto& mate : mates) {
      int crossing = 0;
      for (Vertex v = 1; v <= n && crossing <= 1; ++v) {
        if ((mask >> (v - 1) & 1u) && !(mask >> (mate[v] - 1) & 1u)) {
          ++crossing;
        }
      }
      if (crossing != 1) {
        tight = false;
        break;
      }
    }
    if (!tight) continue;
    VertexSet shore;
    for (Vertex v = 1; v <= n; ++v) {
      if (mask >> (v - 1) & 1u) shore.push_back(v);
    }
    shores.push_back(std::move(shore));
  }
  return shores;
}

namespace {

void decompose(const Graph& g, std::mt19937_64& rng, const Limits& limits,
               std::vector<DecompositionPiece>& out) {
  auto shores = nontrivial_tight_shores(g, limits);
  if (shores.empty()) {
    out.push_back({g, g.is_bipartite() ? PieceKind::kBrace : PieceKind::kBrick});
    return;
  }
  const VertexSet& x = shores[rng() % shores.size()];
  decompose(contract_shore(g, x).graph, rng, limits, out);
  decompose(contract_shore(g, complement(g, x)).graph, rng, limits, out);
}

}  // namespace

DecompositionResult tight_cut_decomposition(const Graph& g,
                                            std::uint64_t order_seed,
                                            const Limits& limits) {
  if (g.vertex_count() > limits.decomposition_vertices) {
    throw ResourceError("tight cut decomposition limited to " +
                        std::to_string(limits.decomposition_vertices) +
                        " vertices");
  }
  if (!is_matching_covered(g)) {
    throw DomainError("tight cut decomposition needs a matching covered graph");
  }
  std::mt19937_64 rng(order_seed);
  DecompositionResult result;
  decompose(g, rng, limits, result.pieces);
  return result;
}

Graph bicontract(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw DomainError("bicontract: vertex out of range");
  if (g.degree(v) != 2) {
    throw DomainError("bicontract: vertex " + std::to_string(v) +
                      " has degree " + std::to_string(g.degree(v)));
  }
  if (g.vertex_count() < 4) {
    throw DomainError("bicontract: graph needs at least four vertices");
  }
  Vertex u = g.other_end(g.incident(v)[0], v);
  Vertex w = g.other_end(g.incident(v)[1], v);
  if (u == w) throw DomainError("bicontract: both edges lead to one neighbour");
  return contract_shore(g, make_vertex_set({u, v, w})).graph;
}

Graph retract(const Graph& g, std::optional<std::uint64_t> order_seed) {
  if (!is_matching_covered(g)) {
    throw DomainError("retract needs a matching covered graph");
  }
  std::mt19937_64 rng(order_seed.value_or(0));
  Graph current = g;
  while (current.vertex_count() >= 4) {
    std::vector<Vertex> candidates;
    for (Vertex v = 1; v <= current.vertex_count(); ++v) {
      if (current.degree(v) == 2) candidates.push_back(v);
    }
    if (candidates.empty()) break;
    Vertex pick = order_seed ? candidates[rng() % candidates.size()]
                             : candidates.front();
    current = bicontract(current, pick);
  }
  return current;
}

Graph bisubdivide(const Graph& g, EdgeId e, int ear_length) {
  if (ear_length < 1 || ear_length % 2 == 0) {
    throw DomainError("ear length must be odd and positive, got " +
                      std::to_string(ear_length));
  }
  if (e < 0 || e >= g.edge_count()) throw DomainError("edge id out of range");
  if (ear_length == 1) return g;
  std::vector<Edge> edges = g.edges();
  const Vertex u = edges[e].u;
  const Vertex v = edges[e].v;
  const int n = g.vertex_count();
  edges[e] = {u, n + 1};
  for (int i = 1; i < ear_length - 1; ++i) edges.push_back({n + i, n + i + 1});
  edges.push_back({n + ear_length - 1, v});
  return Graph(n + ear_length - 1, std::move(edges));
}

}  // namespace pflab
