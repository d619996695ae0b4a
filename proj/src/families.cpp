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

#include "pflab/families.hpp"

#include <algorithm>
#include <string>

#include "pflab/cuts.hpp"
#include "pflab/errors.hpp"
#include "pflab/matchings.hpp"

namespace pflab {

namespace {

void require_positive(int x, const char* what) {
  if (x < 1) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

Graph complete_bipartite(int a, int b) {
  require_positive(a, "side size");
  require_positive(b, "side size");
  std::vector<Edge> edges;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) edges.push_back({i, a + j});
  }
  return Graph(a + b, std::move(edges));
}

Graph complete(int n) {
  require_positive(n, "vertex count");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({n, 1});
  return Graph(n, std::move(edges));
}

Graph petersen() {
  return Graph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                    {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                    {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
}

Graph triangular_prism() {
  return Graph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4},
                   {1, 4}, {2, 5}, {3, 6}});
}

Graph cube() {
  std::vector<Edge> edges;
  for (int a = 0; a < 8; ++a) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if ((a & bit) == 0) edges.push_back({a + 1, (a | bit) + 1});
    }
  }
  return Graph(8, std::move(edges));
}

std::vector<NamedGraph> small_corpus() {
  return {
      {"K2", complete(2)},
      {"C4", cycle(4)},
      {"C6", cycle(6)},
      {"C8", cycle(8)},
      {"K4", complete(4)},
      {"K3,3", complete_bipartite(3, 3)},
      {"prism", triangular_prism()},
      {"cube", cube()},
      {"K6", complete(6)},
      {"K4,4", complete_bipartite(4, 4)},
      {"petersen", petersen()},
      {"vyalyi-block", vyalyi_block()},
      {"K3,3 ear 5", bisubdivide(complete_bipartite(3, 3), 0, 5)},
  };
}

Graph vyalyi_block() {
  Graph k33 = complete_bipartite(3, 3);
  // Edge 0 is (1,4) and edge 4 is (2,5); ids survive the first bisubdivision.
  return bisubdivide(bisubdivide(k33, 0, 3), 4, 3);
}

Graph vyalyi(int n) {
  require_positive(n, "block count");
  const Graph block = vyalyi_block();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (const Edge& e : block.edges()) edges.push_back({e.u + 10 * i, e.v + 10 * i});
  }
  const VyalyiTags t = kVyalyiTags;
  for (int i = 0; i < n; ++i) {
    const int next = (i + 1) % n;
    edges.push_back({t.u + 10 * i, t.p + 10 * next});
    edges.push_back({t.v + 10 * i, t.q + 10 * next});
  }
  Graph g(10 * n, std::move(edges));
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (g.degree(v) != 3) throw VerificationError("Vyalyi graph is not cubic");
  }
  if (!g.is_bipartite()) throw VerificationError("Vyalyi graph is not bipartite");
  if (!is_matching_covered(g)) {
    throw VerificationError("Vyalyi graph is not matching covered");
  }
  return g;
}

VertexSet vyalyi_block_vertices(int n, int i) {
  if (i < 1 || i > n) throw DomainError("block index out of range");
  VertexSet s;
  for (int v = 1; v <= 10; ++v) s.push_back(10 * (i - 1) + v);
  return s;
}

std::vector<EdgeId> vyalyi_block_edges(int n, int i) {
  if (i < 1 || i > n) throw DomainError("block index out of range");
  std::vector<EdgeId> ids;
  for (int e = 0; e < 13; ++e) ids.push_back(13 * (i - 1) + e);
  return ids;
}

std::vector<VertexSet> k33_copies(int n) {
  require_positive(n, "copy count");
  std::vector<VertexSet> copies;
  for (int c = 0; c < n; ++c) {
    VertexSet s;
    for (int j = 1; j <= 3; ++j) s.push_back(3 * c + j);
    for (int j = 1; j <= 3; ++j) s.push_back(3 * n + 3 * c + j);
    copies.push_back(std::move(s));
  }
  return copies;
}

Graph generate_family(const FamilySpec& spec) {
  auto arity = [&](std::size_t k) {
    if (spec.params.size() != k) {
      throw DomainError("family " + spec.name + " takes " + std::to_string(k) +
                        " parameter(s)");
    }
  };
  if (spec.name == "complete-bipartite") {
    arity(2);
    return complete_bipartite(spec.params[0], spec.params[1]);
  }
  if (spec.name == "complete") {
    arity(1);
    return complete(spec.params[0]);
  }
  if (spec.name == "cycle") {
    arity(1);
    return cycle(spec.params[0]);
  }
  if (spec.name == "petersen") {
    arity(0);
    return petersen();
  }
  if (spec.name == "prism") {
    arity(0);
    return triangular_prism();
  }
  if (spec.name == "cube") {
    arity(0);
    return cube();
  }
  if (spec.name == "vyalyi-block") {
    arity(0);
    return vyalyi_block();
  }
  if (spec.name == "vyalyi") {
    arity(1);
    return vyalyi(spec.params[0]);
  }
  throw DomainError("unknown family: " + spec.name);
}

int conformal_lower_bound(const Graph& g, const std::vector<ConformalPart>& parts) {
  if (parts.empty()) throw DomainError("no conformal parts given");
  std::vector<char> remaining(g.vertex_count() + 1, 1);
  remaining[0] = 0;
  int bound = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const ConformalPart& part = parts[i];
    if (part.vertices.empty()) throw DomainError("empty conformal part");
    std::vector<char> in(g.vertex_count() + 1, 0);
    for (Vertex v : part.vertices) {
      if (!g.has_vertex(v) || !remaining[v]) {
        throw DomainError("part " + std::to_string(i + 1) +
                          " overlaps an earlier part or names a missing vertex");
      }
      in[v] = 1;
    }
    bool part_matchable;
    if (part.edge_ids) {
      for (EdgeId e : *part.edge_ids) {
        if (e < 0 || e >= g.edge_count() || !in[g.edge(e).u] || !in[g.edge(e).v]) {
          throw DomainError("part " + std::to_string(i + 1) +
                            " lists an edge outside its vertex set");
        }
      }
      part_matchable = is_matchable(edge_subgraph(g, part.vertices, *part.edge_ids).graph);
    } else {
      part_matchable = is_matchable_within(g, in);
    }
    for (Vertex v : part.vertices) remaining[v] = 0;
    if (!part_matchable || !is_matchable_within(g, remaining)) {
      throw DomainError("part " + std::to_string(i + 1) +
                        " is not conformal in the remaining graph");
    }
    bound += part.pf;
    if (i > 0) bound -= 1;
  }
  return bound;
}

}  // namespace pflab
