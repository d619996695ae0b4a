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

#ifndef PFLAB_FAMILIES_HPP_
#define PFLAB_FAMILIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pflab/graph.hpp"

namespace pflab {

// Sides 1..a and a+1..a+b; edges (i, a+j) for i then j ascending.
Graph complete_bipartite(int a, int b);
// Edges (i, j), i < j, lexicographic.
Graph complete(int n);
// Edges (1,2), (2,3), ..., (n,1); n >= 3.
Graph cycle(int n);
// Outer pentagon 1..5, spokes (i, i+5), inner pentagram on 6..10.
Graph petersen();

// K_{3,3} with the edges a1b1 = (1,4) and a2b2 = (2,5) replaced by ears of
// length three: 1-7-8-4 and 2-9-10-5. 10 vertices, 13 edges.
Graph vyalyi_block();
struct VyalyiTags {
  Vertex u = 7;   // ear 1-7-8-4
  Vertex v = 8;
  Vertex p = 10;  // ear 2-9-10-5
  Vertex q = 9;
};
inline constexpr VyalyiTags kVyalyiTags{};

// n >= 1 blocks; block i occupies vertices 10(i-1)+1..10i and edges
// 13(i-1)..13i-1, followed by u_i p_{i+1}, v_i q_{i+1} (i < n) and
// u_n p_1, v_n q_1. Throws VerificationError if the result is not
// bipartite, cubic and matching covered.
Graph vyalyi(int n);
VertexSet vyalyi_block_vertices(int n, int i);
std::vector<EdgeId> vyalyi_block_edges(int n, int i);

// The n vertex-disjoint K_{3,3} copies of K_{3n,3n}: consecutive triples on
// each side.
std::vector<VertexSet> k33_copies(int n);

// Triangles 1-2-3 and 4-5-6 joined by (i, i+3).
Graph triangular_prism();
// The 3-cube; vertex 1 + b for bit pattern b, edges between patterns at
// Hamming distance one.
Graph cube();

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Small matching covered graphs (at most 12 vertices) used by the
// randomized checks.
std::vector<NamedGraph> small_corpus();

struct FamilySpec {
  std::string name;
  std::vector<int> params;
};

// Names: complete-bipartite a b | complete n | cycle n | petersen | prism |
// cube | vyalyi-block | vyalyi n. Throws DomainError on unknown names or arity.
Graph generate_family(const FamilySpec& spec);

// A conformal piece with a known (or lower-bounded) pfaffian number. When
// edge_ids is set, the piece is the spanning subgraph of those edges on
// `vertices`; otherwise it is induced.
struct ConformalPart {
  VertexSet vertices;
  std::optional<std::vector<EdgeId>> edge_ids;
  int pf = 1;
};

// Peels the parts off in order: with R the current remainder, each part must
// be conformal in R; then pf(R) >= pf(part) + pf(R - part) - 1. A non-empty
// final remainder must be matchable (pf >= 1). Result: sum pf - (#parts - 1).
// Throws DomainError on overlapping parts or a non-conformal step.
int conformal_lower_bound(const Graph& g, const std::vector<ConformalPart>& parts);

}  // namespace pflab

#endif  // PFLAB_FAMILIES_HPP_
