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

#ifndef PFLAB_GRAPH_HPP_
#define PFLAB_GRAPH_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pflab {

// Vertices are enumerated 1..n; edge ids are 0..m-1 in insertion order.
using Vertex = int;
using EdgeId = int;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Loopless multigraph. Immutable once built; contractions can create parallel
// edges, so simplicity is a predicate rather than an invariant.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& incident(Vertex v) const { return incident_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }
  Vertex other_end(EdgeId e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }

  int multiplicity(Vertex a, Vertex b) const;
  bool is_simple() const;
  bool is_connected() const;
  // Colour 0/1 per vertex (index 0 unused) when the graph is bipartite.
  std::optional<std::vector<int>> bipartition() const;
  bool is_bipartite() const { return bipartition().has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Perfect or partial matching, kept as a sorted list of edge ids.
struct Matching {
  std::vector<EdgeId> edge_ids;

  Matching() = default;
  explicit Matching(std::vector<EdgeId> ids);
  bool contains(EdgeId e) const;
  std::size_t size() const { return edge_ids.size(); }
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

struct Cut {
  VertexSet shore;
  std::vector<EdgeId> edge_ids;
  bool trivial = false;
};

// Closed walk with distinct vertices; edge_ids[i] joins vertices[i] and
// vertices[(i + 1) % length].
struct Cycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edge_ids;
  std::size_t length() const { return edge_ids.size(); }
};

// A subgraph renumbered 1..k, with maps back into the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> parent_vertex;  // index 1..k; [0] unused
  std::vector<EdgeId> parent_edge;    // index 0..m'-1
};

// Edge-list text: "n m" then m lines "u v". Blank lines and lines starting
// with '#' are ignored.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

VertexSet make_vertex_set(std::vector<Vertex> vertices);
VertexSet complement(const Graph& g, const VertexSet& set);
std::vector<char> indicator(const Graph& g, const VertexSet& set);
VertexSet all_vertices(const Graph& g);

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices);
// Subgraph spanned by an edge subset, on the given vertex set.
Subgraph edge_subgraph(const Graph& g, const VertexSet& vertices,
                       const std::vector<EdgeId>& edges);

// new_label[v] is the new number of vertex v (index 0 unused). Edge order and
// endpoint order are preserved.
Graph relabel(const Graph& g, std::span<const Vertex> new_label);
Graph disjoint_union(const Graph& a, const Graph& b);
// Underlying simple graph: parallel edges collapsed, first occurrence kept.
Graph simplify(const Graph& g);

// Sign (+1 / -1) of a permutation of 1..n given in one-line notation
// (index 0 unused).
int permutation_sign(std::span<const Vertex> one_line);

}  // namespace pflab

#endif  // PFLAB_GRAPH_HPP_
