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

#include "pflab/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include "pflab/errors.hpp"

namespace pflab {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), incident_(n_ + 1) {
  if (n_ < 0) throw DomainError("negative vertex count");
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if (!has_vertex(ed.u) || !has_vertex(ed.v)) {
      throw DomainError("edge " + std::to_string(e) +
                        " has an endpoint out of range");
    }
    if (ed.u == ed.v) {
      throw DomainError("edge " + std::to_string(e) + " is a loop");
    }
    incident_[ed.u].push_back(e);
    incident_[ed.v].push_back(e);
  }
}

int Graph::multiplicity(Vertex a, Vertex b) const {
  int count = 0;
  for (EdgeId e : incident_[a]) {
    if (other_end(e, a) == b) ++count;
  }
  return count;
}

bool Graph::is_simple() const {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : edges_) {
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      return false;
    }
  }
  return true;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_ + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId e : incident_[x]) {
      Vertex y = other_end(e, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n_;
}

std::optional<std::vector<int>> Graph::bipartition() const {
  std::vector<int> colour(n_ + 1, -1);
  for (Vertex s = 1; s <= n_; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      for (EdgeId e : incident_[x]) {
        Vertex y = other_end(e, x);
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          queue.push(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

Matching::Matching(std::vector<EdgeId> ids) : edge_ids(std::move(ids)) {
  std::sort(edge_ids.begin(), edge_ids.end());
}

bool Matching::contains(EdgeId e) const {
  return std::binary_search(edge_ids.begin(), edge_ids.end(), e);
}

namespace {

// Next line that carries content, with its 1-based line number.
bool next_content_line(std::istringstream& in, int& line_no,
                       std::string& line) {
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::pair<long, long> read_pair(const std::string& line, int line_no) {
  std::istringstream fields(line);
  long a = 0, b = 0;
  std::string extra;
  if (!(fields >> a >> b)) throw ParseError(line_no, "expected two integers");
  if (fields >> extra) throw ParseError(line_no, "trailing data '" + extra + "'");
  return {a, b};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line_no, line)) {
    throw ParseError(1, "missing header \"n m\"");
  }
  auto [n, m] = read_pair(line, line_no);
  if (n < 1) throw ParseError(line_no, "vertex count must be positive");
  if (m < 0) throw ParseError(line_no, "edge count must be non-negative");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    if (!next_content_line(in, line_no, line)) {
      throw ParseError(line_no + 1, "expected " + std::to_string(m) +
                                        " edges, found " + std::to_string(i));
    }
    auto [u, v] = read_pair(line, line_no);
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_content_line(in, line_no, line)) {
    throw ParseError(line_no, "unexpected content after the last edge");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

VertexSet complement(const Graph& g, const VertexSet& set) {
  auto in = indicator(g, set);
  VertexSet out;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

std::vector<char> indicator(const Graph& g, const VertexSet& set) {
  std::vector<char> in(g.vertex_count() + 1, 0);
  for (Vertex v : set) {
    if (!g.has_vertex(v)) {
      throw DomainError("vertex " + std::to_string(v) + " out of range");
    }
    in[v] = 1;
  }
  return in;
}

VertexSet all_vertices(const Graph& g) {
  VertexSet out(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) out[i] = i + 1;
  return out;
}

Subgraph edge_subgraph(const Graph& g, const VertexSet& vertices,
                       const std::vector<EdgeId>& edges) {
  std::vector<Vertex> new_label(g.vertex_count() + 1, 0);
  Subgraph sub;
  sub.parent_vertex.push_back(0);
  for (Vertex v : vertices) {
    if (!g.has_vertex(v)) {
      throw DomainError("vertex " + std::to_string(v) + " out of range");
    }
    new_label[v] = static_cast<Vertex>(sub.parent_vertex.size());
    sub.parent_vertex.push_back(v);
  }
  std::vector<Edge> kept;
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    if (new_label[ed.u] == 0 || new_label[ed.v] == 0) {
      throw DomainError("edge " + std::to_string(e) +
                        " leaves the subgraph's vertex set");
    }
    kept.push_back({new_label[ed.u], new_label[ed.v]});
    sub.parent_edge.push_back(e);
  }
  sub.graph = Graph(static_cast<int>(vertices.size()), std::move(kept));
  return sub;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  auto in = indicator(g, vertices);
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in[g.edge(e).u] && in[g.edge(e).v]) edges.push_back(e);
  }
  return edge_subgraph(g, vertices, edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> new_label) {
  if (static_cast<int>(new_label.size()) != g.vertex_count() + 1) {
    throw DomainError("relabel: label table has the wrong size");
  }
  std::vector<char> used(g.vertex_count() + 1, 0);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    Vertex w = new_label[v];
    if (w < 1 || w > g.vertex_count() || used[w]) {
      throw DomainError("relabel: labels are not a permutation");
    }
    used[w] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.push_back({new_label[e.u], new_label[e.v]});
  return Graph(g.vertex_count(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) {
    edges.push_back({e.u + a.vertex_count(), e.v + a.vertex_count()});
  }
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Graph simplify(const Graph& g) {
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      edges.push_back(e);
    }
  }
  return Graph(g.vertex_count(), std::move(edges));
}

int permutation_sign(std::span<const Vertex> one_line) {
  // Parity of n minus the number of cycles.
  const int n = static_cast<int>(one_line.size()) - 1;
  std::vector<char> seen(n + 1, 0);
  int transpositions = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int length = 0;
    for (int j = i; !seen[j]; j = one_line[j]) {
      seen[j] = 1;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

}  // namespace pflab
