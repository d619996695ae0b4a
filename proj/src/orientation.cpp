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

#include "pflab/orientation.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include <boost/dynamic_bitset.hpp>

#include "pflab/errors.hpp"
#include "pflab/matchings.hpp"

namespace pflab {

Orientation::Orientation(GraphPtr graph)
    : graph_(std::move(graph)), reversed_(graph_->edge_count(), false) {}

Orientation::Orientation(GraphPtr graph, std::vector<bool> reversed)
    : graph_(std::move(graph)), reversed_(std::move(reversed)) {
  if (static_cast<int>(reversed_.size()) != graph_->edge_count()) {
    throw DomainError("orientation has " + std::to_string(reversed_.size()) +
                      " bits for " + std::to_string(graph_->edge_count()) +
                      " edges");
  }
}

std::string Orientation::to_bitstring() const {
  std::string out;
  out.reserve(reversed_.size());
  for (bool b : reversed_) out.push_back(b ? '1' : '0');
  return out;
}

Orientation Orientation::from_bitstring(GraphPtr graph, std::string_view bits) {
  std::vector<bool> reversed;
  reversed.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw DomainError("orientation bit string may contain only 0 and 1");
    }
    reversed.push_back(c == '1');
  }
  return Orientation(std::move(graph), std::move(reversed));
}

KOrientation::KOrientation(std::vector<Orientation> orientations)
    : orientations_(std::move(orientations)) {
  if (orientations_.empty()) throw DomainError("k-orientation needs k >= 1");
  for (const Orientation& d : orientations_) {
    if (d.graph_ptr() != orientations_.front().graph_ptr() &&
        d.graph() != orientations_.front().graph()) {
      throw DomainError("k-orientation entries orient different graphs");
    }
  }
}

namespace {

Sign sign_in_listing(const Orientation& d, const std::vector<EdgeId>& listing) {
  std::vector<Vertex> one_line(d.graph().vertex_count() + 1, 0);
  std::size_t pos = 1;
  for (EdgeId e : listing) {
    one_line[pos++] = d.tail(e);
    one_line[pos++] = d.head(e);
  }
  return permutation_sign(one_line);
}

}  // namespace

Sign matching_sign(const Orientation& d, const Matching& m) {
  if (!is_perfect_matching(d.graph(), m)) {
    throw DomainError("matching_sign: matching is not perfect");
  }
  Sign s = sign_in_listing(d, m.edge_ids);
#ifndef NDEBUG
  std::vector<EdgeId> reversed_listing(m.edge_ids.rbegin(), m.edge_ids.rend());
  assert(sign_in_listing(d, reversed_listing) == s);
#endif
  return s;
}

std::vector<Sign> matching_signs(const KOrientation& kd, const Matching& m) {
  std::vector<Sign> out;
  out.reserve(kd.size());
  for (const Orientation& d : kd.orientations()) out.push_back(matching_sign(d, m));
  return out;
}

Sign cycle_sign(const Orientation& d, const Cycle& q) {
  const std::size_t len = q.length();
  if (len == 0 || q.vertices.size() != len) {
    throw DomainError("cycle_sign: malformed cycle");
  }
  if (len % 2 != 0) throw DomainError("cycle_sign: cycle has odd length");
  std::size_t forward = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const EdgeId e = q.edge_ids[i];
    const Vertex from = q.vertices[i];
    const Vertex to = q.vertices[(i + 1) % len];
    const Edge& ed = d.graph().edge(e);
    if (!((ed.u == from && ed.v == to) || (ed.u == to && ed.v == from))) {
      throw DomainError("cycle_sign: edge " + std::to_string(e) +
                        " does not join consecutive cycle vertices");
    }
    if (d.tail(e) == from) ++forward;
  }
  return forward % 2 == 1 ? 1 : -1;
}

std::vector<Sign> cycle_signs(const KOrientation& kd, const Cycle& q) {
  std::vector<Sign> out;
  for (const Orientation& d : kd.orientations()) out.push_back(cycle_sign(d, q));
  return out;
}

std::vector<Cycle> alternating_cycles(const Graph& g, const Matching& m,
                                      const Matching& n) {
  const int nv = g.vertex_count();
  std::vector<EdgeId> m_edge(nv + 1, -1), n_edge(nv + 1, -1);
  for (EdgeId e : symmetric_difference(m, n)) {
    auto& slot = m.contains(e) ? m_edge : n_edge;
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      if (slot[x] != -1) throw DomainError("alternating_cycles: not a matching");
      slot[x] = e;
    }
  }
  std::vector<Cycle> cycles;
  std::vector<char> seen(nv + 1, 0);
  for (Vertex start = 1; start <= nv; ++start) {
    if (seen[start] || m_edge[start] == -1) continue;
    if (n_edge[start] == -1) {
      throw DomainError("alternating_cycles: matchings are not both perfect");
    }
    Cycle q;
    Vertex x = start;
    bool use_m = true;
    do {
      seen[x] = 1;
      EdgeId e = use_m ? m_edge[x] : n_edge[x];
      if (e == -1) {
        throw DomainError("alternating_cycles: matchings are not both perfect");
      }
      q.vertices.push_back(x);
      q.edge_ids.push_back(e);
      x = g.other_end(e, x);
      use_m = !use_m;
    } while (x != start);
    cycles.push_back(std::move(q));
  }
  return cycles;
}

Orientation reverse(const Orientation& d, const std::vector<EdgeId>& edge_ids) {
  std::vector<bool> bits = d.bits();
  for (EdgeId e : edge_ids) {
    if (e < 0 || e >= d.graph().edge_count()) {
      throw DomainError("reverse: edge id out of range");
    }
    bits[e] = !bits[e];
  }
  return Orientation(d.graph_ptr(), std::move(bits));
}

std::vector<EdgeId> orientation_difference(const Orientation& a,
                                           const Orientation& b) {
  if (a.graph().edge_count() != b.graph().edge_count()) {
    throw DomainError("orientations of different graphs");
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < a.graph().edge_count(); ++e) {
    if (a.reversed(e) != b.reversed(e)) out.push_back(e);
  }
  return out;
}

bool in_cut_space(const Graph& g, const std::vector<EdgeId>& edge_ids) {
  using Bits = boost::dynamic_bitset<>;
  const std::size_t m = static_cast<std::size_t>(g.edge_count());
  // Basis rows kept with distinct leading bits.
  std::vector<Bits> basis;
  std::vector<std::size_t> lead;
  auto reduce = [&](Bits x) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (x.test(lead[i])) x ^= basis[i];
    }
    return x;
  };
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    Bits star(m);
    for (EdgeId e : g.incident(v)) star.flip(static_cast<std::size_t>(e));
    Bits r = reduce(star);
    if (r.none()) continue;
    std::size_t p = r.find_first();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].test(p)) basis[i] ^= r;
    }
    basis.push_back(r);
    lead.push_back(p);
  }
  Bits target(m);
  for (EdgeId e : edge_ids) target.flip(static_cast<std::size_t>(e));
  return reduce(target).none();
}

bool are_similar(const Orientation& a, const Orientation& b) {
  return in_cut_space(a.graph(), orientation_difference(a, b));
}

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 1) {}

void SignMatrix::set(std::size_t r, std::size_t c, Sign s) {
  if (s != 1 && s != -1) throw DomainError("sign matrix entries must be ±1");
  data_[r * cols_ + c] = static_cast<std::int8_t>(s);
}

std::vector<Sign> SignMatrix::row(std::size_t r) const {
  return std::vector<Sign>(data_.begin() + r * cols_,
                           data_.begin() + (r + 1) * cols_);
}

std::vector<Sign> SignMatrix::column(std::size_t c) const {
  std::vector<Sign> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

RationalMatrix SignMatrix::to_rational() const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = at(r, c);
  }
  return m;
}

SignMatrix SignMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  SignMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(r, j, at(r, cols[j]));
  }
  return out;
}

SignMatrix signature_matrix(const KOrientation& kd,
                            const std::vector<Matching>& matchings) {
  if (matchings.empty()) {
    throw DomainError("signature matrix of a graph without perfect matchings");
  }
  SignMatrix s(matchings.size(), kd.size());
  for (std::size_t r = 0; r < matchings.size(); ++r) {
    for (std::size_t i = 0; i < kd.size(); ++i) {
      s.set(r, i, matching_sign(kd[i], matchings[r]));
    }
  }
  return s;
}

SignMatrix signature_matrix(const KOrientation& kd) {
  return signature_matrix(kd, enumerate_perfect_matchings(kd.graph()));
}

std::optional<Solution> solve_pfaffian_system(const SignMatrix& s) {
  auto x = solve(s.to_rational(), RationalVector(s.rows(), Rational(1)));
  if (!x) return std::nullopt;
  return Solution{std::move(*x)};
}

bool is_pfaffian(const KOrientation& kd) {
  return solve_pfaffian_system(signature_matrix(kd)).has_value();
}

bool is_pfaffian_orientation(const Orientation& d) {
  auto matchings = enumerate_perfect_matchings(d.graph());
  if (matchings.empty()) {
    throw DomainError("is_pfaffian_orientation: graph is not matchable");
  }
  const Sign first = matching_sign(d, matchings.front());
  return std::all_of(matchings.begin(), matchings.end(),
                     [&](const Matching& m) { return matching_sign(d, m) == first; });
}

std::size_t rank_of_signature(const SignMatrix& s) { return rank(s.to_rational()); }

namespace {

struct SpanningForest {
  std::vector<char> is_tree_edge;
  std::vector<EdgeId> non_tree;           // ascending
  std::vector<EdgeId> parent_edge;        // per vertex, -1 at roots
  std::vector<Vertex> bfs_order;          // roots first in their component
};

SpanningForest spanning_forest(const Graph& g) {
  SpanningForest f;
  f.is_tree_edge.assign(g.edge_count(), 0);
  f.parent_edge.assign(g.vertex_count() + 1, -1);
  std::vector<char> seen(g.vertex_count() + 1, 0);
  for (Vertex root = 1; root <= g.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      f.bfs_order.push_back(x);
      for (EdgeId e : g.incident(x)) {
        Vertex y = g.other_end(e, x);
        if (seen[y]) continue;
        seen[y] = 1;
        f.is_tree_edge[e] = 1;
        f.parent_edge[y] = e;
        queue.push(y);
      }
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!f.is_tree_edge[e]) f.non_tree.push_back(e);
  }
  return f;
}

}  // namespace

std::vector<Orientation> orientation_class_representatives(const GraphPtr& g,
                                                           const Limits& limits) {
  if (g->edge_count() > limits.orientation_edges) {
    throw ResourceError("orientation classes limited to graphs with " +
                        std::to_string(limits.orientation_edges) +
                        " edges, graph has " + std::to_string(g->edge_count()));
  }
  SpanningForest f = spanning_forest(*g);
  const std::size_t free_edges = f.non_tree.size();
  if (free_edges > 30) throw ResourceError("too many orientation classes");
  std::vector<Orientation> out;
  out.reserve(std::size_t{1} << free_edges);
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << free_edges); ++r) {
    std::vector<bool> bits(g->edge_count(), false);
    for (std::size_t j = 0; j < free_edges; ++j) {
      if (r >> j & 1u) bits[f.non_tree[j]] = true;
    }
    out.emplace_back(g, std::move(bits));
  }
  return out;
}

std::size_t class_index(const Orientation& d) {
  const Graph& g = d.graph();
  SpanningForest f = spanning_forest(g);
  // side[v] = 1 for the vertices of the cut X with (D rev ∂(X)) agreeing with
  // the reference direction on every tree edge.
  std::vector<char> side(g.vertex_count() + 1, 0);
  for (Vertex x : f.bfs_order) {
    EdgeId e = f.parent_edge[x];
    if (e == -1) continue;
    Vertex parent = g.other_end(e, x);
    side[x] = static_cast<char>(side[parent] ^ (d.reversed(e) ? 1 : 0));
  }
  std::size_t index = 0;
  for (std::size_t j = 0; j < f.non_tree.size(); ++j) {
    EdgeId e = f.non_tree[j];
    bool crosses = side[g.edge(e).u] != side[g.edge(e).v];
    if (d.reversed(e) != crosses) index |= std::size_t{1} << j;
  }
  return index;
}

Restriction restrict_korientation(const KOrientation& kd,
                                  const VertexSet& vertices) {
  const Graph& g = kd.graph();
  VertexSet inner_set = make_vertex_set(vertices);
  if (!is_conformal(g, inner_set)) {
    throw DomainError("restrict_korientation: vertex set is not conformal");
  }
  VertexSet outer_set = complement(g, inner_set);
  Subgraph inner = induced_subgraph(g, inner_set);
  Subgraph outer = induced_subgraph(g, outer_set);
  auto restrict_to = [&](const Subgraph& sub) {
    GraphPtr h = share(sub.graph);
    std::vector<Orientation> parts;
    for (const Orientation& d : kd.orientations()) {
      std::vector<bool> bits(sub.parent_edge.size());
      for (std::size_t i = 0; i < bits.size(); ++i) {
        bits[i] = d.reversed(sub.parent_edge[i]);
      }
      parts.emplace_back(h, std::move(bits));
    }
    return KOrientation(std::move(parts));
  };
  std::vector<Vertex> one_line{0};
  one_line.insert(one_line.end(), inner_set.begin(), inner_set.end());
  one_line.insert(one_line.end(), outer_set.begin(), outer_set.end());
  Restriction out{inner, outer, restrict_to(inner), restrict_to(outer),
                  permutation_sign(one_line)};
  return out;
}

ContractedKOrientation contract_korientation(const KOrientation& kd,
                                             const VertexSet& shore) {
  Contraction c = contract_shore(kd.graph(), shore);
  GraphPtr h = share(c.graph);
  std::vector<Orientation> parts;
  for (const Orientation& d : kd.orientations()) {
    std::vector<bool> bits(h->edge_count(), false);
    for (EdgeId e = 0; e < kd.graph().edge_count(); ++e) {
      if (c.edge_map[e] != -1) bits[c.edge_map[e]] = d.reversed(e);
    }
    parts.emplace_back(h, std::move(bits));
  }
  return ContractedKOrientation{std::move(c), KOrientation(std::move(parts))};
}

}  // namespace pflab
