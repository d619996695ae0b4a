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

#include "pflab/split.hpp"

#include <algorithm>

#include "pflab/cuts.hpp"
#include "pflab/errors.hpp"
#include "pflab/matchings.hpp"

namespace pflab {

std::size_t forward_arcs(const Orientation& d, const AlternatingPath& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.edge_ids.size(); ++i) {
    if (d.tail(p.edge_ids[i]) == p.vertices[i]) ++count;
  }
  return count;
}

namespace {

std::vector<EdgeId> mates_of(const Graph& g, const Matching& m) {
  std::vector<EdgeId> at(g.vertex_count() + 1, -1);
  for (EdgeId e : m.edge_ids) at[g.edge(e).u] = at[g.edge(e).v] = e;
  return at;
}

const Matching& first_meeting_once(const std::vector<Matching>& matchings,
                                   const Cut& c, EdgeId f) {
  for (const Matching& m : matchings) {
    int hits = 0;
    bool has_f = false;
    for (EdgeId e : c.edge_ids) {
      if (m.contains(e)) {
        ++hits;
        has_f = has_f || e == f;
      }
    }
    if (hits == 1 && has_f) return m;
  }
  throw VerificationError("separating cut without a perfect matching meeting it "
                          "only in edge " + std::to_string(f));
}

// Walks the (M, M_f)-alternating cycle through the anchor edge from `root`
// until reaching `target`, staying on root's shore.
AlternatingPath walk_to(const Graph& g, const std::vector<char>& side, Vertex root,
                        Vertex target, const std::vector<EdgeId>& anchor_at,
                        const std::vector<EdgeId>& other_at) {
  AlternatingPath p;
  p.from = root;
  p.to = target;
  p.vertices.push_back(root);
  Vertex x = root;
  auto step = [&](EdgeId e) {
    if (e == -1 || anchor_at[x] == other_at[x]) {
      throw VerificationError("alternating walk left the symmetric difference");
    }
    Vertex y = g.other_end(e, x);
    if (side[y] != side[root]) {
      throw VerificationError("alternating walk crossed the cut");
    }
    p.edge_ids.push_back(e);
    p.vertices.push_back(y);
    x = y;
  };
  while (x != target) {
    if (static_cast<int>(p.edge_ids.size()) > g.vertex_count()) {
      throw VerificationError("alternating walk did not reach its target");
    }
    step(other_at[x]);
    step(anchor_at[x]);
  }
  return p;
}

std::vector<EdgeId> boundary(const Graph& g, const VertexSet& s) {
  if (s.empty()) return {};
  return make_cut(g, s).edge_ids;
}

}  // namespace

SplitResult split_orientation_at_cut(const Graph& g, const Cut& c,
                                     const KOrientation& kd) {
  if (kd.graph() != g) {
    throw DomainError("split: k-orientation does not orient the given graph");
  }
  if (!is_separating(g, c)) throw DomainError("cut not separating");
  if (!solve_pfaffian_system(signature_matrix(kd))) {
    throw DomainError("split: k-orientation is not pfaffian");
  }
  const std::vector<char> in_shore = indicator(g, c.shore);
  const auto matchings = enumerate_perfect_matchings(g);

  const EdgeId e = *std::min_element(c.edge_ids.begin(), c.edge_ids.end());
  const Vertex u = in_shore[g.edge(e).u] ? g.edge(e).u : g.edge(e).v;
  const Vertex v = g.other_end(e, u);
  const Matching& anchor = first_meeting_once(matchings, c, e);
  const auto anchor_at = mates_of(g, anchor);

  VertexSet ends;
  for (EdgeId f : c.edge_ids) {
    ends.push_back(g.edge(f).u);
    ends.push_back(g.edge(f).v);
  }
  ends = make_vertex_set(std::move(ends));

  std::map<Vertex, AlternatingPath> paths;
  for (Vertex w : ends) {
    const Vertex root = in_shore[w] ? u : v;
    if (w == root) {
      paths[w] = AlternatingPath{root, root, {root}, {}};
      continue;
    }
    EdgeId f = -1;
    for (EdgeId candidate : c.edge_ids) {
      if (candidate != e && (g.edge(candidate).u == w || g.edge(candidate).v == w)) {
        f = candidate;
        break;
      }
    }
    const Matching& through_f = first_meeting_once(matchings, c, f);
    paths[w] = walk_to(g, in_shore, root, w, anchor_at, mates_of(g, through_f));
  }
  for (const auto& [w, p] : paths) {
    if (p.edge_ids.size() % 2 != 0) {
      throw VerificationError("alternating path has odd length");
    }
    for (std::size_t i = 1; i < p.edge_ids.size(); i += 2) {
      if (!anchor.contains(p.edge_ids[i])) {
        throw VerificationError("path does not alternate with the anchor matching");
      }
    }
  }

  std::vector<Orientation> adjusted;
  std::vector<VertexSet> shores;
  for (const Orientation& d0 : kd.orientations()) {
    VertexSet s;
    for (const auto& [w, p] : paths) {
      if (forward_arcs(d0, p) % 2 == 1) s.push_back(w);
    }
    adjusted.push_back(reverse(d0, boundary(g, s)));
    shores.push_back(std::move(s));
  }
  KOrientation result(std::move(adjusted));

  for (std::size_t i = 0; i < result.size(); ++i) {
    for (const auto& [w, p] : paths) {
      if (forward_arcs(result[i], p) % 2 != 0) {
        throw VerificationError("path P(" + std::to_string(w) +
                                ") is oddly oriented after the reversal");
      }
    }
  }

  auto solve_side = [&](const VertexSet& contracted) {
    ContractedKOrientation side = contract_korientation(result, contracted);
    auto sol = solve_pfaffian_system(signature_matrix(side.orientation));
    if (!sol) throw VerificationError("cut contraction is not pfaffian");
    return *sol;
  };
  SplitResult out{result,
                  std::move(shores),
                  std::move(paths),
                  e,
                  u,
                  v,
                  anchor,
                  solve_side(complement(g, c.shore)),
                  solve_side(c.shore)};
  return out;
}

}  // namespace pflab
