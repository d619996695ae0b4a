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

#include "pflab/matchings.hpp"

#include <algorithm>
#include <iterator>

#include "pflab/errors.hpp"

namespace pflab {

namespace {

// Backtracking on the lowest-numbered uncovered vertex.
class MatchingWalker {
 public:
  MatchingWalker(const Graph& g, const std::vector<char>& alive,
                 const std::function<bool(const std::vector<EdgeId>&)>& visit)
      : g_(g), covered_(g.vertex_count() + 1, 1), visit_(visit) {
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
      if (alive[v]) {
        covered_[v] = 0;
        ++remaining_;
      }
    }
  }

  bool run() {
    if (remaining_ % 2 != 0) return true;
    return step(1);
  }

 private:
  bool step(Vertex from) {
    if (remaining_ == 0) return visit_(chosen_);
    Vertex v = from;
    while (covered_[v]) ++v;
    covered_[v] = 1;
    --remaining_;
    for (EdgeId e : g_.incident(v)) {
      Vertex w = g_.other_end(e, v);
      if (covered_[w]) continue;
      covered_[w] = 1;
      --remaining_;
      chosen_.push_back(e);
      bool go_on = step(v + 1);
      chosen_.pop_back();
      covered_[w] = 0;
      ++remaining_;
      if (!go_on) {
        covered_[v] = 0;
        ++remaining_;
        return false;
      }
    }
    covered_[v] = 0;
    ++remaining_;
    return true;
  }

  const Graph& g_;
  std::vector<char> covered_;
  const std::function<bool(const std::vector<EdgeId>&)>& visit_;
  std::vector<EdgeId> chosen_;
  int remaining_ = 0;
};

}  // namespace

bool for_each_perfect_matching(
    const Graph& g, const std::vector<char>& alive,
    const std::function<bool(const std::vector<EdgeId>&)>& visit) {
  MatchingWalker walker(g, alive, visit);
  return walker.run();
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g) {
  if (g.vertex_count() % 2 != 0) {
    throw DomainError("perfect matchings need an even vertex count, got " +
                      std::to_string(g.vertex_count()));
  }
  std::vector<Matching> out;
  std::vector<char> alive(g.vertex_count() + 1, 1);
  for_each_perfect_matching(g, alive, [&](const std::vector<EdgeId>& ids) {
    out.emplace_back(ids);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_perfect_matchings(const Graph& g) {
  if (g.vertex_count() % 2 != 0) return 0;
  std::uint64_t count = 0;
  std::vector<char> alive(g.vertex_count() + 1, 1);
  for_each_perfect_matching(g, alive, [&](const std::vector<EdgeId>&) {
    ++count;
    return true;
  });
  return count;
}

bool is_matchable_within(const Graph& g, const std::vector<char>& alive) {
  bool found = false;
  for_each_perfect_matching(g, alive, [&](const std::vector<EdgeId>&) {
    found = true;
    return false;
  });
  return found;
}

bool is_matchable(const Graph& g) {
  return is_matchable_within(g, std::vector<char>(g.vertex_count() + 1, 1));
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
  std::vector<char> hit(g.vertex_count() + 1, 0);
  for (EdgeId e : m.edge_ids) {
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (hit[ed.u] || hit[ed.v]) return false;
    hit[ed.u] = hit[ed.v] = 1;
  }
  return 2 * static_cast<int>(m.size()) == g.vertex_count();
}

std::vector<char> matchable_edges(const Graph& g) {
  std::vector<char> out(g.edge_count(), 0);
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<char> alive(g.vertex_count() + 1, 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (out[e]) continue;
    const Edge& ed = g.edge(e);
    alive[ed.u] = alive[ed.v] = 0;
    for_each_perfect_matching(g, alive, [&](const std::vector<EdgeId>& ids) {
      out[e] = 1;
      for (EdgeId f : ids) out[f] = 1;
      return false;
    });
    alive[ed.u] = alive[ed.v] = 1;
  }
  return out;
}

bool is_matching_covered(const Graph& g) {
  if (g.edge_count() == 0 || !g.is_connected()) return false;
  if (g.vertex_count() % 2 != 0) return false;
  auto flags = matchable_edges(g);
  return std::all_of(flags.begin(), flags.end(), [](char c) { return c != 0; });
}

bool is_conformal(const Graph& g, const VertexSet& vertices) {
  auto in = indicator(g, vertices);
  std::vector<char> out(in.size(), 0);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) out[v] = !in[v];
  return is_matchable_within(g, in) && is_matchable_within(g, out);
}

std::vector<EdgeId> symmetric_difference(const Matching& a, const Matching& b) {
  std::vector<EdgeId> out;
  std::set_symmetric_difference(a.edge_ids.begin(), a.edge_ids.end(),
                                b.edge_ids.begin(), b.edge_ids.end(),
                                std::back_inserter(out));
  return out;
}

}  // namespace pflab
