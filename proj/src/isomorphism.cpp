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

#include "pflab/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pflab/errors.hpp"

namespace pflab {

namespace {

using AdjacencyTable = std::vector<std::vector<int>>;

AdjacencyTable adjacency(const Graph& g, EdgeComparison mode) {
  const int n = g.vertex_count();
  AdjacencyTable a(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    if (mode == EdgeComparison::kUnderlyingSimple) {
      a[e.u - 1][e.v - 1] = a[e.v - 1][e.u - 1] = 1;
    } else {
      ++a[e.u - 1][e.v - 1];
      ++a[e.v - 1][e.u - 1];
    }
  }
  return a;
}

// Colour refinement started from weighted degrees. Colours are ranks of
// sorted signatures, so they do not depend on the vertex numbering.
std::vector<int> refine(const AdjacencyTable& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> colour(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) colour[v] += a[v][w];
  }
  {
    std::vector<int> ranks = colour;
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    for (int& c : colour) {
      c = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), c) -
                           ranks.begin());
    }
  }
  for (;;) {
    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) {
      signature[v].push_back(colour[v]);
      std::vector<std::pair<int, int>> nbrs;
      for (int w = 0; w < n; ++w) {
        if (a[v][w] != 0) nbrs.emplace_back(colour[w], a[v][w]);
      }
      std::sort(nbrs.begin(), nbrs.end());
      for (auto [c, mult] : nbrs) {
        signature[v].push_back(c);
        signature[v].push_back(mult);
      }
    }
    std::vector<std::vector<int>> sorted = signature;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), signature[v]) -
          sorted.begin());
    }
    int before = *std::max_element(colour.begin(), colour.end());
    int after = *std::max_element(next.begin(), next.end());
    colour = std::move(next);
    if (after == before) return colour;
  }
}

class CanonicalSearch {
 public:
  CanonicalSearch(const AdjacencyTable& a, std::vector<int> colour)
      : a_(a), n_(static_cast<int>(a.size())), colour_(std::move(colour)) {
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    used_.assign(n_, 0);
  }

  std::vector<int> run() {
    order_.clear();
    code_.clear();
    search(0);
    std::vector<int> out;
    out.push_back(n_);
    out.insert(out.end(), slot_colour_.begin(), slot_colour_.end());
    out.insert(out.end(), best_.begin(), best_.end());
    return out;
  }

 private:
  // Prunes a branch as soon as its partial code exceeds the matching prefix
  // of the best complete code found so far.
  bool exceeds_best() const {
    return have_best_ &&
           std::lexicographical_compare(best_.begin(),
                                        best_.begin() + code_.size(),
                                        code_.begin(), code_.end());
  }

  void search(int position) {
    if (position == n_) {
      if (!have_best_ || code_ < best_) {
        best_ = code_;
        have_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != slot_colour_[position]) continue;
      std::size_t mark = code_.size();
      for (int j = 0; j < position; ++j) code_.push_back(a_[v][order_[j]]);
      if (!exceeds_best()) {
        used_[v] = 1;
        order_.push_back(v);
        search(position + 1);
        order_.pop_back();
        used_[v] = 0;
      }
      code_.resize(mark);
    }
  }

  const AdjacencyTable& a_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<char> used_;
  std::vector<int> order_;
  std::vector<int> code_;
  std::vector<int> best_;
  bool have_best_ = false;
};

}  // namespace

std::vector<int> canonical_form(const Graph& g, EdgeComparison mode,
                                const Limits& limits) {
  if (g.vertex_count() > limits.isomorphism_vertices) {
    throw ResourceError("isomorphism test limited to " +
                        std::to_string(limits.isomorphism_vertices) +
                        " vertices, graph has " +
                        std::to_string(g.vertex_count()));
  }
  if (g.vertex_count() == 0) return {0};
  AdjacencyTable a = adjacency(g, mode);
  CanonicalSearch search(a, refine(a));
  return search.run();
}

bool is_isomorphic(const Graph& a, const Graph& b, EdgeComparison mode,
                   const Limits& limits) {
  if (a.vertex_count() > limits.isomorphism_vertices ||
      b.vertex_count() > limits.isomorphism_vertices) {
    throw ResourceError("isomorphism test limited to " +
                        std::to_string(limits.isomorphism_vertices) +
                        " vertices");
  }
  if (a.vertex_count() != b.vertex_count()) return false;
  if (mode == EdgeComparison::kMultiplicity &&
      a.edge_count() != b.edge_count()) {
    return false;
  }
  return canonical_form(a, mode, limits) == canonical_form(b, mode, limits);
}

}  // namespace pflab
