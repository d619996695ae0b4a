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

// Slow, direct reference implementations used to cross-check the library.
// Nothing here calls into the matching, sign or elimination code under test.

#ifndef PFLAB_TESTS_ORACLES_HPP_
#define PFLAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pflab/graph.hpp"
#include "pflab/linalg.hpp"

namespace oracle {

using pflab::BigInt;
using pflab::EdgeId;
using pflab::Graph;
using pflab::Vertex;

// Uniform draws independent of the standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }
  bool coin() { return below(2) == 1; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 gen_;
};

// Perfect matchings as sorted edge-id lists, by trying every subset of
// n/2 edges. Only for small edge counts.
inline std::vector<std::vector<EdgeId>> matchings_by_subsets(const Graph& g) {
  std::vector<std::vector<EdgeId>> out;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n % 2 != 0) return out;
  const int k = n / 2;
  std::vector<EdgeId> pick;
  std::vector<int> covered(n + 1, 0);
  auto rec = [&](auto&& self, EdgeId from) -> void {
    if (static_cast<int>(pick.size()) == k) {
      out.push_back(pick);
      return;
    }
    for (EdgeId e = from; e < m; ++e) {
      const auto& ed = g.edge(e);
      if (covered[ed.u] || covered[ed.v]) continue;
      covered[ed.u] = covered[ed.v] = 1;
      pick.push_back(e);
      self(self, e + 1);
      pick.pop_back();
      covered[ed.u] = covered[ed.v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

// Sign of the permutation (t1 h1 t2 h2 ...) by counting inversions.
inline int matching_sign(const Graph& g, const std::vector<bool>& reversed,
                         const std::vector<EdgeId>& m) {
  std::vector<Vertex> word;
  for (EdgeId e : m) {
    const auto& ed = g.edge(e);
    if (reversed[e]) {
      word.push_back(ed.v);
      word.push_back(ed.u);
    } else {
      word.push_back(ed.u);
      word.push_back(ed.v);
    }
  }
  int inversions = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) inversions += word[i] > word[j];
  }
  return inversions % 2 ? -1 : 1;
}

// ∂(X) for the shore given as a bitmask over vertices 1..n (bit v-1).
inline std::vector<EdgeId> cut_of_mask(const Graph& g, std::uint64_t mask) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const bool a = (mask >> (g.edge(e).u - 1)) & 1;
    const bool b = (mask >> (g.edge(e).v - 1)) & 1;
    if (a != b) out.push_back(e);
  }
  return out;
}

// Is the sorted edge set ∂(X) for some X? Tries every X.
inline bool is_cut_by_search(const Graph& g, const std::vector<EdgeId>& edges) {
  const int n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (cut_of_mask(g, mask) == edges) return true;
  }
  return false;
}

// Rank over Q of an integer matrix by fraction-free elimination.
inline std::size_t integer_rank(std::vector<std::vector<BigInt>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const BigInt f = a[r][c];
      const BigInt piv = a[rank][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = a[r][k] * piv - a[rank][k] * f;
    }
    ++rank;
  }
  return rank;
}

// Rank of a rational matrix: scale each row to integers first.
inline std::size_t rank_of(const pflab::RationalMatrix& a) {
  std::vector<std::vector<BigInt>> rows(a.rows(), std::vector<BigInt>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(a(r, c)));
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const pflab::Rational x = a(r, c) * l;
      rows[r][c] = boost::multiprecision::numerator(x);
    }
  }
  return integer_rank(rows);
}

// Is the all-ones vector in the column span of a +-1 matrix?
inline bool spans_ones(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<BigInt>> a, aug;
  for (const auto& r : rows) {
    a.emplace_back(r.begin(), r.end());
    aug.emplace_back(r.begin(), r.end());
    aug.back().push_back(1);
  }
  return integer_rank(a) == integer_rank(aug);
}

// Determinant by the Leibniz formula.
inline BigInt leibniz_det(const std::vector<std::vector<std::int64_t>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  BigInt det = 0;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
    }
    BigInt term = inv % 2 ? -1 : 1;
    for (int i = 0; i < n && term != 0; ++i) term *= a[i][p[i]];
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

// Isomorphism by trying all vertex bijections; `simple` compares underlying
// simple graphs.
inline bool isomorphic_by_search(const Graph& a, const Graph& b, bool simple) {
  if (a.vertex_count() != b.vertex_count()) return false;
  const int n = a.vertex_count();
  auto matrix = [&](const Graph& g) {
    std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, 0));
    for (const auto& e : g.edges()) {
      m[e.u][e.v] += 1;
      m[e.v][e.u] += 1;
    }
    if (simple) {
      for (auto& row : m) {
        for (int& x : row) x = x > 0;
      }
    }
    return m;
  };
  const auto ma = matrix(a);
  const auto mb = matrix(b);
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      for (int j = 1; j <= n && ok; ++j) ok = ma[i][j] == mb[p[i]][p[j]];
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

// Edges lying in some perfect matching, by the subset oracle.
inline bool matching_covered_by_subsets(const Graph& g) {
  if (g.edge_count() == 0 || !g.is_connected()) return false;
  std::set<EdgeId> used;
  for (const auto& m : matchings_by_subsets(g)) used.insert(m.begin(), m.end());
  return static_cast<int>(used.size()) == g.edge_count();
}

// Random simple graph on n vertices with edge probability num/den.
inline Graph random_graph(Rng& rng, int n, int num, int den) {
  std::vector<pflab::Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (static_cast<int>(rng.below(den)) < num) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace oracle

#endif  // PFLAB_TESTS_ORACLES_HPP_
