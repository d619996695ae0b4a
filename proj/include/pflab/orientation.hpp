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

#ifndef PFLAB_ORIENTATION_HPP_
#define PFLAB_ORIENTATION_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pflab/cuts.hpp"
#include "pflab/graph.hpp"
#include "pflab/limits.hpp"
#include "pflab/linalg.hpp"

namespace pflab {

using GraphPtr = std::shared_ptr<const Graph>;
using Sign = int;  // +1 or -1

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// One direction bit per edge id: false means u -> v as the edge is stored,
// true means v -> u.
class Orientation {
 public:
  explicit Orientation(GraphPtr graph);
  Orientation(GraphPtr graph, std::vector<bool> reversed);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const std::vector<bool>& bits() const { return reversed_; }
  bool reversed(EdgeId e) const { return reversed_[e]; }
  Vertex tail(EdgeId e) const {
    return reversed_[e] ? graph_->edge(e).v : graph_->edge(e).u;
  }
  Vertex head(EdgeId e) const {
    return reversed_[e] ? graph_->edge(e).u : graph_->edge(e).v;
  }

  std::string to_bitstring() const;
  static Orientation from_bitstring(GraphPtr graph, std::string_view bits);

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return (a.graph_ == b.graph_ || *a.graph_ == *b.graph_) &&
           a.reversed_ == b.reversed_;
  }

 private:
  GraphPtr graph_;
  std::vector<bool> reversed_;
};

// Non-empty vector of orientations of one graph.
class KOrientation {
 public:
  explicit KOrientation(std::vector<Orientation> orientations);

  std::size_t size() const { return orientations_.size(); }
  const Orientation& operator[](std::size_t i) const { return orientations_[i]; }
  const std::vector<Orientation>& orientations() const { return orientations_; }
  const Graph& graph() const { return orientations_.front().graph(); }
  const GraphPtr& graph_ptr() const { return orientations_.front().graph_ptr(); }

 private:
  std::vector<Orientation> orientations_;
};

// Sign of the permutation (u1 v1 ... uk vk), each matching edge listed
// tail first. Throws DomainError unless m is perfect.
Sign matching_sign(const Orientation& d, const Matching& m);
std::vector<Sign> matching_signs(const KOrientation& kd, const Matching& m);

// +1 when the number of forward arcs is odd, -1 otherwise. The cycle must be
// even.
Sign cycle_sign(const Orientation& d, const Cycle& q);
std::vector<Sign> cycle_signs(const KOrientation& kd, const Cycle& q);

// The (M, N)-alternating cycles, in order of their smallest vertex. Each one
// starts at its smallest vertex along that vertex's M-edge.
std::vector<Cycle> alternating_cycles(const Graph& g, const Matching& m,
                                      const Matching& n);

Orientation reverse(const Orientation& d, const std::vector<EdgeId>& edge_ids);
// D △ D': edges oriented differently, ascending.
std::vector<EdgeId> orientation_difference(const Orientation& a,
                                           const Orientation& b);
// Is the edge set equal to ∂(X) for some X (GF(2) elimination on stars)?
bool in_cut_space(const Graph& g, const std::vector<EdgeId>& edge_ids);
bool are_similar(const Orientation& a, const Orientation& b);

// ±1 matrix; row r is the canonical r-th perfect matching, column i the i-th
// orientation.
class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Sign at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Sign s);
  std::vector<Sign> row(std::size_t r) const;
  std::vector<Sign> column(std::size_t c) const;
  RationalMatrix to_rational() const;
  // Keeps the given columns, in the given order.
  SignMatrix select_columns(const std::vector<std::size_t>& cols) const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int8_t> data_;
};

SignMatrix signature_matrix(const KOrientation& kd);
SignMatrix signature_matrix(const KOrientation& kd,
                            const std::vector<Matching>& matchings);

struct Solution {
  RationalVector alpha;
};

// Exact solution of S alpha = 1, if any.
std::optional<Solution> solve_pfaffian_system(const SignMatrix& s);
bool is_pfaffian(const KOrientation& kd);
bool is_pfaffian_orientation(const Orientation& d);
std::size_t rank_of_signature(const SignMatrix& s);

// One orientation per similarity class: edges of a BFS spanning forest keep
// their stored direction; representative r reverses the j-th non-tree edge
// (ascending id) iff bit j of r is set.
std::vector<Orientation> orientation_class_representatives(
    const GraphPtr& g, const Limits& limits = {});
// The representative similar to d, and its index.
std::size_t class_index(const Orientation& d);

struct Restriction {
  Subgraph inner;
  Subgraph outer;
  KOrientation inner_orientation;
  KOrientation outer_orientation;
  // Sign of listing the inner vertices before the outer ones. For perfect
  // matchings M' and M'' of the parts:
  //   sign_inner(M') * sign_outer(M'') = block_sign * sign(M' ∪ M'').
  Sign block_sign;
};

// Restrictions to the subgraph induced by a conformal vertex set and to the
// rest. Throws DomainError if the set is not conformal.
Restriction restrict_korientation(const KOrientation& kd,
                                  const VertexSet& vertices);

struct ContractedKOrientation {
  Contraction contraction;
  KOrientation orientation;
};

// The k-orientation induced on G/shore; arcs keep their directions.
ContractedKOrientation contract_korientation(const KOrientation& kd,
                                             const VertexSet& shore);

}  // namespace pflab

#endif  // PFLAB_ORIENTATION_HPP_
