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

#ifndef PFLAB_SKEW_HPP_
#define PFLAB_SKEW_HPP_

#include <cstdint>
#include <vector>

#include "pflab/limits.hpp"
#include "pflab/linalg.hpp"
#include "pflab/orientation.hpp"

namespace pflab {

// Integer skew-symmetric matrix, zero-based indices.
class SkewMatrix {
 public:
  explicit SkewMatrix(int order = 0);
  // Throws DomainError unless rows is square, skew and zero on the diagonal.
  static SkewMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int order() const { return order_; }
  std::int64_t at(int i, int j) const { return data_[i * order_ + j]; }
  // Sets (i, j) to x and (j, i) to -x; i != j.
  void set(int i, int j, std::int64_t x);
  RationalMatrix to_rational() const;

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  int order_;
  std::vector<std::int64_t> data_;
};

// a_ij = 1 if ij is an arc, -1 if ji is an arc, 0 otherwise; vertex v is
// index v - 1. Throws DomainError on parallel edges.
SkewMatrix skew_adjacency(const Orientation& d);

// Exact pfaffian; 0 for odd order, 1 for order 0.
BigInt pfaffian_int(const SkewMatrix& a);

// max |Pf(A_D)| over all orientations D of a simple graph, computed over the
// similarity-class representatives. Throws DomainError on parallel edges and
// ResourceError above the edge limit.
BigInt pf_star(const Graph& g, const Limits& limits = {});

}  // namespace pflab

#endif  // PFLAB_SKEW_HPP_
