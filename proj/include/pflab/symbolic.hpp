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

#ifndef PFLAB_SYMBOLIC_HPP_
#define PFLAB_SYMBOLIC_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pflab/limits.hpp"
#include "pflab/orientation.hpp"
#include "pflab/ring.hpp"

namespace pflab {

// tau[e] is the GF(2)^d label of edge e; bit i is coordinate i + 1.
struct SymbolicLabeling {
  int d = 0;
  std::vector<std::uint64_t> tau;

  // Throws DomainError unless d <= 64, there is one label per edge of g and
  // no label uses a coordinate beyond d.
  void validate(const Graph& g) const;
  friend bool operator==(const SymbolicLabeling&, const SymbolicLabeling&) = default;
};

SymbolicLabeling zero_labeling(const Graph& g, int d);
// Edge e gets the e-th standard basis vector; d = m (at most 64).
SymbolicLabeling standard_basis_labeling(const Graph& g);

std::uint64_t tau_of_matching(const SymbolicLabeling& l, const Matching& m);

// Two perfect matchings with equal tau and different signs, if any.
std::optional<std::pair<Matching, Matching>> find_symbolic_obstruction(
    const Orientation& d0, const SymbolicLabeling& l);
bool is_pfaffian_symbolic(const Orientation& d0, const SymbolicLabeling& l);

using RingMatrix = std::vector<std::vector<RingPoly>>;

// Entry (i, j) is a_ij * t^tau(ij) over R_d, zero-based. Throws DomainError
// on parallel edges or when d exceeds the symbolic limit.
RingMatrix symbolic_matrix(const Orientation& d0, const SymbolicLabeling& l,
                           const Limits& limits = {});
// Throws DomainError if the matrix is not square or mixes dimensions.
RingPoly pfaffian_ring(const RingMatrix& m);

// Sum of absolute coefficients of Pf over R_d. Refuses (DomainError) a
// labeling that is not pfaffian for d0.
BigInt count_via_symbolic(const Orientation& d0, const SymbolicLabeling& l,
                          const Limits& limits = {});

struct SymbolicOrientation {
  Orientation orientation;
  SymbolicLabeling labeling;
};

// (D_k, tau) with tau(e)_i = 1 iff e is in D_i △ D_k, without any checks.
SymbolicOrientation symbolic_candidate(const KOrientation& kd);

// (D_k, tau) with tau(e)_i = 1 iff e is in D_i △ D_k, i < k. Throws
// DomainError if kd is not pfaffian and VerificationError if the result is
// not a pfaffian symbolic orientation.
SymbolicOrientation symbolic_from_korientation(const KOrientation& kd);

struct SpfBound {
  std::uint64_t matchings = 0;
  BigInt pf_star = 0;
  // Smallest t >= 0 with pf_star * 4^t >= matchings, i.e. the ceiling of
  // half of log2(matchings / pf_star). Empty when pf_star is 0.
  std::optional<int> bound;
};

SpfBound spf_lower_bound(const Graph& g, const Limits& limits = {});

}  // namespace pflab

#endif  // PFLAB_SYMBOLIC_HPP_
