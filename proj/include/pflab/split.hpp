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

#ifndef PFLAB_SPLIT_HPP_
#define PFLAB_SPLIT_HPP_

#include <map>
#include <vector>

#include "pflab/graph.hpp"
#include "pflab/orientation.hpp"

namespace pflab {

// Even-length path alternating with the anchor matching, from the anchor
// edge's end on the same shore to a cut-edge end `to`.
struct AlternatingPath {
  Vertex from = 0;
  Vertex to = 0;
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edge_ids;
};

struct SplitResult {
  KOrientation result;
  // S_i per orientation: result[i] = input[i] rev ∂(S_i).
  std::vector<VertexSet> reversal_shores;
  // Keyed by the cut-edge ends on both shores.
  std::map<Vertex, AlternatingPath> paths;
  EdgeId anchor_edge = -1;
  Vertex anchor_inner = 0;  // end of the anchor edge in the shore
  Vertex anchor_outer = 0;  // end of the anchor edge outside the shore
  Matching anchor_matching;
  // Solutions of the k-orientations induced on G/complement(shore) and
  // G/shore; both are verified before returning.
  Solution shore_side_solution;
  Solution far_side_solution;
};

// Given a separating cut and a pfaffian k-orientation, reverses a cut per
// orientation so that both cut contractions of the result are pfaffian.
// Throws DomainError if the cut is not separating or kd is not pfaffian, and
// VerificationError if an internal check of the construction fails.
SplitResult split_orientation_at_cut(const Graph& g, const Cut& c,
                                     const KOrientation& kd);

// Number of arcs traversed tail to head along a path.
std::size_t forward_arcs(const Orientation& d, const AlternatingPath& p);

}  // namespace pflab

#endif  // PFLAB_SPLIT_HPP_
