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

#ifndef PFLAB_CUTS_HPP_
#define PFLAB_CUTS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "pflab/graph.hpp"
#include "pflab/limits.hpp"

namespace pflab {

// Throws DomainError unless the shore is a non-empty proper vertex subset.
Cut make_cut(const Graph& g, const VertexSet& shore);

// Every perfect matching meets the cut in exactly one edge.
bool is_tight(const Graph& g, const Cut& c);

// Decides whether a cut of a matching covered graph is separating. Both the
// per-edge characterisation and the definition (both contractions matching
// covered) are evaluated; a disagreement raises VerificationError.
bool is_separating(const Graph& g, const Cut& c);

// Per-edge characterisation only: every edge lies in a perfect matching that
// meets the cut exactly once.
bool separating_by_edges(const Graph& g, const Cut& c);

struct Contraction {
  Graph graph;
  std::vector<Vertex> vertex_map;  // old vertex -> new vertex, index 0 unused
  std::vector<EdgeId> edge_map;    // old edge -> new edge, -1 for removed loops
  Vertex contracted = 0;           // always the last vertex of `graph`
};

// G/shore: the shore becomes one vertex, numbered last. Surviving vertices
// keep their relative order; edges keep their order and endpoint order;
// loops are dropped and parallel edges kept.
Contraction contract_shore(const Graph& g, const VertexSet& shore);

enum class PieceKind { kBrick, kBrace };

struct DecompositionPiece {
  Graph graph;
  PieceKind kind;
};

struct DecompositionResult {
  std::vector<DecompositionPiece> pieces;
};

// Shores (containing vertex 1) of every non-trivial tight cut.
std::vector<VertexSet> nontrivial_tight_shores(const Graph& g,
                                               const Limits& limits = {});

// Tight cut decomposition by exhaustive shore enumeration. The seed picks
// which tight cut to apply when several exist.
DecompositionResult tight_cut_decomposition(const Graph& g,
                                            std::uint64_t order_seed = 0,
                                            const Limits& limits = {});

// G/{u, v, w} for a degree-two vertex v with neighbours u and w.
Graph bicontract(const Graph& g, Vertex v);

// Repeated bicontraction until no degree-two vertex remains (or fewer than
// four vertices). Without a seed the lowest-numbered candidate goes first;
// with a seed the candidate is drawn at random.
Graph retract(const Graph& g,
              std::optional<std::uint64_t> order_seed = std::nullopt);

// Replaces edge e = uv by a path of `ear_length` edges through new vertices
// n+1, n+2, ... (in order from u). Edge e keeps its id as the first path
// edge; the others are appended.
Graph bisubdivide(const Graph& g, EdgeId e, int ear_length);

}  // namespace pflab

#endif  // PFLAB_CUTS_HPP_
