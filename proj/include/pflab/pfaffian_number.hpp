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

#ifndef PFLAB_PFAFFIAN_NUMBER_HPP_
#define PFLAB_PFAFFIAN_NUMBER_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pflab/graph.hpp"
#include "pflab/limits.hpp"
#include "pflab/orientation.hpp"

namespace pflab {

enum class SearchStatus { kExact, kLowerBoundOnly };

struct SearchOptions {
  int k_budget = 8;
  // Zero means unlimited.
  std::chrono::milliseconds time_budget{0};
  int jobs = 1;
  Limits limits;
};

struct PfaffianNumberResult {
  // The pfaffian number when exact; otherwise a proven lower bound.
  int k = 0;
  SearchStatus status = SearchStatus::kExact;
  std::optional<KOrientation> witness;
  std::optional<Solution> solution;
  // Indices into orientation_class_representatives() of the witness columns.
  std::vector<std::size_t> witness_classes;
  std::size_t class_count = 0;
  std::size_t distinct_sign_vectors = 0;
  std::size_t matching_count = 0;
  std::string budget_note;
};

// Smallest k such that some k similarity-class representatives have a
// signature matrix whose column span contains the all-ones vector.
// Exhaustive over k-subsets of distinct (up to negation) sign vectors, in
// increasing k and lexicographic class order; the first witness found is
// returned. Subsets are distributed over `jobs` threads by their first
// element; the answer does not depend on `jobs`.
PfaffianNumberResult pfaffian_number(const Graph& g,
                                     const SearchOptions& options = {});

}  // namespace pflab

#endif  // PFLAB_PFAFFIAN_NUMBER_HPP_
