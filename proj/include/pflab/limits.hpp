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

#ifndef PFLAB_LIMITS_HPP_
#define PFLAB_LIMITS_HPP_

#include <string_view>

namespace pflab {

// Size limits for the exhaustive procedures. Overridable at runtime through
// the PFLAB_LIMITS environment variable, e.g.
//   PFLAB_LIMITS="decompose=16,iso=10,edges=28,symbolic=20"
struct Limits {
  int decomposition_vertices = 14;
  int isomorphism_vertices = 12;
  int orientation_edges = 24;
  int symbolic_dimension = 24;

  // Applies "key=value" pairs separated by commas. Throws DomainError on
  // unknown keys or malformed values.
  static Limits parse(std::string_view spec, Limits base);
  static Limits parse(std::string_view spec);
  static Limits from_environment();
};

}  // namespace pflab

#endif  // PFLAB_LIMITS_HPP_
