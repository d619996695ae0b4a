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

#include "pflab/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "pflab/errors.hpp"

namespace pflab {

Limits Limits::parse(std::string_view spec) { return parse(spec, Limits{}); }

Limits Limits::parse(std::string_view spec, Limits base) {
  Limits out = base;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{}
                                           : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("PFLAB_LIMITS: expected key=value, got '" +
                        std::string(item) + "'");
    }
    std::string_view key = item.substr(0, eq);
    std::string_view text = item.substr(eq + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                     value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
      throw DomainError("PFLAB_LIMITS: bad value for '" + std::string(key) +
                        "'");
    }
    if (key == "decompose") {
      out.decomposition_vertices = value;
    } else if (key == "iso") {
      out.isomorphism_vertices = value;
    } else if (key == "edges") {
      out.orientation_edges = value;
    } else if (key == "symbolic") {
      out.symbolic_dimension = value;
    } else {
      throw DomainError("PFLAB_LIMITS: unknown key '" + std::string(key) +
                        "'");
    }
  }
  return out;
}

Limits Limits::from_environment() {
  const char* env = std::getenv("PFLAB_LIMITS");
  if (env == nullptr) return Limits{};
  return parse(env);
}

}  // namespace pflab
