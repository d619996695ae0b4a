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

#ifndef PFLAB_SERIALIZE_HPP_
#define PFLAB_SERIALIZE_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pflab/linalg.hpp"
#include "pflab/orientation.hpp"
#include "pflab/ring.hpp"
#include "pflab/symbolic.hpp"

namespace pflab {

// Keys keep insertion order so reports are stable byte for byte.
using Json = nlohmann::ordered_json;

// Character i is bit i.
std::string to_bitstring(std::uint64_t bits, int width);
std::uint64_t from_bitstring(std::string_view text);

Json to_json(const Graph& g);
Json to_json(const Matching& m);
Json to_json(const Orientation& d);
Json to_json(const KOrientation& kd);
Json to_json(const RationalVector& v);
Json to_json(const RationalMatrix& a);
Json to_json(const SignMatrix& s);
Json to_json(const SymbolicLabeling& l);
Json to_json(const RingPoly& p);
Json to_json(const BigInt& x);

// Accepts a JSON array of bitstrings or an object with an "orientations"
// array. Throws DomainError on malformed input.
KOrientation parse_korientation(const GraphPtr& g, std::string_view text);
// Accepts {"d": d, "tau": {"edge id": bitstring}}.
SymbolicLabeling parse_labeling(const Graph& g, const Json& j);

}  // namespace pflab

#endif  // PFLAB_SERIALIZE_HPP_
