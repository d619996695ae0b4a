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

#include "pflab/serialize.hpp"

#include <string>

#include "pflab/errors.hpp"

namespace pflab {

std::string to_bitstring(std::uint64_t bits, int width) {
  std::string s(width, '0');
  for (int i = 0; i < width; ++i) {
    if ((bits >> i) & 1) s[i] = '1';
  }
  return s;
}

std::uint64_t from_bitstring(std::string_view text) {
  if (text.size() > 64) throw DomainError("bitstring longer than 64");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw DomainError("bitstring has a character other than 0/1");
    }
  }
  return bits;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

Json to_json(const Matching& m) { return Json(m.edge_ids); }

Json to_json(const Orientation& d) { return d.to_bitstring(); }

Json to_json(const KOrientation& kd) {
  Json out = Json::array();
  for (const Orientation& d : kd.orientations()) out.push_back(d.to_bitstring());
  return out;
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(to_fraction_string(x));
  return out;
}

Json to_json(const RationalMatrix& a) {
  Json out = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) out.push_back(to_json(a.row(r)));
  return out;
}

Json to_json(const SignMatrix& s) {
  Json out = Json::array();
  for (std::size_t r = 0; r < s.rows(); ++r) out.push_back(s.row(r));
  return out;
}

Json to_json(const SymbolicLabeling& l) {
  Json tau = Json::object();
  for (std::size_t e = 0; e < l.tau.size(); ++e) {
    tau[std::to_string(e)] = to_bitstring(l.tau[e], l.d);
  }
  return Json{{"d", l.d}, {"tau", tau}};
}

Json to_json(const RingPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[to_bitstring(e, p.dimension())] = c;
  return out;
}

Json to_json(const BigInt& x) {
  if (x >= 0 && x <= BigInt(INT64_MAX)) return static_cast<std::int64_t>(x);
  return x.str();
}

KOrientation parse_korientation(const GraphPtr& g, std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("k-orientation is not valid JSON: ") + e.what());
  }
  if (j.is_object()) {
    if (!j.contains("orientations")) {
      throw DomainError("k-orientation object lacks an \"orientations\" key");
    }
    j = j["orientations"];
  }
  if (!j.is_array() || j.empty()) {
    throw DomainError("k-orientation must be a non-empty array of bitstrings");
  }
  std::vector<Orientation> ds;
  for (const Json& item : j) {
    if (!item.is_string()) throw DomainError("orientation must be a bitstring");
    ds.push_back(Orientation::from_bitstring(g, item.get<std::string>()));
  }
  return KOrientation(std::move(ds));
}

SymbolicLabeling parse_labeling(const Graph& g, const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("tau")) {
    throw DomainError("labeling must be {\"d\": ..., \"tau\": {...}}");
  }
  SymbolicLabeling l = zero_labeling(g, j["d"].get<int>());
  for (const auto& [key, value] : j["tau"].items()) {
    const int e = std::stoi(key);
    if (e < 0 || e >= g.edge_count()) throw DomainError("label for unknown edge");
    const std::string bits = value.get<std::string>();
    if (static_cast<int>(bits.size()) != l.d) {
      throw DomainError("label length differs from d");
    }
    l.tau[e] = from_bitstring(bits);
  }
  l.validate(g);
  return l;
}

}  // namespace pflab
