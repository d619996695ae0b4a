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

#ifndef PFLAB_CLI_HPP_
#define PFLAB_CLI_HPP_

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pflab/families.hpp"
#include "pflab/limits.hpp"
#include "pflab/pfaffian_number.hpp"
#include "pflab/serialize.hpp"

namespace pflab::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainFailure = 1,
  kResourceFailure = 2,
  kAssertionFailure = 3,
};

struct Report {
  Json json;
  int exit_code = kOk;
};

Report cmd_matchings(const Graph& g, bool list);
Report cmd_pfnum(const Graph& g, const SearchOptions& options);
Report cmd_symbolic_count(const Graph& g, const std::string& korientation_text,
                          const Limits& limits);
Report cmd_split(const Graph& g, const VertexSet& shore,
                 const std::string& korientation_text);
Report cmd_decompose(const Graph& g, std::uint64_t seed, const Limits& limits);
std::string cmd_generate(const FamilySpec& spec);

struct VerifyOptions {
  std::uint64_t seed = 1;
  int jobs = 1;
  // Per pfaffian-number search inside a suite; zero means unlimited.
  std::chrono::milliseconds time_budget{0};
  Limits limits;
};

// Suites: signs, cuts, khatri-rao, symbolic, families, conjecture-scan.
// Exit code 0 iff every check passes; conjecture-scan only reports.
Report cmd_verify(const std::string& suite, const VerifyOptions& options);

// Shore given as "1,2,3".
VertexSet parse_shore(const std::string& text);

// Full command line entry point; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pflab::cli

#endif  // PFLAB_CLI_HPP_
