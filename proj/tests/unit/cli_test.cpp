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

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pflab/cli.hpp"
#include "pflab/families.hpp"

using namespace pflab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pflab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PFLAB_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("matchings report") {
  auto r = cli::cmd_matchings(complete_bipartite(3, 3), true);
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.json["result"]["count"] == 6);
  CHECK(r.json["result"]["list"].size() == 6);
  auto odd = cli::cmd_matchings(cycle(5), false);
  CHECK(odd.json["result"]["matchable"] == false);
}

TEST_CASE("pfnum report") {
  SearchOptions options;
  auto r = cli::cmd_pfnum(complete_bipartite(3, 3), options);
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.json["result"]["k"] == 4);
  CHECK(r.json["witness"]["verified"] == true);
  options.k_budget = 2;
  auto bounded = cli::cmd_pfnum(complete_bipartite(3, 3), options);
  CHECK(bounded.exit_code == cli::kResourceFailure);
  CHECK(bounded.json["result"]["status"] == "lower_bound_only");
}

TEST_CASE("reports are byte identical across runs and thread counts") {
  auto a = run_cli({"pfnum", data("k33.txt"), "--jobs", "1"});
  auto b = run_cli({"pfnum", data("k33.txt"), "--jobs", "4"});
  auto c = run_cli({"pfnum", data("k33.txt"), "--jobs", "4"});
  CHECK(a.code == 0);
  CHECK(b.out == c.out);
  CHECK(a.out == b.out);
  auto v1 = run_cli({"verify", "signs", "--seed", "3"});
  auto v2 = run_cli({"verify", "signs", "--seed", "3"});
  CHECK(v1.code == 0);
  CHECK(v1.out == v2.out);
}

TEST_CASE("timings only on request") {
  auto plain = run_cli({"matchings", data("c4.txt")});
  CHECK(plain.out.find("timings") == std::string::npos);
  auto timed = run_cli({"--timings", "matchings", data("c4.txt")});
  CHECK(timed.out.find("timings") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"matchings", data("missing.txt")}).code == cli::kDomainFailure);
  auto refused = run_cli({"split", data("c4.txt"), "--shore", "1,2", data("c4_pfaffian.json")});
  CHECK(refused.code == cli::kDomainFailure);
  CHECK_FALSE(refused.err.empty());
  CHECK(run_cli({"pfnum", data("k33.txt"), "--k-budget", "1"}).code == cli::kResourceFailure);
  CHECK(run_cli({"verify", "no-such-suite"}).code == cli::kDomainFailure);
  CHECK(run_cli({"bogus"}).code != 0);
}

TEST_CASE("symbolic-count") {
  auto ok = run_cli({"symbolic-count", data("k33.txt"), data("k33_witness.json")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"agrees_with_enumeration\": true") != std::string::npos);
  std::string one = R"(["000000000"])";
  auto r = cli::cmd_symbolic_count(complete_bipartite(3, 3), one, {});
  CHECK(r.exit_code == cli::kDomainFailure);
  CHECK(r.json["error"]["obstruction"].size() == 2);
}

TEST_CASE("decompose and generate") {
  auto d = cli::cmd_decompose(cycle(6), 0, {});
  CHECK(d.json["result"]["braces"] == 2);
  CHECK(d.json["result"]["bricks"] == 0);
  const std::string text = cli::cmd_generate({"cycle", {4}});
  CHECK(text.rfind("4 4\n", 0) == 0);
  auto gen = run_cli({"generate", "complete", "x"});
  CHECK(gen.code == cli::kDomainFailure);
}

TEST_CASE("text format") {
  auto r = run_cli({"--format", "text", "matchings", data("k33.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.find("count") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("parse_shore") {
  CHECK(cli::parse_shore("3,1,2") == VertexSet{1, 2, 3});
  CHECK_THROWS(cli::parse_shore("1,,2"));
  CHECK_THROWS(cli::parse_shore("a"));
}
