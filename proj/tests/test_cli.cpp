// Copyright 2026 The skt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "skt/cli.hpp"
#include "skt/core.hpp"
#include "skt/s_table.hpp"

using namespace skt;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::filesystem::path tmpdir() {
  const std::filesystem::path dir = SKT_TEST_TMPDIR;
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli s") {
  CHECK(run_cli({"s", "4"}).out == "n,s\n4,4\n");
  CHECK(run_cli({"s", "1", "--convention", "paper"}).out == "n,s\n1,1\n");
  CHECK(run_cli({"s", "1", "--convention", "formula"}).out == "n,s\n1,0\n");
  CHECK(run_cli({"s", "1"}).out == "n,s\n1,1\n");
  CHECK(run_cli({"s", "6"}).out == "n,s\n6,3\n");
  CHECK(run_cli({"s", "5000", "--kernel", "naive"}).out == run_cli({"s", "5000", "--kernel", "factor"}).out);

  for (auto args : std::vector<std::vector<std::string>>{
           {"s", "0"}, {"s", "abc"}, {"s"}, {"s", "4", "--kernel", "magic"}, {"s", "4", "--convention", "x"},
           {"s", "-3"}, {"s", "99999999999999999999"}, {"s", "10000000019", "--kernel", "naive"}}) {
    const Result r = run_cli(args);
    CHECK(r.code == 2);
    CHECK(lines(r.err).size() == 1);
  }
}

TEST_CASE("cli twins") {
  CHECK(run_cli({"twins", "100", "--verify"}).out == "x,t2,oracle,match\n100,8,8,true\n");
  CHECK(run_cli({"twins", "3"}).out == "x,t2\n3,0\n");
  const Result r = run_cli({"twins", "1000", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out == "x,t2,oracle,match\n1000,35,35,true\n");

  const Result traced = run_cli({"twins", "10", "--trace", "1..4", "--convention", "paper"});
  CHECK(traced.out == "x,t2\n10,2\nj,s_j,s_j2,term\n1,1,3,1\n2,2,4,1\n3,3,5,1\n4,4,3,0\n");

  CHECK(run_cli({"twins", "10", "--trace", "4..1"}).code == 2);
  CHECK(run_cli({"twins", "10", "--trace", "1-4"}).code == 2);
  CHECK(run_cli({"twins", "10", "--trace", "1..9"}).code == 2);
  CHECK(run_cli({"twins"}).code == 2);
}

TEST_CASE("cli pairs") {
  CHECK(run_cli({"pairs", "100", "--gap", "4", "--verify"}).out == "x,gap,t2n,oracle,match\n100,4,8,8,true\n");
  CHECK(run_cli({"pairs", "7", "--gap", "6"}).out == "x,gap,t2n\n7,6,0\n");
  CHECK(run_cli({"pairs", "10000", "--gap", "6", "--verify"}).out == "x,gap,t2n,oracle,match\n10000,6,411,411,true\n");
  CHECK(run_cli({"pairs", "100", "--gap", "2"}).out == "x,gap,t2n\n100,2,8\n");
  CHECK(run_cli({"pairs", "100", "--gap", "3"}).code == 2);
  CHECK(run_cli({"pairs", "100", "--gap", "0"}).code == 2);
}

TEST_CASE("cli pi") {
  CHECK(run_cli({"pi", "100", "--verify"}).out == "x,pi,oracle,match\n100,25,25,true\n");
  CHECK(run_cli({"pi", "1"}).out == "x,pi\n1,0\n");
  CHECK(run_cli({"pi", "4"}).out == "x,pi\n4,2\n");
  CHECK(run_cli({"pi", "0", "--verify"}).out == "x,pi,oracle,match\n0,0,0,true\n");
}

TEST_CASE("cli table") {
  const Result csv = run_cli({"table", "1", "10", "--format", "csv", "--convention", "paper"});
  CHECK(csv.out ==
        "n,s,is_fixed_point\n1,1,true\n2,2,true\n3,3,true\n4,4,true\n5,5,true\n6,3,false\n7,7,true\n"
        "8,4,false\n9,6,false\n10,5,false\n");
  CHECK(lines(run_cli({"table", "5", "5"}).out) == std::vector<std::string>{"n,s,is_fixed_point", "5,5,true"});
  CHECK(run_cli({"table", "1", "3"}).out == "n,s,is_fixed_point\n1,0,false\n2,2,true\n3,3,true\n");
  CHECK(run_cli({"table", "10", "1"}).code == 2);
  CHECK(run_cli({"table", "0", "1"}).code == 2);

  // Chunk boundaries must not change the CSV.
  CHECK(run_cli({"--segment-size", "7", "table", "1", "500"}).out == run_cli({"table", "1", "500"}).out);

  SUBCASE("cache round trip") {
    const auto path = tmpdir() / "cli_table.skt";
    const Result w = run_cli({"table", "1", "5000", "--format", "cache", "--out", path.string()});
    CHECK(w.code == 0);
    const STable t = load_stable(path);
    CHECK(t == s_range(1, 5000, Convention::formula()));

    std::ifstream a(path, std::ios::binary);
    const std::string first((std::istreambuf_iterator<char>(a)), {});
    run_cli({"--threads", "3", "table", "1", "5000", "--format", "cache", "--out", path.string()});
    std::ifstream b(path, std::ios::binary);
    const std::string second((std::istreambuf_iterator<char>(b)), {});
    CHECK(first == second);
  }

  SUBCASE("cache directory from the environment") {
    const auto dir = tmpdir() / "cache";
    std::filesystem::create_directories(dir);
    ::setenv("SKT_CACHE_DIR", dir.c_str(), 1);
    const Result w = run_cli({"table", "2", "20", "--format", "cache", "--convention", "paper"});
    ::unsetenv("SKT_CACHE_DIR");
    CHECK(w.code == 0);
    CHECK(load_stable(dir / "s_2_20_paper.skt") == s_range(2, 20, Convention::paper()));
    CHECK(run_cli({"table", "2", "20", "--format", "cache"}).code == 2);
  }

  SUBCASE("io failures exit 3") {
    const auto bad = (tmpdir() / "missing-dir" / "t.csv").string();
    CHECK(run_cli({"table", "1", "10", "--out", bad}).code == 3);
    CHECK(run_cli({"table", "1", "10", "--format", "cache", "--out", bad}).code == 3);
  }
}

TEST_CASE("cli verify") {
  const Result r = run_cli({"verify", "--max-x", "100000", "--gaps", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n0 mismatches\n") != std::string::npos);
  CHECK(r.out.find("2,99999,0\n") != std::string::npos);
  CHECK(r.out.find("\n2,3,100000,+1\n") != std::string::npos);

  const Result multi = run_cli({"verify", "--max-x", "100", "--gaps", "4,6,8"});
  CHECK(multi.code == 0);
  CHECK(multi.out ==
        "gap,checked,mismatches\n4,99,0\n6,99,0\n8,99,0\n0 mismatches\n"
        "paper-literal discrepancies (sum from j=1, S(1)=1)\ngap,x_from,x_to,excess\n"
        "4,5,100,+1\n6,7,100,+1\n");

  const Result stepped = run_cli({"verify", "--max-x", "1000", "--gaps", "2,10", "--step", "7"});
  CHECK(stepped.code == 0);
  CHECK(stepped.out.find("\n2,9,996,+1\n") != std::string::npos);
  CHECK(stepped.out.find("\n10,16,996,+1\n") != std::string::npos);

  CHECK(run_cli({"verify", "--gaps", "3"}).code == 2);
  CHECK(run_cli({"verify", "--step", "0"}).code == 2);
  CHECK(run_cli({"verify", "--max-x", "1000000000000"}).code == 2);

  CHECK(run_cli({"--threads", "1", "verify", "--max-x", "5000", "--gaps", "2,4,6"}).out ==
        run_cli({"--threads", "4", "verify", "--max-x", "5000", "--gaps", "2,4,6"}).out);
}

TEST_CASE("cli bench") {
  CHECK(run_cli({"bench", "--max-x", "0"}).out == "kernel,max_x,s_seconds,count_seconds\n");
  CHECK(run_cli({"bench", "--max-x", "0"}).code == 0);
  const Result range = run_cli({"bench", "--max-x", "1000000", "--kernel", "range"});
  CHECK(range.code == 0);
  const auto rows = lines(range.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].rfind("range,1000000,", 0) == 0);

  auto s_seconds = [](const std::string& out) {
    const std::string row = lines(out).at(1);
    std::istringstream is(row);
    std::string field;
    for (int i = 0; i < 3; ++i) std::getline(is, field, ',');
    return std::stod(field);
  };
  const double naive = s_seconds(run_cli({"bench", "--kernel", "naive", "--max-x", "10000"}).out);
  const double fast = s_seconds(run_cli({"bench", "--kernel", "range", "--max-x", "10000"}).out);
  CHECK(naive > fast);
  CHECK(run_cli({"bench", "--kernel", "factor", "--max-x", "1000"}).code == 0);
  CHECK(run_cli({"bench", "--kernel", "nope"}).code == 2);
}

TEST_CASE("cli misc") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"--threads", "0", "s", "4"}).code == 2);
  CHECK(run_cli({"twins", "2000", "--verify"}).out == run_cli({"--threads", "1", "twins", "2000", "--verify"}).out);
}
