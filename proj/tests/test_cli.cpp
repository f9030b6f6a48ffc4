// Copyright 2026 The primematrix Authors
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

// Runs the installed command-line tool as a child process.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PRIMEMATRIX_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string last_line(const std::string& s) {
  const auto end = s.find_last_not_of('\n');
  const auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("primes") {
  const Run r = run("primes --count 4");
  CHECK(r.code == 0);
  CHECK(r.out == "2\n3\n5\n7\n");

  std::ostringstream want;
  for (auto p : oracle::first_primes(1000)) want << p << '\n';
  CHECK(run("primes --count 1000").out == want.str());
  CHECK(run("primes --count 1000 --oracle").out == want.str());
  CHECK(run("primes --count 0").code == 2);
}

TEST_CASE("twins") {
  const Run a3 = run("twins --k 3");
  CHECK(a3.code == 0);
  CHECK(last_line(a3.out) == "count 3 (formula 3)");
  CHECK(last_line(run("twins --k 4").out) == "count 15 (formula 15)");
  CHECK(last_line(run("twins --k 7").out) == "count 22275 (formula 22275)");

  const auto j = nlohmann::json::parse(run("twins --k 3 --format json").out);
  CHECK(j["count"] == 3);
  CHECK(j["pairs"][2]["upper_residue"] == 31);
  CHECK(run("twins --k 1").code == 2);
}

TEST_CASE("rows and lift") {
  const Run rows = run("rows --k 3 --rows 4:6 --format csv");
  CHECK(rows.code == 0);
  CHECK(rows.out == "row,residue,status,leading_prime\n4,5,colored,5\n5,6,colored,\n6,7,uncolored,\n");

  const Run lift = run("lift --k 3 --pair 5 --format csv");
  CHECK(lift.code == 0);
  CHECK(lift.out.find("5,7,0,5,7,killed_low") != std::string::npos);
  CHECK(lift.out.find("5,7,3,23,25,killed_high") != std::string::npos);
  CHECK(run("lift --k 3 --pair 7").code == 2);
}

TEST_CASE("verify") {
  const Run ok = run("verify --k 4");
  CHECK(ok.code == 0);
  CHECK(last_line(ok.out) == "all checks passed");
  CHECK(run("verify --k 3").out.find("killed offsets unique") != std::string::npos);
  CHECK(run("verify --k 2").code == 2);
  CHECK(run("verify --k 9").code == 2);
}

TEST_CASE("stats") {
  const Run levels = run("stats --k 3 --bound 1000000 --format json");
  REQUIRE(levels.code == 0);
  const auto j = nlohmann::json::parse(levels.out);
  REQUIRE(j.size() == 2);
  CHECK(j[1]["k"] == 3);
  CHECK(j[1]["predicted_ratio"].get<double>() == 0.8);

  const Run pairs = run("stats --k 3 --from 3 --bound 1000000 --pairs");
  CHECK(pairs.code == 0);
  CHECK(pairs.out.rfind("k,pair_lo,pair_hi,M,pi,d_cp,twin_hits,first_twin_col\n", 0) == 0);

  const Run eq = run("stats --k 3 --columns 1000");
  CHECK(eq.code == 0);
  CHECK(eq.out.rfind("k,M,pi_mean,max_relative_deviation\n3,1000,", 0) == 0);

  CHECK(run("stats --k 3 --bound 1000000 --format pgm").code == 2);
  CHECK(run("stats --k 5 --bound 1000").code == 2);
}

TEST_CASE("census by sieve and by rows agree") {
  const Run sieve = run("census --bound 100000 --oracle");
  const Run rows = run("census --bound 100000 --k 4");
  CHECK(sieve.code == 0);
  CHECK(rows.code == 0);
  CHECK(last_line(sieve.out).find(": 1224") != std::string::npos);
  CHECK(last_line(rows.out).find(": 1224") != std::string::npos);
  const Run listed = run("census --bound 13 --list --format csv");
  CHECK(listed.out == "p,p_plus_2\n3,5\n5,7\n11,13\n");
}

TEST_CASE("render") {
  const Run r = run("render --k 2 --rows 1:6 --columns 4");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "P2\n4 6\n255\n255 0 0 0\n255 0 0 0\n0 0 0 0\n255 255 255 255\n0 0 0 0\n255 255 255 0\n");
  CHECK(run("render --k 2 --columns 0").code == 2);
  CHECK(run("render --k 2 --columns 4 --format csv").code == 2);
  CHECK(run("render --k 2 --rows 5:9 --columns 4").code == 2);

  const auto path = std::filesystem::temp_directory_path() / "primematrix_cli_render.pgm";
  CHECK(run("render --k 1 --rows 1:2 --columns 4 --out " + path.string()).code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "P2\n4 2\n255\n255 0 0 0\n255 255 255 0\n");
  std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
}
