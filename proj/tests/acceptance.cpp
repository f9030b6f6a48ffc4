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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "primematrix/matrix.hpp"
#include "primematrix/numtheory.hpp"
#include "primematrix/stats.hpp"

using namespace primematrix;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string capture(const std::string& cmd, int* code) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *code = -1;
    return out;
  }
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome twin_counts() {
  std::uint64_t formula = 1;
  for (unsigned k = 2; k <= 8; ++k) {
    const MatrixSpec spec(k);
    if (k > 2) formula *= spec.basis().largest() - 2;
    const std::uint64_t enumerated = enumerate_twin_pair_count(spec);
    if (enumerated != formula || twin_pair_count(spec) != formula) {
      return fail("k=" + std::to_string(k) + " enumerated " + std::to_string(enumerated));
    }
  }
  return pass("k=2..8, 378675 at k=8");
}

Outcome survival() {
  for (unsigned k = 3; k <= 7; ++k) {
    const PrimeBasis child(k);
    const std::uint64_t p = child.largest();
    const std::uint64_t step = child.primorial() / p;
    for (const TwinRowPair& parent : collect_twin_pairs(MatrixSpec(k - 1))) {
      const auto lifted = lift_pair(parent, child);
      const auto alive = std::count_if(lifted.begin(), lifted.end(),
                                       [](const LiftedPair& c) { return c.fate == ChildFate::survivor; });
      if (static_cast<std::uint64_t>(alive) != p - 2) return fail("k=" + std::to_string(k));
      const KilledOffsets killed = killed_offsets(parent, child);
      for (std::uint64_t m = 0; m < p; ++m) {
        const bool low_dead = (parent.lower_residue + step * m) % p == 0;
        const bool high_dead = (parent.lower_residue + 2 + step * m) % p == 0;
        if (low_dead != (m == killed.low) || high_dead != (m == killed.high)) {
          return fail("offset mismatch k=" + std::to_string(k) + " r=" + std::to_string(parent.lower_residue));
        }
      }
    }
  }
  return pass("k=3..7");
}

Outcome generator() {
  MatrixPrimeGenerator gen;
  const auto want = oracle::eratosthenes(7919);
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (gen.next() != want[i]) return fail("prime #" + std::to_string(i + 1));
  }
  return pass("1000 primes, last 7919");
}

Outcome a2_to_a3() {
  const TwinRowPair parent = TwinRowPair::from_lower_residue(5);
  const auto lifted = lift_pair(parent, PrimeBasis(3));
  std::vector<std::uint64_t> killed_m, survivors;
  for (const LiftedPair& c : lifted) {
    // Child lower member 6m - 1.
    const std::uint64_t m = (c.pair.lower_residue + 1) / 6;
    if (c.fate == ChildFate::survivor) {
      survivors.push_back(c.pair.lower_residue);
    } else {
      killed_m.push_back(m);
    }
  }
  const std::vector<std::uint64_t> want_survivors = {11, 17, 29};
  if (killed_m != std::vector<std::uint64_t>{1, 4}) return fail("killed parameters differ");
  if (survivors != want_survivors) return fail("survivors differ");
  const std::pair<int, int> digits[] = {{1, 3}, {7, 9}, {9, 1}};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::uint64_t lo = survivors[i];
    if (static_cast<int>(lo % 10) != digits[i].first || static_cast<int>((lo + 2) % 10) != digits[i].second) {
      return fail("last digits of " + std::to_string(lo));
    }
  }
  return pass("m=1,4 killed; (11,13) (17,19) (29,31)");
}

Outcome twin_in_every_pair() {
  for (unsigned k : {3U, 4U}) {
    const MatrixSpec spec(k);
    for (const TwinRowPair& pair : collect_twin_pairs(spec)) {
      if (!pair_has_twin(spec, pair, 1000)) {
        return fail("k=" + std::to_string(k) + " pair " + std::to_string(pair.lower_residue));
      }
    }
  }
  return pass("k=3,4 within 1000 columns");
}

Outcome census() {
  const std::uint64_t n = 100000;
  const auto rows = twins_via_rows(MatrixSpec(4), n);
  const auto want = oracle::twin_lower_members(n);
  const std::uint64_t sieve = twin_census(n);
  if (rows != want || sieve != want.size()) return fail(std::to_string(rows.size()) + " vs " + std::to_string(want.size()));
  if (rows.size() < 2 || rows[0] != 3 || rows[1] != 5) return fail("sporadic pairs missing");
  return pass(std::to_string(rows.size()) + " pairs up to 100000");
}

Outcome gap_ratios() {
  const GapReport report = gap_recursion_check(10000000, 3, 5);
  const double r4 = *report.levels[1].empirical_ratio;
  const double r5 = *report.levels[2].empirical_ratio;
  char buf[128];
  std::snprintf(buf, sizeof buf, "d4/d3=%.4f (6/7=%.4f) d5/d4=%.4f (10/11=%.4f)", r4, 6.0 / 7, r5, 10.0 / 11);
  const bool ok = std::abs(r4 - 6.0 / 7) <= 0.05 && std::abs(r5 - 10.0 / 11) <= 0.05;
  return {ok, buf};
}

Outcome equidistribution() {
  const MatrixSpec spec(4);
  const auto pairs = collect_twin_pairs(spec);
  const auto report = equidistribution_report(spec, 10000000 / 210, pairs);
  char buf[96];
  std::snprintf(buf, sizeof buf, "max deviation %.4f at M=47619", report.max_relative_deviation);
  return {report.max_relative_deviation <= 0.05, buf};
}

Outcome monotone_products() {
  for (unsigned k = 2; k <= kMaxBasisSize; ++k) {
    const Rational prev = mertens_prediction(k - 1);
    const Rational cur = mertens_prediction(k);
    const Rational step = predicted_ratio(k);
    const unsigned __int128 lhs = static_cast<unsigned __int128>(cur.num) * prev.den * step.den;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(prev.num) * step.num * cur.den;
    if (lhs != rhs || !less_than(cur, prev)) return fail("k=" + std::to_string(k));
    if (!(prime_sum_reciprocals(k) > prime_sum_reciprocals(k - 1))) return fail("reciprocal sum k=" + std::to_string(k));
  }
  return pass("k=1..15");
}

Outcome golden_render() {
  const std::string golden = read_file(PRIMEMATRIX_GOLDEN);
  if (golden.empty()) return fail("golden file missing");
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (render_fragment(MatrixSpec(1), {1, 2}, 4) != golden) return fail("library output differs");
    int code = 0;
    const std::string out =
        capture(std::string(PRIMEMATRIX_CLI) + " render --k 1 --rows 1:2 --columns 4 2>/dev/null", &code);
    if (code != 0 || out != golden) return fail("CLI output differs");
  }
  return pass("library and CLI, two runs");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"twin row pair counts follow the product formula", twin_counts},
      {"each lifted pair keeps p_k - 2 children", survival},
      {"matrix generator reproduces the first 1000 primes", generator},
      {"A_2 to A_3 lifting example", a2_to_a3},
      {"every A_3 and A_4 twin pair holds a twin prime", twin_in_every_pair},
      {"twin census through A_4 rows equals the sieve", census},
      {"column gap ratios track (p_k - 1)/p_k", gap_ratios},
      {"prime counts equidistribute across A_4 pairs", equidistribution},
      {"density products and reciprocal sums are monotone", monotone_products},
      {"A_1 fragment renders byte-identical to the golden image", golden_render},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    ++index;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  [" << index << "] " << name << "  (" << outcome.detail
              << ")\n";
    failures += outcome.passed ? 0 : 1;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed\n" : "acceptance: FAILED\n");
  return failures == 0 ? 0 : 1;
}
