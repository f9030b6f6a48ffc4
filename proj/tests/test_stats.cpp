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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "primematrix/stats.hpp"

using namespace primematrix;

namespace {

using Cols = std::vector<std::uint64_t>;

FragmentScan scan_by_trial_division(std::uint64_t modulus, std::uint64_t r, std::uint64_t columns) {
  FragmentScan s;
  for (std::uint64_t j = 1; j <= columns; ++j) {
    const std::uint64_t lo = r + modulus * (j - 1);
    const bool a = oracle::trial_division_is_prime(lo);
    const bool b = oracle::trial_division_is_prime(lo + 2);
    if (a) s.primes_low.push_back(j);
    if (b) s.primes_high.push_back(j);
    if (a && b) s.twin_hits.push_back(j);
  }
  return s;
}

}  // namespace

TEST_CASE("scan of (11,13) in A_3 over 7 columns") {
  const FragmentScan s = scan_pair(MatrixSpec(3), TwinRowPair::from_lower_residue(11), 7);
  CHECK(s.primes_low == Cols{1, 2, 3, 4, 5, 7});
  CHECK(s.primes_high == Cols{1, 2, 3, 4, 6, 7});
  CHECK(s.twin_hits == Cols{1, 2, 3, 4, 7});
  CHECK(s.pi_count() == 12);
  CHECK(s.lead_gap == 0);
  CHECK(s.trail_gap == 0);
  CHECK(d_cp(s) == doctest::Approx(7.0 / 12.0));
  CHECK(s.first_twin_column() == 1);
}

TEST_CASE("cell gaps") {
  const MatrixSpec a3(3);
  const auto pair = TwinRowPair::from_lower_residue(11);
  CHECK(cell_gaps(scan_pair(a3, pair, 3)) == Cols{0, 1, 0, 1, 0});
  CHECK(cell_gaps(scan_pair(a3, pair, 7)) == Cols{0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0});
}

TEST_CASE("scan matches trial division on every A_4 pair") {
  const MatrixSpec spec(4);
  for (const TwinRowPair& pair : collect_twin_pairs(spec)) {
    const FragmentScan got = scan_pair(spec, pair, 500);
    const FragmentScan want = scan_by_trial_division(210, pair.lower_residue, 500);
    CHECK(got.primes_low == want.primes_low);
    CHECK(got.primes_high == want.primes_high);
    CHECK(got.twin_hits == want.twin_hits);
    if (got.pi_count() > 0) {
      const std::uint64_t first = std::min(want.primes_low.front(), want.primes_high.front());
      const std::uint64_t last = std::max(want.primes_low.back(), want.primes_high.back());
      CHECK(got.lead_gap == first - 1);
      CHECK(got.trail_gap == 500 - last);
      CHECK(d_cp(got) * static_cast<double>(got.pi_count()) == doctest::Approx(500.0));
    }
  }
}

TEST_CASE("parallel scans equal serial scans") {
  const MatrixSpec spec(5);
  const auto pairs = collect_twin_pairs(spec);
  const auto serial = scan_pairs(spec, pairs, 600, 1);
  const auto threaded = scan_pairs(spec, pairs, 600, 4);
  REQUIRE(serial.size() == threaded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].pair == threaded[i].pair);
    CHECK(serial[i].primes_low == threaded[i].primes_low);
    CHECK(serial[i].primes_high == threaded[i].primes_high);
  }
}

TEST_CASE("d_cp is undefined without primes") {
  FragmentScan empty;
  empty.columns = 10;
  CHECK_THROWS_AS(d_cp(empty), UndefinedStatistic);
}

TEST_CASE("scan rejects bad inputs") {
  CHECK_THROWS_AS(scan_pair(MatrixSpec(3), TwinRowPair::from_lower_residue(13), 5), std::invalid_argument);
  CHECK_THROWS_AS(scan_pair(MatrixSpec(1), TwinRowPair::from_lower_residue(1), 5), std::range_error);
}

TEST_CASE("equidistribution of A_3 at M = 100000") {
  const MatrixSpec spec(3);
  const auto pairs = collect_twin_pairs(spec);
  const auto report = equidistribution_report(spec, 100000, pairs);
  REQUIRE(report.pi.size() == 3);
  CHECK(report.max_relative_deviation < 0.05);
}

TEST_CASE("equidistribution of A_4 at M = 10000") {
  const MatrixSpec spec(4);
  const auto pairs = collect_twin_pairs(spec);
  const auto report = equidistribution_report(spec, 10000, pairs);
  CHECK(report.max_relative_deviation < 0.10);
}

TEST_CASE("single pair sample has zero deviation") {
  const MatrixSpec spec(3);
  const auto pairs = collect_twin_pairs(spec);
  const auto report = equidistribution_report(spec, 1000, std::span(pairs).first(1));
  CHECK(report.max_relative_deviation == 0.0);
}

TEST_CASE("doubling M does not grow the deviation beyond slack") {
  const MatrixSpec spec(4);
  const auto pairs = collect_twin_pairs(spec);
  const double a = equidistribution_report(spec, 5000, pairs).max_relative_deviation;
  const double b = equidistribution_report(spec, 10000, pairs).max_relative_deviation;
  CHECK(b <= a + 0.02);
}

TEST_CASE("equidistribution preconditions") {
  const auto pairs3 = collect_twin_pairs(MatrixSpec(3));
  const auto pairs2 = collect_twin_pairs(MatrixSpec(2));
  CHECK_THROWS_AS(equidistribution_report(MatrixSpec(3), 299, pairs3), std::range_error);
  CHECK_THROWS_AS(equidistribution_report(MatrixSpec(2), 1000, pairs2), std::range_error);
  CHECK_THROWS_AS(equidistribution_report(MatrixSpec(3), 1000, std::span<const TwinRowPair>{}),
                  std::invalid_argument);
}

TEST_CASE("predicted gap ratios") {
  CHECK(predicted_ratio(3) == Rational{4, 5});
  CHECK(predicted_ratio(4) == Rational{6, 7});
  CHECK(predicted_ratio(3).to_double() == doctest::Approx(0.8));
}

TEST_CASE("mertens products") {
  CHECK(mertens_prediction(1) == Rational{1, 2});
  CHECK(mertens_prediction(3) == Rational{4, 15});
  for (unsigned k = 2; k <= 15; ++k) {
    const Rational prev = mertens_prediction(k - 1);
    const Rational ratio = predicted_ratio(k);
    const Rational cur = mertens_prediction(k);
    // cur == prev * ratio, cross-multiplied in 128 bits.
    const unsigned __int128 lhs = static_cast<unsigned __int128>(cur.num) * prev.den * ratio.den;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(prev.num) * ratio.num * cur.den;
    CHECK(lhs == rhs);
    CHECK(less_than(cur, prev));
  }
}

TEST_CASE("gap recursion levels") {
  const GapReport report = gap_recursion_check(2000000, 3, 5);
  REQUIRE(report.levels.size() == 3);
  CHECK(report.levels[0].k == 3);
  CHECK(report.levels[0].columns == 66666);
  CHECK(report.levels[0].pairs == 3);
  CHECK_FALSE(report.levels[0].empirical_ratio.has_value());
  CHECK(report.levels[1].empirical_ratio.has_value());
  CHECK(report.levels[1].predicted_ratio == Rational{6, 7});
  CHECK(report.pairs.size() == 3 + 15 + 135);
  for (const LevelRecord& level : report.levels) {
    CHECK(level.d_min <= level.d_avg);
    CHECK(level.d_avg <= level.d_max);
  }
  CHECK(*report.levels[1].empirical_ratio == doctest::Approx(6.0 / 7.0).epsilon(0.05));
}

TEST_CASE("gap recursion refuses too few columns") {
  CHECK_THROWS_AS(gap_recursion_check(100000, 3, 5), std::range_error);
  CHECK_THROWS_AS(gap_recursion_check(1000000, 1, 3), std::range_error);
}

TEST_CASE("twin census frozen values") {
  CHECK(twin_census(13) == 3);
  CHECK(twin_census(1000) == 35);
  CHECK(twin_census(100000) == 1224);
  CHECK(twin_census(1000000) == 8169);
  CHECK(twin_census(1000000) == oracle::twin_lower_members(1000000).size());
}

TEST_CASE("census through matrix rows equals the sieve census") {
  const auto expected = oracle::twin_lower_members(100000);
  for (unsigned k : {3U, 4U}) {
    CHECK(twins_via_rows(MatrixSpec(k), 100000) == expected);
  }
  CHECK(twins_via_rows(MatrixSpec(4), 100000, 3) == expected);
  CHECK(sporadic_twins(PrimeBasis(4)) == Cols{3, 5});
}

TEST_CASE("first twin column") {
  const MatrixSpec a3(3);
  CHECK(pair_has_twin(a3, TwinRowPair::from_lower_residue(11), 10) == 1);
  CHECK(pair_has_twin(a3, TwinRowPair::from_lower_residue(29), 10) == 1);
  // 17 + 30j: (17,19) at column 1.
  CHECK(pair_has_twin(a3, TwinRowPair::from_lower_residue(17), 1) == 1);
  const MatrixSpec a4(4);
  for (const TwinRowPair& pair : collect_twin_pairs(a4)) {
    const auto got = pair_has_twin(a4, pair, 1000);
    const auto want = scan_by_trial_division(210, pair.lower_residue, 1000).twin_hits;
    REQUIRE(got.has_value());
    CHECK(*got == want.front());
  }
}
