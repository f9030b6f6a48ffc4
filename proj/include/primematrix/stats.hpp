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

// Measurements over twin row pairs: per-pair prime counts, column gaps
// between neighbouring prime cells, and their averages across levels.

#ifndef PRIMEMATRIX_STATS_HPP_
#define PRIMEMATRIX_STATS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "primematrix/matrix.hpp"

namespace primematrix {

/// Raised when a statistic has no defined value for the sample (no primes).
class UndefinedStatistic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Cells of one twin row pair over columns 1..columns.
struct FragmentScan {
  unsigned level = 0;
  std::uint64_t modulus = 0;
  TwinRowPair pair;
  std::uint64_t columns = 0;
  std::vector<std::uint64_t> primes_low;   // columns holding a prime in the lower row
  std::vector<std::uint64_t> primes_high;  // same for the upper row
  std::vector<std::uint64_t> twin_hits;    // columns where both cells are prime
  std::uint64_t lead_gap = 0;   // columns before the first prime cell
  std::uint64_t trail_gap = 0;  // columns after the last prime cell

  std::uint64_t pi_count() const { return primes_low.size() + primes_high.size(); }
  std::optional<std::uint64_t> first_twin_column() const {
    if (twin_hits.empty()) return std::nullopt;
    return twin_hits.front();
  }
};

/// Minimum column count accepted by the statistics operations at level k.
inline std::uint64_t minimum_columns(unsigned k) { return 100ULL * k; }

/// Throws std::range_error if any cell exceeds 2^63 or k < 2.
FragmentScan scan_pair(const MatrixSpec& spec, const TwinRowPair& pair, std::uint64_t columns);

/// Scans each pair, fanning out over `jobs` threads. Output order matches
/// input order regardless of jobs.
std::vector<FragmentScan> scan_pairs(const MatrixSpec& spec, std::span<const TwinRowPair> pairs,
                                     std::uint64_t columns, unsigned jobs);

/// Column distances between successive prime cells, ordered by column then
/// row (lower row first). Same-column neighbours give 0.
std::vector<std::uint64_t> cell_gaps(const FragmentScan& scan);

/// columns / pi_count. Throws UndefinedStatistic when the pair holds no primes.
double d_cp(const FragmentScan& scan);

struct EquidistributionReport {
  std::vector<std::uint64_t> pi;  // per pair, in sample order
  double mean = 0.0;
  double max_relative_deviation = 0.0;
};

/// Requires k >= 3, columns >= 100k and a nonempty sample.
EquidistributionReport equidistribution_report(const MatrixSpec& spec, std::uint64_t columns,
                                               std::span<const TwinRowPair> sample, unsigned jobs = 1);

/// Summary of all twin row pairs of one level over a shared value bound.
struct LevelRecord {
  unsigned k = 0;
  std::uint64_t prime = 0;    // p_k
  std::uint64_t columns = 0;  // M_k = floor(bound / P_k)
  std::uint64_t pairs = 0;
  std::uint64_t pi_total = 0;
  double pi_avg = 0.0;
  double d_avg = 0.0;  // columns / pi_avg
  double d_min = 0.0;
  double d_max = 0.0;
  std::optional<double> empirical_ratio;  // d_avg / previous level's d_avg
  Rational predicted_ratio;
  Rational mertens_product;
};

struct PairRecord {
  unsigned k = 0;
  std::uint64_t pair_lo = 0;
  std::uint64_t pair_hi = 0;
  std::uint64_t columns = 0;
  std::uint64_t pi = 0;
  std::optional<double> d_cp;
  std::uint64_t twin_hits = 0;
  std::optional<std::uint64_t> first_twin_col;
};

struct GapReport {
  std::uint64_t bound = 0;
  std::vector<LevelRecord> levels;
  std::vector<PairRecord> pairs;
};

/// Scans every twin pair of A_k for k in [k_first, k_last] over columns
/// 1..floor(bound / P_k). Throws std::range_error when a level gets fewer
/// than minimum_columns(k) columns.
GapReport gap_recursion_check(std::uint64_t bound, unsigned k_first, unsigned k_last, unsigned jobs = 1);

/// (p_k - 1) / p_k.
Rational predicted_ratio(unsigned k);

/// Product of (p_i - 1) / p_i for i = 1..k, exact.
Rational mertens_prediction(unsigned k);

/// Twin prime pairs (p, p + 2) with p + 2 <= bound, from the classical sieve.
/// `visit` receives p and may be empty.
std::uint64_t twin_census(std::uint64_t bound, const std::function<void(std::uint64_t)>& visit = {});

/// Twin primes with a member among the basis primes; these sit in colored
/// rows and never inside a twin row pair.
std::vector<std::uint64_t> sporadic_twins(const PrimeBasis& basis);

/// Twin primes up to `bound` found by scanning the twin row pairs of A_k,
/// merged with sporadic_twins and sorted by lower member.
std::vector<std::uint64_t> twins_via_rows(const MatrixSpec& spec, std::uint64_t bound, unsigned jobs = 1);

/// Smallest column <= columns where both cells of the pair are prime.
std::optional<std::uint64_t> pair_has_twin(const MatrixSpec& spec, const TwinRowPair& pair, std::uint64_t columns);

}  // namespace primematrix

#endif  // PRIMEMATRIX_STATS_HPP_
