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

#include "primematrix/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "primematrix/sieve.hpp"

namespace primematrix {

namespace {

constexpr std::uint64_t kMaxCellValue = std::uint64_t{1} << 63;

void check_scan_bounds(const MatrixSpec& spec, const TwinRowPair& pair, std::uint64_t columns) {
  if (spec.level() < 2) throw std::range_error("scan_pair: k must be at least 2");
  if (columns < 1) throw std::range_error("scan_pair: need at least one column");
  if (!is_twin_pair(spec, pair.lower_residue) || pair != TwinRowPair::from_lower_residue(pair.lower_residue)) {
    throw std::invalid_argument("scan_pair: residue " + std::to_string(pair.lower_residue) +
                                " is not a twin row pair of A_" + std::to_string(spec.level()));
  }
  if (value_at(spec, pair.upper_row, columns) > kMaxCellValue) {
    throw std::range_error("scan_pair: cells exceed 2^63");
  }
}

// Runs task(i) for i in [0, count) on up to `jobs` threads.
template <typename Task>
void parallel_for(std::size_t count, unsigned jobs, Task&& task) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

Rational reduced(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t g = gcd(num, den);
  return {num / g, den / g};
}

}  // namespace

FragmentScan scan_pair(const MatrixSpec& spec, const TwinRowPair& pair, std::uint64_t columns) {
  check_scan_bounds(spec, pair, columns);
  FragmentScan scan;
  scan.level = spec.level();
  scan.modulus = spec.rows();
  scan.pair = pair;
  scan.columns = columns;

  std::uint64_t low = pair.lower_residue;
  for (std::uint64_t j = 1; j <= columns; ++j, low += scan.modulus) {
    const bool low_prime = is_prime(low);
    const bool high_prime = is_prime(low + 2);
    if (low_prime) scan.primes_low.push_back(j);
    if (high_prime) scan.primes_high.push_back(j);
    if (low_prime && high_prime) scan.twin_hits.push_back(j);
  }

  if (scan.pi_count() == 0) {
    scan.lead_gap = columns;
    scan.trail_gap = 0;
  } else {
    auto first = [](const std::vector<std::uint64_t>& v) {
      return v.empty() ? std::numeric_limits<std::uint64_t>::max() : v.front();
    };
    auto last = [](const std::vector<std::uint64_t>& v) { return v.empty() ? std::uint64_t{0} : v.back(); };
    scan.lead_gap = std::min(first(scan.primes_low), first(scan.primes_high)) - 1;
    scan.trail_gap = columns - std::max(last(scan.primes_low), last(scan.primes_high));
  }
  return scan;
}

std::vector<FragmentScan> scan_pairs(const MatrixSpec& spec, std::span<const TwinRowPair> pairs,
                                     std::uint64_t columns, unsigned jobs) {
  std::vector<FragmentScan> scans(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) { scans[i] = scan_pair(spec, pairs[i], columns); });
  return scans;
}

std::vector<std::uint64_t> cell_gaps(const FragmentScan& scan) {
  // (column, row) with row 0 = lower; merge keeps the lower row first on ties.
  std::vector<std::pair<std::uint64_t, int>> cells;
  cells.reserve(scan.pi_count());
  std::size_t a = 0, b = 0;
  while (a < scan.primes_low.size() || b < scan.primes_high.size()) {
    if (b == scan.primes_high.size() || (a < scan.primes_low.size() && scan.primes_low[a] <= scan.primes_high[b])) {
      cells.emplace_back(scan.primes_low[a++], 0);
    } else {
      cells.emplace_back(scan.primes_high[b++], 1);
    }
  }
  std::vector<std::uint64_t> gaps;
  for (std::size_t i = 1; i < cells.size(); ++i) gaps.push_back(cells[i].first - cells[i - 1].first);
  return gaps;
}

double d_cp(const FragmentScan& scan) {
  if (scan.pi_count() == 0) {
    throw UndefinedStatistic("d_cp: pair " + std::to_string(scan.pair.lower_residue) + " holds no primes in " +
                             std::to_string(scan.columns) + " columns");
  }
  return static_cast<double>(scan.columns) / static_cast<double>(scan.pi_count());
}

EquidistributionReport equidistribution_report(const MatrixSpec& spec, std::uint64_t columns,
                                               std::span<const TwinRowPair> sample, unsigned jobs) {
  if (spec.level() < 3) throw std::range_error("equidistribution_report: k must be at least 3");
  if (columns < minimum_columns(spec.level())) {
    throw std::range_error("equidistribution_report: need at least " + std::to_string(minimum_columns(spec.level())) +
                           " columns");
  }
  if (sample.empty()) throw std::invalid_argument("equidistribution_report: empty sample");

  EquidistributionReport report;
  std::uint64_t total = 0;
  for (const FragmentScan& scan : scan_pairs(spec, sample, columns, jobs)) {
    report.pi.push_back(scan.pi_count());
    total += scan.pi_count();
  }
  report.mean = static_cast<double>(total) / static_cast<double>(sample.size());
  if (report.mean == 0.0) throw UndefinedStatistic("equidistribution_report: sample holds no primes");
  for (std::uint64_t pi : report.pi) {
    report.max_relative_deviation =
        std::max(report.max_relative_deviation, std::abs(static_cast<double>(pi) - report.mean) / report.mean);
  }
  return report;
}

Rational predicted_ratio(unsigned k) {
  const PrimeBasis basis(k);
  return reduced(basis.largest() - 1, basis.largest());
}

Rational mertens_prediction(unsigned k) {
  const PrimeBasis basis(k);
  std::uint64_t num = 1;
  for (std::uint64_t p : basis.primes()) num *= p - 1;
  return reduced(num, basis.primorial());
}

GapReport gap_recursion_check(std::uint64_t bound, unsigned k_first, unsigned k_last, unsigned jobs) {
  if (k_first < 2 || k_first > k_last || k_last > kMaxEnumerationLevel) {
    throw std::range_error("gap_recursion_check: levels must satisfy 2 <= first <= last <= " +
                           std::to_string(kMaxEnumerationLevel));
  }
  GapReport report;
  report.bound = bound;
  for (unsigned k = k_first; k <= k_last; ++k) {
    const MatrixSpec spec(k);
    const std::uint64_t columns = bound / spec.rows();
    if (columns < minimum_columns(k)) {
      throw std::range_error("gap_recursion_check: bound " + std::to_string(bound) + " gives A_" + std::to_string(k) +
                             " only " + std::to_string(columns) + " columns, need " +
                             std::to_string(minimum_columns(k)));
    }
    const std::vector<TwinRowPair> pairs = collect_twin_pairs(spec);
    const std::vector<FragmentScan> scans = scan_pairs(spec, pairs, columns, jobs);

    LevelRecord level;
    level.k = k;
    level.prime = spec.basis().largest();
    level.columns = columns;
    level.pairs = pairs.size();
    level.d_min = std::numeric_limits<double>::infinity();
    level.d_max = 0.0;
    for (const FragmentScan& scan : scans) {
      level.pi_total += scan.pi_count();
      PairRecord rec;
      rec.k = k;
      rec.pair_lo = scan.pair.lower_residue;
      rec.pair_hi = scan.pair.upper_residue;
      rec.columns = columns;
      rec.pi = scan.pi_count();
      if (rec.pi > 0) {
        rec.d_cp = d_cp(scan);
        level.d_min = std::min(level.d_min, *rec.d_cp);
        level.d_max = std::max(level.d_max, *rec.d_cp);
      }
      rec.twin_hits = scan.twin_hits.size();
      rec.first_twin_col = scan.first_twin_column();
      report.pairs.push_back(rec);
    }
    if (level.pi_total == 0) throw UndefinedStatistic("gap_recursion_check: no primes at level " + std::to_string(k));
    level.pi_avg = static_cast<double>(level.pi_total) / static_cast<double>(level.pairs);
    // M * m / pi_total, the same quantity as M / pi_avg without the extra rounding step.
    level.d_avg = static_cast<double>(columns) * static_cast<double>(level.pairs) / static_cast<double>(level.pi_total);
    if (!report.levels.empty()) level.empirical_ratio = level.d_avg / report.levels.back().d_avg;
    level.predicted_ratio = predicted_ratio(k);
    level.mertens_product = mertens_prediction(k);
    report.levels.push_back(level);
  }
  return report;
}

std::uint64_t twin_census(std::uint64_t bound, const std::function<void(std::uint64_t)>& visit) {
  std::uint64_t count = 0;
  std::uint64_t previous = 0;
  sieve::for_each_prime(bound, [&](std::uint64_t p) {
    if (previous != 0 && p - previous == 2) {
      ++count;
      if (visit) visit(previous);
    }
    previous = p;
    return true;
  });
  return count;
}

std::vector<std::uint64_t> sporadic_twins(const PrimeBasis& basis) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : basis.primes()) {
    if (p >= 3 && is_prime(p + 2)) out.push_back(p);
    if (p >= 5 && is_prime(p - 2)) out.push_back(p - 2);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> twins_via_rows(const MatrixSpec& spec, std::uint64_t bound, unsigned jobs) {
  const std::vector<TwinRowPair> pairs = collect_twin_pairs(spec);
  std::vector<std::vector<std::uint64_t>> found(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    for (std::uint64_t low = pairs[i].lower_residue; low + 2 <= bound; low += spec.rows()) {
      if (is_prime(low) && is_prime(low + 2)) found[i].push_back(low);
      if (bound - (low + 2) < spec.rows()) break;
    }
  });
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : sporadic_twins(spec.basis())) {
    if (p + 2 <= bound) out.push_back(p);
  }
  for (const auto& v : found) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint64_t> pair_has_twin(const MatrixSpec& spec, const TwinRowPair& pair, std::uint64_t columns) {
  check_scan_bounds(spec, pair, columns);
  std::uint64_t low = pair.lower_residue;
  for (std::uint64_t j = 1; j <= columns; ++j, low += spec.rows()) {
    if (is_prime(low) && is_prime(low + 2)) return j;
  }
  return std::nullopt;
}

}  // namespace primematrix
