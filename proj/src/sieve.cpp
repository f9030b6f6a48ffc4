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

#include "primematrix/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace primematrix::sieve {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Plain sieve for the base primes up to sqrt(limit).
std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
  std::vector<char> composite(limit + 1, 0);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

}  // namespace

void for_each_prime(std::uint64_t limit, const std::function<bool(std::uint64_t)>& visit,
                    std::size_t segment_bytes) {
  if (limit < 2) return;
  if (segment_bytes == 0) throw std::invalid_argument("for_each_prime: empty segment");
  if (limit > (std::uint64_t{1} << 40)) throw std::range_error("for_each_prime: limit too large for the oracle sieve");

  const std::vector<std::uint64_t> base = base_primes(isqrt(limit));
  std::vector<std::uint64_t> next_multiple;
  next_multiple.reserve(base.size());
  for (std::uint64_t p : base) next_multiple.push_back(p * p);

  std::vector<char> segment(segment_bytes);
  for (std::uint64_t low = 2; low <= limit; low += segment_bytes) {
    const std::uint64_t high = std::min<std::uint64_t>(low + segment_bytes - 1, limit);
    const std::size_t span = static_cast<std::size_t>(high - low + 1);
    std::fill(segment.begin(), segment.begin() + span, 1);

    for (std::size_t idx = 0; idx < base.size(); ++idx) {
      const std::uint64_t p = base[idx];
      std::uint64_t m = next_multiple[idx];
      for (; m <= high; m += p) segment[m - low] = 0;
      next_multiple[idx] = m;
    }
    for (std::size_t i = 0; i < span; ++i) {
      if (segment[i] && !visit(low + i)) return;
    }
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for_each_prime(limit, [&out](std::uint64_t p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  if (count == 0) return {};
  // Rosser's bound p_n < n(ln n + ln ln n) for n >= 6.
  const double n = static_cast<double>(std::max<std::size_t>(count, 6));
  const auto limit = static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for_each_prime(limit, [&](std::uint64_t p) {
    out.push_back(p);
    return out.size() < count;
  });
  return out;
}

}  // namespace primematrix::sieve
