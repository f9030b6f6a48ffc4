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

// Classical segmented sieve of Eratosthenes. Shares no code with the
// matrix/wheel machinery so the two can cross-check each other.

#ifndef PRIMEMATRIX_SIEVE_HPP_
#define PRIMEMATRIX_SIEVE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace primematrix::sieve {

inline constexpr std::size_t kDefaultSegmentBytes = 1 << 18;

/// Calls visit(p) for every prime p <= limit in increasing order. Stops early
/// when visit returns false.
void for_each_prime(std::uint64_t limit, const std::function<bool(std::uint64_t)>& visit,
                    std::size_t segment_bytes = kDefaultSegmentBytes);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// The first `count` primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

}  // namespace primematrix::sieve

#endif  // PRIMEMATRIX_SIEVE_HPP_
