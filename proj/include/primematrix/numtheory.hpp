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

#ifndef PRIMEMATRIX_NUMTHEORY_HPP_
#define PRIMEMATRIX_NUMTHEORY_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace primematrix {

/// Largest basis whose primorial fits in 64 bits (p_15 = 47).
inline constexpr unsigned kMaxBasisSize = 15;

using Decimal = boost::multiprecision::cpp_dec_float_50;

/// Exact non-negative fraction num/den, always reduced.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Strict ordering of two fractions via 128-bit cross multiplication.
bool less_than(const Rational& a, const Rational& b);

/// Deterministic primality for the full 64-bit range.
bool is_prime(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// x in [1, m) with a*x = 1 (mod m). Throws std::domain_error when
/// gcd(a, m) != 1 or m < 2.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

/// Product of the first k primes. Throws std::range_error outside 1..15.
std::uint64_t special_factorial(unsigned k);

/// Generates primes the way the matrices do: the next prime is the smallest
/// value above the current basis that no basis prime divides (the first
/// uncolored cell once every row sharing a factor with the basis is dark).
///
/// Works on the prime list itself, so it is not limited by primorial size.
class MatrixPrimeGenerator {
 public:
  MatrixPrimeGenerator() = default;

  std::uint64_t next();
  std::span<const std::uint64_t> basis() const { return primes_; }

 private:
  std::vector<std::uint64_t> primes_;
};

/// The first k primes together with their primorial.
class PrimeBasis {
 public:
  /// Throws std::range_error unless 1 <= k <= 15.
  explicit PrimeBasis(unsigned k);

  unsigned size() const { return static_cast<unsigned>(primes_.size()); }
  std::span<const std::uint64_t> primes() const { return primes_; }
  std::uint64_t prime(unsigned index) const { return primes_.at(index); }
  std::uint64_t largest() const { return primes_.back(); }
  std::uint64_t primorial() const { return primorial_; }
  bool contains(std::uint64_t p) const;

 private:
  std::vector<std::uint64_t> primes_;
  std::uint64_t primorial_ = 1;
};

/// Smallest n > 1 coprime to the basis primorial, i.e. p_{k+1}.
/// Throws std::range_error for k > 14.
std::uint64_t next_prime_via_matrix(const PrimeBasis& basis);

/// Sum of 1/p_i for i = 1..k at 50 significant digits.
Decimal prime_sum_reciprocals(unsigned k);

/// Renders a decimal with the requested number of significant digits.
std::string to_string(const Decimal& value, int digits);

}  // namespace primematrix

#endif  // PRIMEMATRIX_NUMTHEORY_HPP_
