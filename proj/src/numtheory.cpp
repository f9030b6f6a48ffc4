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

#include "primematrix/numtheory.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <string>

namespace primematrix {

namespace {

using u128 = unsigned __int128;

constexpr std::array<std::uint64_t, 12> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Witness sets that are known to be deterministic below the given bounds.
constexpr std::array<std::uint64_t, 3> kWitnesses32 = {2, 7, 61};
constexpr std::array<std::uint64_t, 7> kWitnesses64 = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// n odd, n > 37, witness reduced mod n.
bool strong_probable_prime(std::uint64_t n, std::uint64_t witness) {
  witness %= n;
  if (witness == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod(witness, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool less_than(const Rational& a, const Rational& b) {
  return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  if (n < (std::uint64_t{1} << 32)) {
    return std::all_of(kWitnesses32.begin(), kWitnesses32.end(),
                       [n](std::uint64_t a) { return strong_probable_prime(n, a); });
  }
  return std::all_of(kWitnesses64.begin(), kWitnesses64.end(),
                     [n](std::uint64_t a) { return strong_probable_prime(n, a); });
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw std::domain_error("mod_inverse: modulus must be at least 2");
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw std::domain_error("mod_inverse: " + std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  __int128 x = old_s % static_cast<__int128>(m);
  if (x < 0) x += m;
  return static_cast<std::uint64_t>(x);
}

std::uint64_t special_factorial(unsigned k) {
  if (k < 1 || k > kMaxBasisSize) {
    throw std::range_error("special_factorial: k=" + std::to_string(k) + " outside 1.." +
                           std::to_string(kMaxBasisSize));
  }
  return PrimeBasis(k).primorial();
}

std::uint64_t MatrixPrimeGenerator::next() {
  std::uint64_t candidate = primes_.empty() ? 2 : primes_.back() + 1;
  for (;; ++candidate) {
    bool colored = std::any_of(primes_.begin(), primes_.end(),
                               [candidate](std::uint64_t p) { return candidate % p == 0; });
    if (!colored) break;
  }
  primes_.push_back(candidate);
  return candidate;
}

PrimeBasis::PrimeBasis(unsigned k) {
  if (k < 1 || k > kMaxBasisSize) {
    throw std::range_error("PrimeBasis: k=" + std::to_string(k) + " outside 1.." + std::to_string(kMaxBasisSize));
  }
  MatrixPrimeGenerator gen;
  primes_.reserve(k);
  for (unsigned i = 0; i < k; ++i) {
    std::uint64_t p = gen.next();
    if (!is_prime(p)) throw std::logic_error("PrimeBasis: generator produced composite " + std::to_string(p));
    std::uint64_t product = 0;
    if (__builtin_mul_overflow(primorial_, p, &product)) {
      throw std::range_error("PrimeBasis: primorial overflows 64 bits");
    }
    primorial_ = product;
    primes_.push_back(p);
  }
}

bool PrimeBasis::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::uint64_t next_prime_via_matrix(const PrimeBasis& basis) {
  if (basis.size() >= kMaxBasisSize) {
    throw std::range_error("next_prime_via_matrix: basis size must be at most " + std::to_string(kMaxBasisSize - 1));
  }
  const std::uint64_t modulus = basis.primorial();
  std::uint64_t n = 2;
  while (gcd(n, modulus) != 1) ++n;
  if (!is_prime(n)) throw std::logic_error("next_prime_via_matrix: first uncolored value is composite");
  return n;
}

Decimal prime_sum_reciprocals(unsigned k) {
  if (k < 1) throw std::range_error("prime_sum_reciprocals: k must be at least 1");
  MatrixPrimeGenerator gen;
  Decimal sum = 0;
  for (unsigned i = 0; i < k; ++i) {
    sum += Decimal(1) / Decimal(gen.next());
  }
  return sum;
}

std::string to_string(const Decimal& value, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << value;
  return out.str();
}

}  // namespace primematrix
