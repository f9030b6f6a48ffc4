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

// Prime matrices A_k. Row i (1-based) of A_k holds the progression
// (i + 1) + P_k * (j - 1) for columns j >= 1, where P_k is the primorial of
// the first k primes. Nothing here is materialized: a row is a residue class
// and a cell is computed on demand.

#ifndef PRIMEMATRIX_MATRIX_HPP_
#define PRIMEMATRIX_MATRIX_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primematrix/numtheory.hpp"

namespace primematrix {

/// Row enumeration (twin pair streams) is refused above this level.
inline constexpr unsigned kMaxEnumerationLevel = 9;

class MatrixSpec {
 public:
  explicit MatrixSpec(PrimeBasis basis) : basis_(std::move(basis)) {}
  explicit MatrixSpec(unsigned k) : basis_(k) {}

  const PrimeBasis& basis() const { return basis_; }
  unsigned level() const { return basis_.size(); }
  std::uint64_t rows() const { return basis_.primorial(); }

 private:
  PrimeBasis basis_;
};

enum class RowStatus { colored, uncolored };

struct RowClass {
  std::uint64_t row = 0;
  std::uint64_t residue = 0;  // row + 1
  RowStatus status = RowStatus::colored;
  std::optional<std::uint64_t> leading_prime;
};

/// Two uncolored rows two apart. Identified by the lower residue; the pair
/// (P_k - 1, P_k + 1) keeps upper_residue = P_k + 1.
struct TwinRowPair {
  std::uint64_t lower_row = 0;
  std::uint64_t upper_row = 0;
  std::uint64_t lower_residue = 0;
  std::uint64_t upper_residue = 0;

  static TwinRowPair from_lower_residue(std::uint64_t residue) {
    return {residue - 1, residue + 1, residue, residue + 2};
  }
  friend bool operator==(const TwinRowPair&, const TwinRowPair&) = default;
};

/// (row + 1) + P_k * (column - 1). Throws std::range_error on bad indices or
/// 64-bit overflow.
std::uint64_t value_at(const MatrixSpec& spec, std::uint64_t row, std::uint64_t column);

RowClass classify_row(const MatrixSpec& spec, std::uint64_t row);

/// Whether (lower residue, lower residue + 2) is a twin row pair of the spec.
bool is_twin_pair(const MatrixSpec& spec, std::uint64_t lower_residue);

/// Streams the twin row pairs of A_k in increasing row order using a
/// segmented residue sieve; memory is one block regardless of k.
///
/// Lower rows are restricted to [first_row, last_row] so a caller can split
/// the row space into independent sub-ranges.
class TwinPairStream {
 public:
  explicit TwinPairStream(const MatrixSpec& spec);
  TwinPairStream(const MatrixSpec& spec, std::uint64_t first_row, std::uint64_t last_row);

  std::optional<TwinRowPair> next();

 private:
  void fill_block();

  std::vector<std::uint64_t> primes_;
  std::uint64_t end_residue_ = 0;   // last lower residue, inclusive
  std::uint64_t block_start_ = 0;   // residue held at flags_[0]
  std::uint64_t cursor_ = 0;        // next lower residue to test
  std::vector<char> flags_;         // 1 = coprime to the primorial
};

std::vector<TwinRowPair> collect_twin_pairs(const MatrixSpec& spec);

/// Counts twin pairs by enumeration.
std::uint64_t enumerate_twin_pair_count(const MatrixSpec& spec);

/// Product of (p_i - 2) over i = 2..k. Throws std::range_error for k < 2.
std::uint64_t twin_pair_count(const MatrixSpec& spec);

enum class ChildFate { survivor, killed_low, killed_high };

struct LiftedPair {
  TwinRowPair pair;
  std::uint64_t offset = 0;  // lower residue = parent residue + P_{k-1} * offset
  ChildFate fate = ChildFate::survivor;
};

struct KilledOffsets {
  std::uint64_t low = 0;
  std::uint64_t high = 0;
};

/// Splits a twin pair of A_{k-1} into the p_k candidate pairs of A_k.
/// `child_basis` is the basis of A_k (k >= 3). Throws std::invalid_argument
/// when the parent is not a twin pair of A_{k-1}.
std::vector<LiftedPair> lift_pair(const TwinRowPair& parent, const PrimeBasis& child_basis);

/// The two offsets at which p_k divides the lower / upper endpoint, from the
/// modular inverse of P_{k-1} mod p_k.
KilledOffsets killed_offsets(const TwinRowPair& parent, const PrimeBasis& child_basis);

struct RowRange {
  std::uint64_t first = 1;
  std::uint64_t last = 1;
};

/// Plain (P2) graymap of a fragment: 255 prime, 0 composite, 128 for the
/// value 1. One image row per matrix row.
std::string render_fragment(const MatrixSpec& spec, RowRange rows, std::uint64_t columns);

/// Writes through a temporary file and rename so readers never see a partial
/// image. Throws std::runtime_error on I/O failure.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace primematrix

#endif  // PRIMEMATRIX_MATRIX_HPP_
