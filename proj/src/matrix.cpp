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

#include "primematrix/matrix.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace primematrix {

namespace {

constexpr std::size_t kBlockResidues = 1 << 16;

void check_row(const MatrixSpec& spec, std::uint64_t row) {
  if (row < 1 || row > spec.rows()) {
    throw std::range_error("row " + std::to_string(row) + " outside 1.." + std::to_string(spec.rows()));
  }
}

bool coprime_to_basis(const PrimeBasis& basis, std::uint64_t n) {
  return gcd(n, basis.primorial()) == 1;
}

void check_parent(const TwinRowPair& parent, const PrimeBasis& child_basis) {
  if (child_basis.size() < 3) {
    throw std::invalid_argument("lift_pair: child level must be at least 3");
  }
  const PrimeBasis parent_basis(child_basis.size() - 1);
  const std::uint64_t r = parent.lower_residue;
  if (parent != TwinRowPair::from_lower_residue(r) || r < 2 || r + 1 > parent_basis.primorial() ||
      !coprime_to_basis(parent_basis, r) || !coprime_to_basis(parent_basis, r + 2)) {
    throw std::invalid_argument("lift_pair: residue " + std::to_string(r) + " is not a twin row pair of A_" +
                                std::to_string(parent_basis.size()));
  }
}

}  // namespace

std::uint64_t value_at(const MatrixSpec& spec, std::uint64_t row, std::uint64_t column) {
  check_row(spec, row);
  if (column < 1) throw std::range_error("column must be at least 1");
  std::uint64_t offset = 0;
  std::uint64_t value = 0;
  if (__builtin_mul_overflow(spec.rows(), column - 1, &offset) || __builtin_add_overflow(row + 1, offset, &value)) {
    throw std::range_error("cell (" + std::to_string(row) + ", " + std::to_string(column) + ") overflows 64 bits");
  }
  return value;
}

RowClass classify_row(const MatrixSpec& spec, std::uint64_t row) {
  check_row(spec, row);
  RowClass out;
  out.row = row;
  out.residue = row + 1;
  out.status = coprime_to_basis(spec.basis(), out.residue) ? RowStatus::uncolored : RowStatus::colored;
  if (spec.basis().contains(out.residue)) out.leading_prime = out.residue;
  return out;
}

bool is_twin_pair(const MatrixSpec& spec, std::uint64_t lower_residue) {
  return lower_residue >= 2 && lower_residue + 1 <= spec.rows() && coprime_to_basis(spec.basis(), lower_residue) &&
         coprime_to_basis(spec.basis(), lower_residue + 2);
}

TwinPairStream::TwinPairStream(const MatrixSpec& spec) : TwinPairStream(spec, 1, spec.rows()) {}

TwinPairStream::TwinPairStream(const MatrixSpec& spec, std::uint64_t first_row, std::uint64_t last_row)
    : primes_(spec.basis().primes().begin(), spec.basis().primes().end()) {
  if (spec.level() < 2 || spec.level() > kMaxEnumerationLevel) {
    throw std::range_error("twin pair enumeration needs 2 <= k <= " + std::to_string(kMaxEnumerationLevel));
  }
  if (first_row < 1) throw std::range_error("first row must be at least 1");
  // The upper row of a pair must stay inside the column: lower row <= P_k - 2.
  const std::uint64_t last_lower_row = std::min(last_row, spec.rows() - 2);
  cursor_ = first_row + 1;
  end_residue_ = last_lower_row + 1;
  block_start_ = cursor_;
  if (cursor_ <= end_residue_) fill_block();
}

void TwinPairStream::fill_block() {
  block_start_ = cursor_;
  const std::uint64_t remaining = end_residue_ - block_start_ + 1;
  // Two extra residues so the upper member of the last pair is covered.
  const std::size_t width = static_cast<std::size_t>(std::min<std::uint64_t>(remaining, kBlockResidues)) + 2;
  flags_.assign(width, 1);
  for (std::uint64_t p : primes_) {
    std::uint64_t first = (block_start_ + p - 1) / p * p;
    for (std::uint64_t m = first - block_start_; m < width; m += p) flags_[m] = 0;
  }
}

std::optional<TwinRowPair> TwinPairStream::next() {
  while (cursor_ <= end_residue_) {
    std::size_t idx = static_cast<std::size_t>(cursor_ - block_start_);
    if (idx + 2 >= flags_.size()) {
      fill_block();
      idx = 0;
    }
    const std::uint64_t residue = cursor_++;
    if (flags_[idx] && flags_[idx + 2]) return TwinRowPair::from_lower_residue(residue);
  }
  return std::nullopt;
}

std::vector<TwinRowPair> collect_twin_pairs(const MatrixSpec& spec) {
  std::vector<TwinRowPair> out;
  TwinPairStream stream(spec);
  while (auto pair = stream.next()) out.push_back(*pair);
  return out;
}

std::uint64_t enumerate_twin_pair_count(const MatrixSpec& spec) {
  std::uint64_t count = 0;
  TwinPairStream stream(spec);
  while (stream.next()) ++count;
  return count;
}

std::uint64_t twin_pair_count(const MatrixSpec& spec) {
  if (spec.level() < 2) throw std::range_error("twin_pair_count: k must be at least 2");
  std::uint64_t count = 1;
  for (std::uint64_t p : spec.basis().primes().subspan(1)) count *= p - 2;
  return count;
}

KilledOffsets killed_offsets(const TwinRowPair& parent, const PrimeBasis& child_basis) {
  check_parent(parent, child_basis);
  const std::uint64_t p = child_basis.largest();
  const std::uint64_t step = child_basis.primorial() / p;
  const std::uint64_t inverse = mod_inverse(step % p, p);
  // r + step*m = 0 (mod p)  =>  m = -r * step^-1 (mod p)
  auto solve = [&](std::uint64_t residue) { return (p - residue % p) % p * inverse % p; };
  return {solve(parent.lower_residue), solve(parent.upper_residue)};
}

std::vector<LiftedPair> lift_pair(const TwinRowPair& parent, const PrimeBasis& child_basis) {
  const KilledOffsets killed = killed_offsets(parent, child_basis);
  const std::uint64_t p = child_basis.largest();
  const std::uint64_t step = child_basis.primorial() / p;
  std::vector<LiftedPair> children;
  children.reserve(p);
  for (std::uint64_t m = 0; m < p; ++m) {
    LiftedPair child;
    child.pair = TwinRowPair::from_lower_residue(parent.lower_residue + step * m);
    child.offset = m;
    if (m == killed.low) {
      child.fate = ChildFate::killed_low;
    } else if (m == killed.high) {
      child.fate = ChildFate::killed_high;
    }
    children.push_back(child);
  }
  return children;
}

std::string render_fragment(const MatrixSpec& spec, RowRange rows, std::uint64_t columns) {
  if (rows.first > rows.last) throw std::range_error("render_fragment: empty row range");
  check_row(spec, rows.first);
  check_row(spec, rows.last);
  if (columns < 1) throw std::range_error("render_fragment: need at least one column");
  // Validate the largest cell up front so a failure leaves no partial output.
  value_at(spec, rows.last, columns);

  std::string out = "P2\n" + std::to_string(columns) + " " + std::to_string(rows.last - rows.first + 1) + "\n255\n";
  for (std::uint64_t i = rows.first; i <= rows.last; ++i) {
    for (std::uint64_t j = 1; j <= columns; ++j) {
      const std::uint64_t v = value_at(spec, i, j);
      const char* pixel = v == 1 ? "128" : (is_prime(v) ? "255" : "0");
      if (j > 1) out += ' ';
      out += pixel;
    }
    out += '\n';
  }
  return out;
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + temp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw std::runtime_error("write to " + temp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp);
    throw std::runtime_error("cannot rename " + temp.string() + " to " + path + ": " + ec.message());
  }
}

}  // namespace primematrix
