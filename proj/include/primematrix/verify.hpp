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

#ifndef PRIMEMATRIX_VERIFY_HPP_
#define PRIMEMATRIX_VERIFY_HPP_

#include <functional>
#include <string>
#include <vector>

namespace primematrix {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr unsigned kMinVerifyLevel = 3;
inline constexpr unsigned kMaxVerifyLevel = 8;

/// Runs the counting and lifting laws for every level up to k_max:
///   - twin pair count by formula vs enumeration (k = 2..k_max)
///   - killed offsets: inverse formula vs exhaustive scan, distinct (k = 3..k_max)
///   - survivors per parent = p_k - 2 (k = 3..k_max)
///   - survivors of A_{k-1} == twin pairs of A_k as sets (k = 3..k_max)
///
/// Each finished check is passed to `report` as soon as it completes.
/// Throws std::range_error unless 3 <= k_max <= 8.
std::vector<CheckResult> verify_laws(unsigned k_max, const std::function<void(const CheckResult&)>& report = {});

}  // namespace primematrix

#endif  // PRIMEMATRIX_VERIFY_HPP_
