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

#include "primematrix/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "primematrix/matrix.hpp"

namespace primematrix {

namespace {

std::string level_name(const char* what, unsigned k) { return std::string(what) + " k=" + std::to_string(k); }

// Offsets where p_k divides the lower / upper endpoint, found by trying all p_k.
KilledOffsets scan_killed_offsets(const TwinRowPair& parent, const PrimeBasis& child_basis, bool& unique) {
  const std::uint64_t p = child_basis.largest();
  const std::uint64_t step = child_basis.primorial() / p;
  KilledOffsets found;
  int low_hits = 0, high_hits = 0;
  for (std::uint64_t m = 0; m < p; ++m) {
    const std::uint64_t low = parent.lower_residue + step * m;
    if (low % p == 0) {
      found.low = m;
      ++low_hits;
    }
    if ((low + 2) % p == 0) {
      found.high = m;
      ++high_hits;
    }
  }
  unique = low_hits == 1 && high_hits == 1;
  return found;
}

}  // namespace

std::vector<CheckResult> verify_laws(unsigned k_max, const std::function<void(const CheckResult&)>& report) {
  if (k_max < kMinVerifyLevel || k_max > kMaxVerifyLevel) {
    throw std::range_error("verify_laws: k_max must be in " + std::to_string(kMinVerifyLevel) + ".." +
                           std::to_string(kMaxVerifyLevel));
  }
  std::vector<CheckResult> results;
  auto emit = [&](CheckResult r) {
    if (report) report(r);
    results.push_back(std::move(r));
  };

  std::vector<TwinRowPair> parents;
  for (unsigned k = 2; k <= k_max; ++k) {
    const MatrixSpec spec(k);
    std::vector<TwinRowPair> pairs = collect_twin_pairs(spec);

    const std::uint64_t formula = twin_pair_count(spec);
    emit({level_name("twin pair count", k), formula == pairs.size(),
          "formula " + std::to_string(formula) + ", enumerated " + std::to_string(pairs.size())});

    if (k >= 3) {
      std::size_t offset_failures = 0;
      std::size_t survival_failures = 0;
      std::string first_offset_failure, first_survival_failure;
      std::vector<std::uint64_t> survivors;
      const std::uint64_t p = spec.basis().largest();
      for (const TwinRowPair& parent : parents) {
        const KilledOffsets fast = killed_offsets(parent, spec.basis());
        bool unique = false;
        const KilledOffsets slow = scan_killed_offsets(parent, spec.basis(), unique);
        if (!unique || fast.low != slow.low || fast.high != slow.high || fast.low == fast.high) {
          if (offset_failures++ == 0) {
            first_offset_failure = "parent " + std::to_string(parent.lower_residue) + ": inverse (" +
                                   std::to_string(fast.low) + "," + std::to_string(fast.high) + ") scan (" +
                                   std::to_string(slow.low) + "," + std::to_string(slow.high) + ")";
          }
        }
        std::uint64_t alive = 0;
        for (const LiftedPair& child : lift_pair(parent, spec.basis())) {
          const bool coprime = is_twin_pair(spec, child.pair.lower_residue);
          if (coprime != (child.fate == ChildFate::survivor) && survival_failures++ == 0) {
            first_survival_failure = "child " + std::to_string(child.pair.lower_residue) + " misclassified";
          }
          if (child.fate == ChildFate::survivor) {
            ++alive;
            survivors.push_back(child.pair.lower_residue);
          }
        }
        if (alive != p - 2 && survival_failures++ == 0) {
          first_survival_failure = "parent " + std::to_string(parent.lower_residue) + " has " +
                                   std::to_string(alive) + " survivors";
        }
      }
      emit({level_name("killed offsets unique", k), offset_failures == 0,
            offset_failures == 0 ? std::to_string(parents.size()) + " parents, inverse agrees with scan"
                                 : std::to_string(offset_failures) + " mismatches; " + first_offset_failure});
      emit({level_name("lift survival", k), survival_failures == 0,
            survival_failures == 0 ? "each parent keeps " + std::to_string(p - 2) + " of " + std::to_string(p)
                                   : std::to_string(survival_failures) + " failures; " + first_survival_failure});

      std::sort(survivors.begin(), survivors.end());
      std::vector<std::uint64_t> enumerated;
      enumerated.reserve(pairs.size());
      for (const TwinRowPair& pair : pairs) enumerated.push_back(pair.lower_residue);
      const bool same = survivors == enumerated;
      std::string detail = std::to_string(survivors.size()) + " survivors vs " + std::to_string(enumerated.size()) +
                           " enumerated";
      if (!same) {
        std::vector<std::uint64_t> diff;
        std::set_symmetric_difference(survivors.begin(), survivors.end(), enumerated.begin(), enumerated.end(),
                                      std::back_inserter(diff));
        if (!diff.empty()) detail += "; first difference at residue " + std::to_string(diff.front());
      }
      emit({level_name("global recount", k), same, detail});
    }
    parents = std::move(pairs);
  }
  return results;
}

}  // namespace primematrix
