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

#ifndef PRIMEMATRIX_REPORT_HPP_
#define PRIMEMATRIX_REPORT_HPP_

#include <span>
#include <string>

#include "primematrix/stats.hpp"

namespace primematrix {

enum class ReportFormat { text, csv, json };

/// Per-pair record columns, in output order.
inline constexpr const char* kPairFields[] = {"k",  "pair_lo",   "pair_hi",       "M",
                                              "pi", "d_cp",      "twin_hits",     "first_twin_col"};

/// Per-level record columns, in output order.
inline constexpr const char* kLevelFields[] = {"k",     "p_k",   "M",     "pairs",           "pi_total",
                                               "pi_avg", "d_avg", "d_min", "d_max",           "empirical_ratio",
                                               "predicted_ratio", "mertens_product"};

/// %.12g; decimal output for every statistic.
std::string format_decimal(double value);

std::string serialize_levels(const GapReport& report, ReportFormat format);
std::string serialize_pairs(const GapReport& report, ReportFormat format);

}  // namespace primematrix

#endif  // PRIMEMATRIX_REPORT_HPP_
