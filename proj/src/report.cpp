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

#include "primematrix/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace primematrix {

namespace {

using Json = nlohmann::ordered_json;

// Numbers go through the 12-digit text form so JSON and CSV agree.
Json decimal_json(double value) { return std::strtod(format_decimal(value).c_str(), nullptr); }

template <typename T, typename F>
Json optional_json(const std::optional<T>& value, F&& convert) {
  return value ? convert(*value) : Json(nullptr);
}

std::string csv_optional(const std::optional<double>& value) { return value ? format_decimal(*value) : ""; }

std::string csv_header(std::span<const char* const> fields) {
  std::string out;
  for (const char* f : fields) {
    if (!out.empty()) out += ',';
    out += f;
  }
  return out + '\n';
}

Json level_json(const LevelRecord& level) {
  Json j;
  j["k"] = level.k;
  j["p_k"] = level.prime;
  j["M"] = level.columns;
  j["pairs"] = level.pairs;
  j["pi_total"] = level.pi_total;
  j["pi_avg"] = decimal_json(level.pi_avg);
  j["d_avg"] = decimal_json(level.d_avg);
  j["d_min"] = decimal_json(level.d_min);
  j["d_max"] = decimal_json(level.d_max);
  j["empirical_ratio"] = optional_json(level.empirical_ratio, decimal_json);
  j["predicted_ratio"] = decimal_json(level.predicted_ratio.to_double());
  j["mertens_product"] = decimal_json(level.mertens_product.to_double());
  return j;
}

Json pair_json(const PairRecord& rec) {
  Json j;
  j["k"] = rec.k;
  j["pair_lo"] = rec.pair_lo;
  j["pair_hi"] = rec.pair_hi;
  j["M"] = rec.columns;
  j["pi"] = rec.pi;
  j["d_cp"] = optional_json(rec.d_cp, decimal_json);
  j["twin_hits"] = rec.twin_hits;
  j["first_twin_col"] = optional_json(rec.first_twin_col, [](std::uint64_t c) { return Json(c); });
  return j;
}

}  // namespace

std::string format_decimal(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string serialize_levels(const GapReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    Json arr = Json::array();
    for (const LevelRecord& level : report.levels) arr.push_back(level_json(level));
    return arr.dump(2) + '\n';
  }
  std::ostringstream out;
  const char sep = format == ReportFormat::csv ? ',' : '\t';
  std::string header = csv_header(kLevelFields);
  if (sep != ',') std::replace(header.begin(), header.end(), ',', sep);
  out << header;
  for (const LevelRecord& l : report.levels) {
    out << l.k << sep << l.prime << sep << l.columns << sep << l.pairs << sep << l.pi_total << sep
        << format_decimal(l.pi_avg) << sep << format_decimal(l.d_avg) << sep << format_decimal(l.d_min) << sep
        << format_decimal(l.d_max) << sep << csv_optional(l.empirical_ratio) << sep
        << format_decimal(l.predicted_ratio.to_double()) << sep << format_decimal(l.mertens_product.to_double())
        << '\n';
  }
  return out.str();
}

std::string serialize_pairs(const GapReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    Json arr = Json::array();
    for (const PairRecord& rec : report.pairs) arr.push_back(pair_json(rec));
    return arr.dump(2) + '\n';
  }
  std::ostringstream out;
  const char sep = format == ReportFormat::csv ? ',' : '\t';
  std::string header = csv_header(kPairFields);
  if (sep != ',') std::replace(header.begin(), header.end(), ',', sep);
  out << header;
  for (const PairRecord& r : report.pairs) {
    out << r.k << sep << r.pair_lo << sep << r.pair_hi << sep << r.columns << sep << r.pi << sep
        << csv_optional(r.d_cp) << sep << r.twin_hits << sep
        << (r.first_twin_col ? std::to_string(*r.first_twin_col) : "") << '\n';
  }
  return out.str();
}

}  // namespace primematrix
