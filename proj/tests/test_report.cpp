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

#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "primematrix/report.hpp"

using namespace primematrix;

namespace {

GapReport sample_report() {
  GapReport report;
  report.bound = 1000;
  LevelRecord level;
  level.k = 3;
  level.prime = 5;
  level.columns = 33;
  level.pairs = 3;
  level.pi_total = 40;
  level.pi_avg = 40.0 / 3.0;
  level.d_avg = 33.0 * 3.0 / 40.0;
  level.d_min = 2.0;
  level.d_max = 3.0;
  level.predicted_ratio = {4, 5};
  level.mertens_product = {4, 15};
  report.levels.push_back(level);

  PairRecord rec;
  rec.k = 3;
  rec.pair_lo = 11;
  rec.pair_hi = 13;
  rec.columns = 7;
  rec.pi = 12;
  rec.d_cp = 7.0 / 12.0;
  rec.twin_hits = 5;
  rec.first_twin_col = 1;
  report.pairs.push_back(rec);
  PairRecord none = rec;
  none.pi = 0;
  none.d_cp.reset();
  none.twin_hits = 0;
  none.first_twin_col.reset();
  report.pairs.push_back(none);
  return report;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("decimal formatting") {
  CHECK(format_decimal(0.8) == "0.8");
  CHECK(format_decimal(7.0 / 12.0) == "0.583333333333");
  CHECK(format_decimal(2.0) == "2");
}

TEST_CASE("pair csv") {
  const std::string csv = serialize_pairs(sample_report(), ReportFormat::csv);
  CHECK(first_line(csv) == "k,pair_lo,pair_hi,M,pi,d_cp,twin_hits,first_twin_col");
  CHECK(csv == "k,pair_lo,pair_hi,M,pi,d_cp,twin_hits,first_twin_col\n"
               "3,11,13,7,12,0.583333333333,5,1\n"
               "3,11,13,7,0,,0,\n");
}

TEST_CASE("pair text uses tabs") {
  const std::string text = serialize_pairs(sample_report(), ReportFormat::text);
  CHECK(first_line(text) == "k\tpair_lo\tpair_hi\tM\tpi\td_cp\ttwin_hits\tfirst_twin_col");
}

TEST_CASE("pair json keys and nulls") {
  const auto j = nlohmann::ordered_json::parse(serialize_pairs(sample_report(), ReportFormat::json));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j[0].items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"k", "pair_lo", "pair_hi", "M", "pi", "d_cp", "twin_hits",
                                         "first_twin_col"});
  CHECK(j[0]["d_cp"].get<double>() == doctest::Approx(7.0 / 12.0));
  CHECK(j[0]["first_twin_col"].get<int>() == 1);
  CHECK(j[1]["d_cp"].is_null());
  CHECK(j[1]["first_twin_col"].is_null());
}

TEST_CASE("level csv and json") {
  const std::string csv = serialize_levels(sample_report(), ReportFormat::csv);
  CHECK(first_line(csv) ==
        "k,p_k,M,pairs,pi_total,pi_avg,d_avg,d_min,d_max,empirical_ratio,predicted_ratio,mertens_product");
  CHECK(csv.find("3,5,33,3,40,13.3333333333,2.475,2,3,,0.8,0.266666666667\n") != std::string::npos);

  const auto j = nlohmann::ordered_json::parse(serialize_levels(sample_report(), ReportFormat::json));
  REQUIRE(j.size() == 1);
  std::size_t i = 0;
  for (const auto& [key, value] : j[0].items()) CHECK(key == kLevelFields[i++]);
  CHECK(i == std::size(kLevelFields));
  CHECK(j[0]["empirical_ratio"].is_null());
  CHECK(j[0]["predicted_ratio"].get<double>() == 0.8);
}
