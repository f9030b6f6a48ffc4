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

#include "primematrix/primematrix.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "primematrix/matrix.hpp"
#include "primematrix/numtheory.hpp"
#include "primematrix/report.hpp"
#include "primematrix/sieve.hpp"
#include "primematrix/stats.hpp"
#include "primematrix/verify.hpp"

struct pm_matrix {
  primematrix::MatrixSpec spec;
};

struct pm_twin_cursor {
  primematrix::TwinPairStream stream;
};

struct pm_gap_report {
  primematrix::GapReport report;
};

namespace {

thread_local std::string g_last_error;

pm_status fail(pm_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Maps the exception thrown by `body` onto a status code.
template <typename Body>
pm_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const primematrix::UndefinedStatistic& e) {
    return fail(PM_ERROR_UNDEFINED, e.what());
  } catch (const std::range_error& e) {
    return fail(PM_ERROR_RANGE, e.what());
  } catch (const std::domain_error& e) {
    return fail(PM_ERROR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PM_ERROR_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(PM_ERROR_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PM_ERROR_INTERNAL, "out of memory");
  } catch (const std::runtime_error& e) {
    return fail(PM_ERROR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(PM_ERROR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw std::invalid_argument(what);
}

pm_twin_pair to_c(const primematrix::TwinRowPair& p) {
  return {p.lower_row, p.upper_row, p.lower_residue, p.upper_residue};
}

primematrix::TwinRowPair pair_of(std::uint64_t lower_residue) {
  require(lower_residue >= 2, "lower residue must be at least 2");
  return primematrix::TwinRowPair::from_lower_residue(lower_residue);
}

}  // namespace

extern "C" {

const char* pm_version(void) { return "0.3.0"; }

const char* pm_status_name(pm_status status) {
  switch (status) {
    case PM_OK: return "ok";
    case PM_ERROR_RANGE: return "range error";
    case PM_ERROR_DOMAIN: return "domain error";
    case PM_ERROR_ARGUMENT: return "invalid argument";
    case PM_ERROR_UNDEFINED: return "undefined statistic";
    case PM_ERROR_IO: return "i/o error";
    case PM_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pm_last_error(void) { return g_last_error.c_str(); }

void pm_free(void* ptr) { std::free(ptr); }

int pm_is_prime(uint64_t n) { return primematrix::is_prime(n) ? 1 : 0; }

pm_status pm_special_factorial(unsigned k, uint64_t* out) {
  return guarded([&] {
    require(out, "out is null");
    *out = primematrix::special_factorial(k);
    return PM_OK;
  });
}

pm_status pm_mod_inverse(uint64_t a, uint64_t m, uint64_t* out) {
  return guarded([&] {
    require(out, "out is null");
    *out = primematrix::mod_inverse(a, m);
    return PM_OK;
  });
}

pm_status pm_prime_sum_reciprocals(unsigned k, int digits, char** decimal_out, double* approx_out) {
  return guarded([&] {
    require(digits >= 1 && digits <= 50, "digits must be in 1..50");
    const primematrix::Decimal sum = primematrix::prime_sum_reciprocals(k);
    if (approx_out) *approx_out = sum.convert_to<double>();
    if (decimal_out) *decimal_out = copy_string(primematrix::to_string(sum, digits));
    return PM_OK;
  });
}

pm_status pm_generate_primes(size_t count, int use_oracle, pm_u64_fn fn, void* user) {
  return guarded([&] {
    require(fn, "callback is null");
    require(count >= 1, "count must be at least 1");
    if (use_oracle) {
      for (std::uint64_t p : primematrix::sieve::first_primes(count)) {
        if (fn(p, user)) break;
      }
    } else {
      primematrix::MatrixPrimeGenerator gen;
      for (size_t i = 0; i < count; ++i) {
        if (fn(gen.next(), user)) break;
      }
    }
    return PM_OK;
  });
}

pm_status pm_matrix_create(unsigned k, pm_matrix** out) {
  return guarded([&] {
    require(out, "out is null");
    *out = new pm_matrix{primematrix::MatrixSpec(k)};
    return PM_OK;
  });
}

void pm_matrix_destroy(pm_matrix* matrix) { delete matrix; }

unsigned pm_matrix_level(const pm_matrix* matrix) { return matrix ? matrix->spec.level() : 0; }

uint64_t pm_matrix_rows(const pm_matrix* matrix) { return matrix ? matrix->spec.rows() : 0; }

pm_status pm_matrix_basis_prime(const pm_matrix* matrix, unsigned index, uint64_t* out) {
  return guarded([&] {
    require(matrix && out, "null argument");
    *out = matrix->spec.basis().prime(index);
    return PM_OK;
  });
}

pm_status pm_matrix_value_at(const pm_matrix* matrix, uint64_t row, uint64_t column, uint64_t* out) {
  return guarded([&] {
    require(matrix && out, "null argument");
    *out = primematrix::value_at(matrix->spec, row, column);
    return PM_OK;
  });
}

pm_status pm_matrix_classify_row(const pm_matrix* matrix, uint64_t row, pm_row_class* out) {
  return guarded([&] {
    require(matrix && out, "null argument");
    const primematrix::RowClass c = primematrix::classify_row(matrix->spec, row);
    *out = {c.row, c.residue, c.status == primematrix::RowStatus::uncolored ? 1 : 0, c.leading_prime.value_or(0)};
    return PM_OK;
  });
}

pm_status pm_matrix_next_prime(const pm_matrix* matrix, uint64_t* out) {
  return guarded([&] {
    require(matrix && out, "null argument");
    *out = primematrix::next_prime_via_matrix(matrix->spec.basis());
    return PM_OK;
  });
}

pm_status pm_matrix_twin_pair_count(const pm_matrix* matrix, uint64_t* out) {
  return guarded([&] {
    require(matrix && out, "null argument");
    *out = primematrix::twin_pair_count(matrix->spec);
    return PM_OK;
  });
}

pm_status pm_twin_cursor_create(const pm_matrix* matrix, uint64_t first_row, uint64_t last_row,
                                pm_twin_cursor** out) {
  return guarded([&] {
    require(matrix && out, "null argument");
    const uint64_t last = last_row == 0 ? matrix->spec.rows() : last_row;
    *out = new pm_twin_cursor{primematrix::TwinPairStream(matrix->spec, first_row, last)};
    return PM_OK;
  });
}

pm_status pm_twin_cursor_next(pm_twin_cursor* cursor, pm_twin_pair* out, int* has_value) {
  return guarded([&] {
    require(cursor && out && has_value, "null argument");
    const auto pair = cursor->stream.next();
    *has_value = pair ? 1 : 0;
    if (pair) *out = to_c(*pair);
    return PM_OK;
  });
}

void pm_twin_cursor_destroy(pm_twin_cursor* cursor) { delete cursor; }

pm_status pm_lift_pair(const pm_matrix* child, uint64_t parent_lower_residue, pm_lift_child* children,
                       size_t capacity, size_t* count) {
  return guarded([&] {
    require(child && count, "null argument");
    const auto lifted = primematrix::lift_pair(pair_of(parent_lower_residue), child->spec.basis());
    *count = lifted.size();
    require(children && capacity >= lifted.size(), "children buffer smaller than p_k");
    for (size_t i = 0; i < lifted.size(); ++i) {
      children[i].pair = to_c(lifted[i].pair);
      children[i].offset = lifted[i].offset;
      children[i].fate = lifted[i].fate == primematrix::ChildFate::survivor      ? PM_CHILD_SURVIVOR
                         : lifted[i].fate == primematrix::ChildFate::killed_low ? PM_CHILD_KILLED_LOW
                                                                                 : PM_CHILD_KILLED_HIGH;
    }
    return PM_OK;
  });
}

pm_status pm_killed_offsets(const pm_matrix* child, uint64_t parent_lower_residue, uint64_t* low, uint64_t* high) {
  return guarded([&] {
    require(child && low && high, "null argument");
    const auto killed = primematrix::killed_offsets(pair_of(parent_lower_residue), child->spec.basis());
    *low = killed.low;
    *high = killed.high;
    return PM_OK;
  });
}

pm_status pm_render_fragment(const pm_matrix* matrix, uint64_t first_row, uint64_t last_row, uint64_t columns,
                             char** pgm_out, size_t* length) {
  return guarded([&] {
    require(matrix && pgm_out, "null argument");
    const std::string pgm = primematrix::render_fragment(matrix->spec, {first_row, last_row}, columns);
    *pgm_out = copy_string(pgm);
    if (length) *length = pgm.size();
    return PM_OK;
  });
}

pm_status pm_render_fragment_to_file(const pm_matrix* matrix, uint64_t first_row, uint64_t last_row,
                                     uint64_t columns, const char* path) {
  return guarded([&] {
    require(matrix && path, "null argument");
    primematrix::write_file_atomically(path,
                                       primematrix::render_fragment(matrix->spec, {first_row, last_row}, columns));
    return PM_OK;
  });
}

pm_status pm_scan_pair(const pm_matrix* matrix, uint64_t lower_residue, uint64_t columns, pm_scan_summary* out) {
  return guarded([&] {
    require(matrix && out, "null argument");
    const auto scan = primematrix::scan_pair(matrix->spec, pair_of(lower_residue), columns);
    *out = {};
    out->columns = scan.columns;
    out->pi_count = scan.pi_count();
    out->primes_low = scan.primes_low.size();
    out->primes_high = scan.primes_high.size();
    out->twin_hits = scan.twin_hits.size();
    out->first_twin_col = scan.first_twin_column().value_or(0);
    out->lead_gap = scan.lead_gap;
    out->trail_gap = scan.trail_gap;
    out->has_d_cp = scan.pi_count() > 0 ? 1 : 0;
    out->d_cp = out->has_d_cp ? primematrix::d_cp(scan) : 0.0;
    return PM_OK;
  });
}

pm_status pm_pair_first_twin(const pm_matrix* matrix, uint64_t lower_residue, uint64_t columns, uint64_t* column) {
  return guarded([&] {
    require(matrix && column, "null argument");
    *column = primematrix::pair_has_twin(matrix->spec, pair_of(lower_residue), columns).value_or(0);
    return PM_OK;
  });
}

pm_status pm_equidistribution(const pm_matrix* matrix, uint64_t columns, const uint64_t* residues,
                              size_t residue_count, unsigned jobs, double* mean, double* max_deviation) {
  return guarded([&] {
    require(matrix && mean && max_deviation, "null argument");
    std::vector<primematrix::TwinRowPair> sample;
    if (residues == nullptr) {
      sample = primematrix::collect_twin_pairs(matrix->spec);
    } else {
      for (size_t i = 0; i < residue_count; ++i) sample.push_back(pair_of(residues[i]));
    }
    const auto report = primematrix::equidistribution_report(matrix->spec, columns, sample, jobs);
    *mean = report.mean;
    *max_deviation = report.max_relative_deviation;
    return PM_OK;
  });
}

pm_status pm_mertens_prediction(unsigned k, uint64_t* num, uint64_t* den) {
  return guarded([&] {
    require(num && den, "null argument");
    const primematrix::Rational r = primematrix::mertens_prediction(k);
    *num = r.num;
    *den = r.den;
    return PM_OK;
  });
}

pm_status pm_twin_census(uint64_t bound, pm_u64_fn fn, void* user, uint64_t* count) {
  return guarded([&] {
    require(count, "null argument");
    bool stopped = false;
    *count = primematrix::twin_census(bound, [&](std::uint64_t p) {
      if (fn && !stopped) stopped = fn(p, user) != 0;
    });
    return PM_OK;
  });
}

pm_status pm_twin_census_via_rows(const pm_matrix* matrix, uint64_t bound, unsigned jobs, pm_u64_fn fn, void* user,
                                  uint64_t* count) {
  return guarded([&] {
    require(matrix && count, "null argument");
    const auto twins = primematrix::twins_via_rows(matrix->spec, bound, jobs);
    *count = twins.size();
    if (fn) {
      for (std::uint64_t p : twins) {
        if (fn(p, user)) break;
      }
    }
    return PM_OK;
  });
}

pm_status pm_gap_report_create(uint64_t bound, unsigned k_first, unsigned k_last, unsigned jobs,
                               pm_gap_report** out) {
  return guarded([&] {
    require(out, "out is null");
    *out = new pm_gap_report{primematrix::gap_recursion_check(bound, k_first, k_last, jobs)};
    return PM_OK;
  });
}

void pm_gap_report_destroy(pm_gap_report* report) { delete report; }

size_t pm_gap_report_level_count(const pm_gap_report* report) { return report ? report->report.levels.size() : 0; }

pm_status pm_gap_report_level(const pm_gap_report* report, size_t index, pm_level_record* out) {
  return guarded([&] {
    require(report && out, "null argument");
    const primematrix::LevelRecord& l = report->report.levels.at(index);
    *out = {};
    out->k = l.k;
    out->prime = l.prime;
    out->columns = l.columns;
    out->pairs = l.pairs;
    out->pi_total = l.pi_total;
    out->pi_avg = l.pi_avg;
    out->d_avg = l.d_avg;
    out->d_min = l.d_min;
    out->d_max = l.d_max;
    out->has_empirical_ratio = l.empirical_ratio ? 1 : 0;
    out->empirical_ratio = l.empirical_ratio.value_or(0.0);
    out->predicted_num = l.predicted_ratio.num;
    out->predicted_den = l.predicted_ratio.den;
    out->mertens_num = l.mertens_product.num;
    out->mertens_den = l.mertens_product.den;
    return PM_OK;
  });
}

pm_status pm_gap_report_serialize(const pm_gap_report* report, pm_format format, int pair_records, char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    primematrix::ReportFormat f;
    switch (format) {
      case PM_FORMAT_TEXT: f = primematrix::ReportFormat::text; break;
      case PM_FORMAT_CSV: f = primematrix::ReportFormat::csv; break;
      case PM_FORMAT_JSON: f = primematrix::ReportFormat::json; break;
      default: throw std::invalid_argument("unknown report format");
    }
    *out = copy_string(pair_records ? primematrix::serialize_pairs(report->report, f)
                                    : primematrix::serialize_levels(report->report, f));
    return PM_OK;
  });
}

pm_status pm_verify(unsigned k_max, pm_check_fn fn, void* user, int* all_passed) {
  return guarded([&] {
    require(all_passed, "null argument");
    bool ok = true;
    primematrix::verify_laws(k_max, [&](const primematrix::CheckResult& r) {
      ok = ok && r.passed;
      if (fn) {
        const pm_check check{r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str()};
        fn(&check, user);
      }
    });
    *all_passed = ok ? 1 : 0;
    return PM_OK;
  });
}

}  // extern "C"
