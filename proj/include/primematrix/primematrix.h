/*
 * Copyright 2026 The primematrix Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libprimematrix.
 *
 * Every fallible call returns a pm_status; on failure a description of the
 * last error on the calling thread is available from pm_last_error().
 * Strings handed out by the library are released with pm_free().
 * Handles are immutable after creation except for cursors, which must not be
 * shared between threads.
 */

#ifndef PRIMEMATRIX_PRIMEMATRIX_H_
#define PRIMEMATRIX_PRIMEMATRIX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PRIMEMATRIX_BUILDING)
#    define PM_API __declspec(dllexport)
#  else
#    define PM_API __declspec(dllimport)
#  endif
#else
#  define PM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pm_status {
  PM_OK = 0,
  PM_ERROR_RANGE = 1,     /* index, level or value outside the supported range */
  PM_ERROR_DOMAIN = 2,    /* no mathematical answer, e.g. non-invertible element */
  PM_ERROR_ARGUMENT = 3,  /* null pointer, bad enum, malformed pair */
  PM_ERROR_UNDEFINED = 4, /* statistic undefined for the sample (no primes) */
  PM_ERROR_IO = 5,
  PM_ERROR_INTERNAL = 6
} pm_status;

typedef enum pm_format { PM_FORMAT_TEXT = 0, PM_FORMAT_CSV = 1, PM_FORMAT_JSON = 2 } pm_format;

typedef enum pm_child_fate {
  PM_CHILD_SURVIVOR = 0,
  PM_CHILD_KILLED_LOW = 1,
  PM_CHILD_KILLED_HIGH = 2
} pm_child_fate;

typedef struct pm_matrix pm_matrix;
typedef struct pm_twin_cursor pm_twin_cursor;
typedef struct pm_gap_report pm_gap_report;

typedef struct pm_row_class {
  uint64_t row;
  uint64_t residue;
  int uncolored;
  uint64_t leading_prime; /* 0 when the row does not start with a basis prime */
} pm_row_class;

typedef struct pm_twin_pair {
  uint64_t lower_row;
  uint64_t upper_row;
  uint64_t lower_residue;
  uint64_t upper_residue;
} pm_twin_pair;

typedef struct pm_lift_child {
  pm_twin_pair pair;
  uint64_t offset;
  pm_child_fate fate;
} pm_lift_child;

typedef struct pm_scan_summary {
  uint64_t columns;
  uint64_t pi_count;
  uint64_t primes_low;
  uint64_t primes_high;
  uint64_t twin_hits;
  uint64_t first_twin_col; /* 0 when no column holds twins */
  uint64_t lead_gap;
  uint64_t trail_gap;
  int has_d_cp;
  double d_cp;
} pm_scan_summary;

typedef struct pm_level_record {
  unsigned k;
  uint64_t prime;
  uint64_t columns;
  uint64_t pairs;
  uint64_t pi_total;
  double pi_avg;
  double d_avg;
  double d_min;
  double d_max;
  int has_empirical_ratio;
  double empirical_ratio;
  uint64_t predicted_num, predicted_den;
  uint64_t mertens_num, mertens_den;
} pm_level_record;

typedef struct pm_check {
  const char* name;
  int passed;
  const char* detail;
} pm_check;

/* Return nonzero to stop the iteration early. */
typedef int (*pm_u64_fn)(uint64_t value, void* user);
typedef void (*pm_check_fn)(const pm_check* check, void* user);

PM_API const char* pm_version(void);
PM_API const char* pm_status_name(pm_status status);
PM_API const char* pm_last_error(void);
PM_API void pm_free(void* ptr);

/* ---- arithmetic ------------------------------------------------------- */

PM_API int pm_is_prime(uint64_t n);
PM_API pm_status pm_special_factorial(unsigned k, uint64_t* out);
PM_API pm_status pm_mod_inverse(uint64_t a, uint64_t m, uint64_t* out);
/* decimal_out (optional) receives `digits` significant digits. */
PM_API pm_status pm_prime_sum_reciprocals(unsigned k, int digits, char** decimal_out, double* approx_out);
/* First `count` primes, from the matrix generator or (use_oracle) the sieve. */
PM_API pm_status pm_generate_primes(size_t count, int use_oracle, pm_u64_fn fn, void* user);

/* ---- matrices --------------------------------------------------------- */

PM_API pm_status pm_matrix_create(unsigned k, pm_matrix** out);
PM_API void pm_matrix_destroy(pm_matrix* matrix);
PM_API unsigned pm_matrix_level(const pm_matrix* matrix);
PM_API uint64_t pm_matrix_rows(const pm_matrix* matrix);
PM_API pm_status pm_matrix_basis_prime(const pm_matrix* matrix, unsigned index, uint64_t* out);
PM_API pm_status pm_matrix_value_at(const pm_matrix* matrix, uint64_t row, uint64_t column, uint64_t* out);
PM_API pm_status pm_matrix_classify_row(const pm_matrix* matrix, uint64_t row, pm_row_class* out);
PM_API pm_status pm_matrix_next_prime(const pm_matrix* matrix, uint64_t* out);
PM_API pm_status pm_matrix_twin_pair_count(const pm_matrix* matrix, uint64_t* out);

/* Twin row pairs with lower row in [first_row, last_row]; last_row = 0 means all rows. */
PM_API pm_status pm_twin_cursor_create(const pm_matrix* matrix, uint64_t first_row, uint64_t last_row,
                                       pm_twin_cursor** out);
PM_API pm_status pm_twin_cursor_next(pm_twin_cursor* cursor, pm_twin_pair* out, int* has_value);
PM_API void pm_twin_cursor_destroy(pm_twin_cursor* cursor);

/* `child` is A_k; the parent is a twin pair of A_{k-1} named by its lower
 * residue. `children` must hold p_k entries; *count receives p_k. */
PM_API pm_status pm_lift_pair(const pm_matrix* child, uint64_t parent_lower_residue, pm_lift_child* children,
                              size_t capacity, size_t* count);
PM_API pm_status pm_killed_offsets(const pm_matrix* child, uint64_t parent_lower_residue, uint64_t* low,
                                   uint64_t* high);

PM_API pm_status pm_render_fragment(const pm_matrix* matrix, uint64_t first_row, uint64_t last_row,
                                    uint64_t columns, char** pgm_out, size_t* length);
PM_API pm_status pm_render_fragment_to_file(const pm_matrix* matrix, uint64_t first_row, uint64_t last_row,
                                            uint64_t columns, const char* path);

/* ---- statistics ------------------------------------------------------- */

PM_API pm_status pm_scan_pair(const pm_matrix* matrix, uint64_t lower_residue, uint64_t columns,
                              pm_scan_summary* out);
/* *column receives 0 when no twin cell pair exists within `columns`. */
PM_API pm_status pm_pair_first_twin(const pm_matrix* matrix, uint64_t lower_residue, uint64_t columns,
                                    uint64_t* column);
/* residues == NULL samples every twin pair of the matrix. */
PM_API pm_status pm_equidistribution(const pm_matrix* matrix, uint64_t columns, const uint64_t* residues,
                                     size_t residue_count, unsigned jobs, double* mean, double* max_deviation);
PM_API pm_status pm_mertens_prediction(unsigned k, uint64_t* num, uint64_t* den);

/* Twin primes (p, p+2) with p+2 <= bound from the classical sieve; fn gets p. */
PM_API pm_status pm_twin_census(uint64_t bound, pm_u64_fn fn, void* user, uint64_t* count);
/* Same census assembled from the twin row pairs of `matrix`. */
PM_API pm_status pm_twin_census_via_rows(const pm_matrix* matrix, uint64_t bound, unsigned jobs, pm_u64_fn fn,
                                         void* user, uint64_t* count);

PM_API pm_status pm_gap_report_create(uint64_t bound, unsigned k_first, unsigned k_last, unsigned jobs,
                                      pm_gap_report** out);
PM_API void pm_gap_report_destroy(pm_gap_report* report);
PM_API size_t pm_gap_report_level_count(const pm_gap_report* report);
PM_API pm_status pm_gap_report_level(const pm_gap_report* report, size_t index, pm_level_record* out);
/* pair_records != 0 selects one record per twin pair instead of per level. */
PM_API pm_status pm_gap_report_serialize(const pm_gap_report* report, pm_format format, int pair_records,
                                         char** out);

/* ---- verification ----------------------------------------------------- */

PM_API pm_status pm_verify(unsigned k_max, pm_check_fn fn, void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* PRIMEMATRIX_PRIMEMATRIX_H_ */
