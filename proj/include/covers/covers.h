/*
 * Copyright 2026 The covers Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Plain C interface to the covers library.
 *
 * Every fallible call returns a covers_status; on failure a message is
 * available from covers_last_error() until the next call on the same
 * thread. Objects are opaque handles released with their _free function,
 * which accepts NULL. Strings returned through handles stay valid until the
 * handle is freed. */

#ifndef COVERS_COVERS_H_
#define COVERS_COVERS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(COVERS_BUILDING_LIBRARY)
#define COVERS_API __declspec(dllexport)
#else
#define COVERS_API __declspec(dllimport)
#endif
#else
#define COVERS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum covers_status {
  COVERS_OK = 0,
  COVERS_INVALID_ARGUMENT = 1,
  COVERS_OVERFLOW = 2,
  COVERS_PRECONDITION = 3,
  COVERS_PARSE = 4,
  COVERS_NOT_FOUND = 5,
  COVERS_INTERNAL = 6
} covers_status;

typedef enum covers_group { COVERS_G3 = 0, COVERS_G5 = 1 } covers_group;

typedef enum covers_type {
  COVERS_TYPE_Z3 = 0,
  COVERS_TYPE_G2 = 1,
  COVERS_TYPE_G3 = 2,
  COVERS_TYPE_G5 = 3
} covers_type;

typedef enum covers_kind { COVERS_SUBGROUPS = 0, COVERS_CLASSES = 1 } covers_kind;

COVERS_API const char* covers_last_error(void);
COVERS_API const char* covers_status_name(covers_status status);

/* Name lookups, case-insensitive: "g3", "z3", "s", ... */
COVERS_API covers_status covers_parse_group(const char* text, covers_group* out);
COVERS_API covers_status covers_parse_type(const char* text, covers_type* out);
COVERS_API covers_status covers_parse_kind(const char* text, covers_kind* out);
COVERS_API const char* covers_type_name(covers_type type);

/* Closed-form count s (kind = SUBGROUPS) or c (kind = CLASSES) at n. */
COVERS_API covers_status covers_count_closed(covers_group group, covers_kind kind, covers_type type,
                                             int64_t n, int64_t* out);

/* Brute-force enumeration of the index-n subgroups and their classes. */
typedef struct covers_oracle covers_oracle;

typedef struct covers_triple_info {
  int64_t a;
  int64_t h_a, h_b, h_mu; /* H = <(h_a, 0), (h_mu, h_b)> */
  int64_t nu_u, nu_v;
  covers_type type;
  size_t class_id;
} covers_triple_info;

typedef struct covers_class_info {
  covers_type type;
  size_t size;
  size_t representative; /* index of the smallest triple */
} covers_class_info;

COVERS_API covers_status covers_oracle_new(covers_group group, int64_t n, covers_oracle** out);
COVERS_API void covers_oracle_free(covers_oracle* oracle);
COVERS_API size_t covers_oracle_triple_count(const covers_oracle* oracle);
COVERS_API covers_status covers_oracle_triple(const covers_oracle* oracle, size_t i,
                                              covers_triple_info* out);
COVERS_API size_t covers_oracle_class_count(const covers_oracle* oracle);
COVERS_API covers_status covers_oracle_class(const covers_oracle* oracle, size_t k,
                                             covers_class_info* out);
/* Subgroup and class counts for one type (0 for inadmissible types). */
COVERS_API covers_status covers_oracle_counts(const covers_oracle* oracle, covers_type type,
                                              int64_t* subgroups, int64_t* classes);

/* Formal Dirichlet series. */
typedef struct covers_series covers_series;
typedef struct covers_coeffs covers_coeffs;

/* On COVERS_PARSE, *error_pos (if non-NULL) receives the byte offset. */
COVERS_API covers_status covers_series_parse(const char* text, covers_series** out, size_t* error_pos);
/* Table entry by selector "kind:type:group", e.g. "s:z3:g3". */
COVERS_API covers_status covers_series_entry(const char* selector, covers_series** out);
COVERS_API void covers_series_free(covers_series* series);
/* Normal-form rendering; parseable. */
COVERS_API const char* covers_series_text(const covers_series* series);
/* For table entries: the kind/type/group the cell counts. */
COVERS_API int covers_series_has_target(const covers_series* series);

COVERS_API covers_status covers_series_expand(const covers_series* series, int64_t nmax,
                                              covers_coeffs** out);
COVERS_API void covers_coeffs_free(covers_coeffs* coeffs);
COVERS_API int64_t covers_coeffs_size(const covers_coeffs* coeffs);
/* Exact coefficient at n (1-based) as "p" or "p/q". */
COVERS_API const char* covers_coeffs_text(const covers_coeffs* coeffs, int64_t n);
/* Integral coefficient at n; COVERS_OVERFLOW if not an int64 integer. */
COVERS_API covers_status covers_coeffs_int(const covers_coeffs* coeffs, int64_t n, int64_t* out);

typedef struct covers_comparison {
  int agree;
  int64_t nmax;
  int64_t first_mismatch; /* 0 when agree */
  int64_t target_value;   /* closed formula at first_mismatch */
} covers_comparison;

/* Compares the series with the closed formula for (group, kind, type). */
COVERS_API covers_status covers_series_compare(const covers_series* series, covers_group group,
                                               covers_kind kind, covers_type type, int64_t nmax,
                                               covers_comparison* out);
/* Same, against the cell the entry was loaded from. COVERS_PRECONDITION
 * for series parsed from text. */
COVERS_API covers_status covers_series_compare_target(const covers_series* series, int64_t nmax,
                                                      covers_comparison* out);

/* Verification suites: "formulas", "lattice", "words", "dirichlet", "all".
 * threads = 0 picks one worker per hardware thread. */
typedef struct covers_report covers_report;

COVERS_API covers_status covers_verify(const char* suite, int64_t nmax, unsigned threads,
                                       covers_report** out);
COVERS_API void covers_report_free(covers_report* report);
COVERS_API int covers_report_passed(const covers_report* report);
COVERS_API const char* covers_report_json(const covers_report* report);
/* Smallest counterexample of the failing checks; 0 if none failed. The
 * check name is written to *check (valid until the report is freed). */
COVERS_API int64_t covers_report_first_failure(const covers_report* report, const char** check);

#ifdef __cplusplus
}
#endif

#endif /* COVERS_COVERS_H_ */
