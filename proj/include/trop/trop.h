/*
 * Copyright 2026 The trop Authors
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

/*
 * C interface to libtrop.
 *
 * All objects are opaque handles created by the library and released with
 * the matching *_free function. Every fallible call returns a trop_status;
 * on failure a description is available from trop_last_error_message() on
 * the calling thread until the next failing call on that thread. Output
 * handles are only written on TROP_OK.
 *
 * Scalars cross the boundary as doubles. The zero element of max-plus is
 * -INFINITY, that of min-plus is +INFINITY.
 *
 * Handles are immutable once created and may be shared between threads.
 */

#ifndef TROP_TROP_H_
#define TROP_TROP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TROP_BUILDING_LIBRARY)
#    define TROP_API __declspec(dllexport)
#  else
#    define TROP_API __declspec(dllimport)
#  endif
#else
#  define TROP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum trop_status {
  TROP_OK = 0,
  TROP_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad option value */
  TROP_ERR_DOMAIN = 2,           /* zero has no inverse, non-regular vector, ... */
  TROP_ERR_SHAPE = 3,            /* dimension mismatch */
  TROP_ERR_PARSE = 4,            /* see trop_last_error_line() */
  TROP_ERR_RESOURCE = 5,         /* enumeration cap exceeded */
  TROP_ERR_HYPOTHESIS = 6,       /* see trop_last_violation() */
  TROP_ERR_SEMIFIELD = 7,        /* mixed semifields, or unsupported for this one */
  TROP_ERR_BUFFER_TOO_SMALL = 8, /* *required holds the size needed */
  TROP_ERR_INTERNAL = 9
} trop_status;

typedef enum trop_semifield { TROP_MAX_PLUS = 0, TROP_MIN_PLUS = 1 } trop_semifield;

typedef struct trop_matrix trop_matrix;
typedef struct trop_cone trop_cone;
typedef struct trop_oracle_report trop_oracle_report;
typedef struct trop_sample_report trop_sample_report;

/* ---- diagnostics ------------------------------------------------------ */

TROP_API const char* trop_version(void);
TROP_API const char* trop_status_string(trop_status status);
TROP_API const char* trop_last_error_message(void);
/* 1-based line of the last TROP_ERR_PARSE, 0 if not tied to a line. */
TROP_API size_t trop_last_error_line(void);
/* Individual violated hypotheses of the last TROP_ERR_HYPOTHESIS. */
TROP_API size_t trop_last_violation_count(void);
TROP_API const char* trop_last_violation(size_t index);

/* ---- scalars ---------------------------------------------------------- */

/* Writes a NUL-terminated token. *required (if non-null) receives the size
 * including the terminator. */
TROP_API trop_status trop_scalar_format(trop_semifield semifield, double value, char* buf,
                                        size_t buf_size, size_t* required);
TROP_API trop_status trop_scalar_parse(trop_semifield semifield, const char* token, double* out);

/* ---- matrices --------------------------------------------------------- */

/* `values` is row-major with rows * cols entries; NULL gives the zero matrix. */
TROP_API trop_status trop_matrix_create(trop_semifield semifield, size_t rows, size_t cols,
                                        const double* values, trop_matrix** out);
TROP_API trop_status trop_matrix_identity(trop_semifield semifield, size_t n, trop_matrix** out);
TROP_API trop_status trop_matrix_parse(trop_semifield semifield, const char* text, size_t length,
                                       trop_matrix** out);
TROP_API trop_status trop_matrix_format(const trop_matrix* m, char* buf, size_t buf_size,
                                        size_t* required);
TROP_API void trop_matrix_free(trop_matrix* m);

TROP_API size_t trop_matrix_rows(const trop_matrix* m);
TROP_API size_t trop_matrix_cols(const trop_matrix* m);
TROP_API trop_semifield trop_matrix_semifield(const trop_matrix* m);
/* TROP_ERR_INVALID_ARGUMENT for an index outside the matrix. */
TROP_API trop_status trop_matrix_get(const trop_matrix* m, size_t row, size_t col, double* out);
/* Copies rows * cols values row-major; `count` must be at least that. */
TROP_API trop_status trop_matrix_values(const trop_matrix* m, double* out, size_t count);
TROP_API trop_status trop_matrix_equal(const trop_matrix* a, const trop_matrix* b, int* out);

TROP_API trop_status trop_matrix_add(const trop_matrix* a, const trop_matrix* b, trop_matrix** out);
TROP_API trop_status trop_matrix_mul(const trop_matrix* a, const trop_matrix* b, trop_matrix** out);
TROP_API trop_status trop_matrix_scale(double c, const trop_matrix* a, trop_matrix** out);
TROP_API trop_status trop_matrix_pow(const trop_matrix* a, unsigned p, trop_matrix** out);
TROP_API trop_status trop_trace(const trop_matrix* a, double* out);
TROP_API trop_status trop_kleene_star(const trop_matrix* a, trop_matrix** out);
TROP_API trop_status trop_reduce_generators(const trop_matrix* g, trop_matrix** out);

/* ---- spectral --------------------------------------------------------- */

TROP_API trop_status trop_spectral_radius(const trop_matrix* a, double* out);
/* tr A^m for m = 1..n into out[0..n-1]; `count` must be at least n. */
TROP_API trop_status trop_power_traces(const trop_matrix* a, double* out, size_t count);
TROP_API trop_status trop_big_tr(const trop_matrix* a, double* out);
TROP_API trop_status trop_is_irreducible(const trop_matrix* a, int* out);
TROP_API trop_status trop_trace_binomial_rhs(const trop_matrix* a, const trop_matrix* b,
                                             unsigned m, double* out);

/* ---- solver (the constrained/unconstrained problems are max-plus only) -- */

typedef struct trop_solve_options {
  unsigned enumeration_cap; /* largest n for the theta enumeration */
  int override_hypotheses;  /* nonzero: proceed, marking completeness unverified */
} trop_solve_options;

TROP_API void trop_solve_options_init(trop_solve_options* options);

typedef struct trop_inequality_result {
  int feasible;
  double tr_value;
  int completeness_verified;
} trop_inequality_result;

/* Regular solutions of A x <= x. *generators receives A* when feasible and
 * NULL otherwise; infeasibility is reported through `result`, not status. */
TROP_API trop_status trop_solve_linear_inequality(const trop_matrix* a,
                                                  trop_inequality_result* result,
                                                  trop_matrix** generators);
TROP_API trop_status trop_compute_theta(const trop_matrix* a, const trop_matrix* b,
                                        unsigned enumeration_cap, double* out);
TROP_API trop_status trop_objective(const trop_matrix* a, const double* x, size_t n, double* out);
TROP_API trop_status trop_is_solution(const trop_matrix* a, const trop_matrix* b, double theta,
                                      const double* x, size_t n, int* out);

/* `options` may be NULL for defaults. */
TROP_API trop_status trop_solve_constrained(const trop_matrix* a, const trop_matrix* b,
                                            const trop_solve_options* options, trop_cone** out);
TROP_API trop_status trop_solve_unconstrained(const trop_matrix* a,
                                              const trop_solve_options* options, trop_cone** out);

typedef struct trop_hypotheses {
  int objective_irreducible;
  int constraint_irreducible;
  double spectral_radius;
  int spectral_radius_positive;
  double constraint_tr;
  int constraint_tr_ok;
  int combined_irreducible;
} trop_hypotheses;

TROP_API void trop_cone_free(trop_cone* cone);
TROP_API double trop_cone_theta(const trop_cone* cone);
/* Borrowed; valid for the lifetime of the cone. */
TROP_API const trop_matrix* trop_cone_closure(const trop_cone* cone);
TROP_API const trop_matrix* trop_cone_generators(const trop_cone* cone);
TROP_API int trop_cone_reduced(const trop_cone* cone);
TROP_API int trop_cone_completeness_verified(const trop_cone* cone);
TROP_API void trop_cone_hypotheses(const trop_cone* cone, trop_hypotheses* out);
TROP_API size_t trop_cone_warning_count(const trop_cone* cone);
/* NULL when `index` is out of range. */
TROP_API const char* trop_cone_warning(const trop_cone* cone, size_t index);
TROP_API size_t trop_cone_nonregular_count(const trop_cone* cone);
/* SIZE_MAX when `index` is out of range. */
TROP_API size_t trop_cone_nonregular_index(const trop_cone* cone, size_t index);

/* ---- oracle ----------------------------------------------------------- */

typedef struct trop_interval {
  double lo;
  double hi;
} trop_interval;

typedef struct trop_grid_options {
  const trop_interval* box; /* box_count == 1 broadcasts to every coordinate */
  size_t box_count;
  double step;
  int pin_first;
  double tolerance;
  uint64_t max_points;
} trop_grid_options;

/* Defaults: box [-10, 10] broadcast, step 1, first coordinate pinned. */
TROP_API void trop_grid_options_init(trop_grid_options* options);

TROP_API trop_status trop_grid_min(const trop_matrix* a, const trop_matrix* b,
                                   const trop_grid_options* options, trop_oracle_report** out);
TROP_API void trop_oracle_report_free(trop_oracle_report* report);
TROP_API double trop_oracle_estimated_min(const trop_oracle_report* report);
TROP_API int trop_oracle_feasible_found(const trop_oracle_report* report);
TROP_API uint64_t trop_oracle_samples_evaluated(const trop_oracle_report* report);
TROP_API double trop_oracle_grid_step(const trop_oracle_report* report);
TROP_API size_t trop_oracle_dimension(const trop_oracle_report* report);
/* Copies the argmin (dimension entries); TROP_ERR_DOMAIN if none was found. */
TROP_API trop_status trop_oracle_argmin(const trop_oracle_report* report, double* out,
                                        size_t count);
TROP_API trop_status trop_oracle_grid_box(const trop_oracle_report* report, trop_interval* out,
                                          size_t count);

TROP_API trop_status trop_cycle_mean_oracle(const trop_matrix* a, double* out);

TROP_API trop_status trop_sample_solution_family(const trop_matrix* a, const trop_matrix* b,
                                                 const trop_cone* cone, size_t trials,
                                                 uint64_t seed, trop_sample_report** out);
TROP_API void trop_sample_report_free(trop_sample_report* report);
TROP_API size_t trop_sample_trials(const trop_sample_report* report);
TROP_API size_t trop_sample_failure_count(const trop_sample_report* report);
/* Out-of-range indices give SIZE_MAX, NULL and 0 respectively. */
TROP_API size_t trop_sample_failure_trial(const trop_sample_report* report, size_t index);
TROP_API const char* trop_sample_failure_reason(const trop_sample_report* report, size_t index);
/* Length of the witness u of failure `index`. */
TROP_API size_t trop_sample_failure_dimension(const trop_sample_report* report, size_t index);
TROP_API trop_status trop_sample_failure_u(const trop_sample_report* report, size_t index,
                                           double* out, size_t count);

typedef struct trop_lower_bound_result {
  size_t accepted;
  size_t attempts;
  size_t violations;
} trop_lower_bound_result;

TROP_API trop_status trop_check_lower_bound(const trop_matrix* a, const trop_matrix* b,
                                            double theta, size_t samples, uint64_t seed,
                                            trop_lower_bound_result* out);

#ifdef __cplusplus
}
#endif

#endif /* TROP_TROP_H_ */
