/*
   Copyright 2026 The salemgrowth Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface to libsalemgrowth.
 *
 * Every fallible call returns an sg_status; on failure a message for the
 * calling thread is available from sg_last_error() until the next call.
 * Strings handed out by the library are freed with sg_string_free, handles
 * with their matching *_free function. Handles are not synchronized: use one
 * per thread, or guard them yourself. Distinct handles may be used from
 * different threads concurrently.
 */

#ifndef SALEMGROWTH_H
#define SALEMGROWTH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SG_API __declspec(dllexport)
#else
#define SG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
    SG_OK = 0,
    SG_ERR_INVALID_ARGUMENT = 1,
    SG_ERR_NON_MONIC_DIVISOR = 2,
    SG_ERR_ZERO_POLYNOMIAL = 3,
    SG_ERR_BAD_INDEX = 4,
    SG_ERR_DEGREE_TOO_LOW = 5,
    SG_ERR_ENDPOINT_IS_ROOT = 6,
    SG_ERR_NOT_SQUAREFREE = 7,
    SG_ERR_LOST_ROOT = 8,
    SG_ERR_NOT_RECIPROCAL = 9,
    SG_ERR_ODD_DEGREE = 10,
    SG_ERR_ROOT_AT_PLUS_MINUS_ONE = 11,
    SG_ERR_NOT_MONIC = 12,
    SG_ERR_CAYLEY_NOT_REAL = 13,
    SG_ERR_BAD_TOLERANCE = 14,
    SG_ERR_ODD_B = 15,
    SG_ERR_SPHERICAL_REGIME = 16,
    SG_ERR_EUCLIDEAN_REGIME = 17,
    SG_ERR_NOT_SIMPLE_POLES = 18,
    SG_ERR_THEOREM_VIOLATION = 19,
    SG_ERR_INCOMPLETE_DISK = 20,
    SG_ERR_DISK_TOO_LARGE = 21,
    SG_ERR_PARSE = 22,
    SG_ERR_IO = 23,
    SG_ERR_INTERNAL = 99
} sg_status;

SG_API const char* sg_version(void);
SG_API const char* sg_status_name(sg_status status);
/* Message for the last failure on this thread; "" when none. */
SG_API const char* sg_last_error(void);
SG_API void sg_string_free(char* s);
SG_API void sg_strings_free(char** v, size_t count);

/* Curvature of (ell, m): "spherical", "euclidean" or "hyperbolic". */
SG_API sg_status sg_regime(int ell, int m, const char** out);

/* ---- growth series -------------------------------------------------- */

typedef struct sg_series sg_series;

/* SG_ERR_SPHERICAL_REGIME for spherical parameters. */
SG_API sg_status sg_series_create(int ell, int m, sg_series** out);
SG_API void sg_series_free(sg_series* s);
SG_API sg_status sg_series_numerator(const sg_series* s, char** out);
SG_API sg_status sg_series_denominator(const sg_series* s, char** out);
/* f_0 .. f_{count-1} as decimal strings; free with sg_strings_free. */
SG_API sg_status sg_series_coefficients(const sg_series* s, size_t count, char*** out);

/* ---- denominator certification and asymptotics ---------------------- */

typedef struct sg_analysis sg_analysis;

/*
 * Certifies the denominator of (ell, m) and encloses lambda and K to width
 * below eps (a decimal or p/q string). terms coefficients are recorded too.
 * Regime errors for non-hyperbolic parameters; a theorem mismatch is not an
 * error here, check sg_analysis_match.
 */
SG_API sg_status sg_analyze(int ell, int m, const char* eps, size_t terms, sg_analysis** out);
SG_API void sg_analysis_free(sg_analysis* a);
SG_API int sg_analysis_match(const sg_analysis* a);
/*
 * Named field as text. Keys: P, Q, regime, cyclotomic, expected, salem,
 * salem_factor, method, cayley_agrees, irreducible, lambda_decimal,
 * lambda_lo, lambda_hi, lambda_width, K_lo, K_hi, R, violations, elapsed_us.
 * Decimal endpoints are rounded outward. SG_ERR_INVALID_ARGUMENT for an
 * unknown key.
 */
SG_API sg_status sg_analysis_field(const sg_analysis* a, const char* key, char** out);
SG_API sg_status sg_analysis_to_json(const sg_analysis* a, char** out);
SG_API sg_status sg_analysis_from_json(const char* json, sg_analysis** out);
SG_API int sg_analysis_equal(const sg_analysis* a, const sg_analysis* b);
SG_API const char* sg_csv_preamble(void);
SG_API const char* sg_sweep_csv_header(void);
SG_API sg_status sg_analysis_csv_row(const sg_analysis* a, char** out);

/* ---- two-sided bounds ----------------------------------------------- */

typedef struct sg_bounds sg_bounds;

/* Checks K lambda^n - R < f_n < K lambda^n + R for n = 0..n_max. */
SG_API sg_status sg_bounds_check(int ell, int m, size_t n_max, sg_bounds** out);
SG_API void sg_bounds_free(sg_bounds* b);
SG_API int sg_bounds_holds(const sg_bounds* b);
SG_API size_t sg_bounds_row_count(const sg_bounds* b);
/* Keys: lambda_lo, lambda_hi, lambda_width, K_lo, K_hi, K_width, R,
 * worst_margin, worst_n, bits. */
SG_API sg_status sg_bounds_field(const sg_bounds* b, const char* key, char** out);
/* Header plus one CSV line per row. */
SG_API sg_status sg_bounds_csv(const sg_bounds* b, char** out);

/* ---- tessellation oracle -------------------------------------------- */

typedef struct sg_disk sg_disk;

/* max_vertices = 0 uses the default cap (5,000,000). */
SG_API sg_status sg_disk_build(int ell, int m, int radius, size_t max_vertices, sg_disk** out);
SG_API void sg_disk_free(sg_disk* d);
SG_API int sg_disk_is_closed(const sg_disk* d);
SG_API int sg_disk_completed_radius(const sg_disk* d);
SG_API size_t sg_disk_vertex_count(const sg_disk* d);
SG_API size_t sg_disk_edge_count(const sg_disk* d);
SG_API size_t sg_disk_face_count(const sg_disk* d);
/*
 * Sphere sizes s_0..s_radius written to out (capacity cap); *len receives
 * the number of layers. SG_ERR_INCOMPLETE_DISK beyond the completed radius.
 */
SG_API sg_status sg_disk_sphere_sizes(const sg_disk* d, int radius, uint64_t* out, size_t cap, size_t* len);
/* *ok = 1 when every invariant holds; failures (may be NULL) lists the rest. */
SG_API sg_status sg_disk_validate(const sg_disk* d, int* ok, char** failures);
SG_API sg_status sg_disk_write_edge_list(const sg_disk* d, const char* path);

#ifdef __cplusplus
}
#endif

#endif
