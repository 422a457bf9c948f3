// Copyright 2026 The Bargmann Authors
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

/* C interface to the bargmann library. All objects are opaque handles owned
 * by the caller and released with the matching *_free function. Functions
 * return BG_OK or an error code; bg_last_error() then describes the failure
 * on the calling thread. */
#ifndef BARGMANN_BARGMANN_H_
#define BARGMANN_BARGMANN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BARGMANN_BUILDING_LIBRARY)
#define BG_API __declspec(dllexport)
#else
#define BG_API __declspec(dllimport)
#endif
#else
#define BG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bg_status {
    BG_OK = 0,
    BG_ERR_DIMENSION = 1,
    BG_ERR_CAPACITY = 2,
    BG_ERR_PARAMETER = 3,
    BG_ERR_STATE = 4,
    BG_ERR_POVM = 5,
    BG_ERR_UNSUPPORTED_DIMENSION = 6,
    BG_ERR_INTERNAL_CONSISTENCY = 7,
    BG_ERR_UNKNOWN = 99
} bg_status;

typedef enum bg_mode { BG_MODE_EXACT = 0, BG_MODE_SAMPLED = 1 } bg_mode;

typedef struct bg_state bg_state;
typedef struct bg_orbit_table bg_orbit_table;
typedef struct bg_validation bg_validation;

typedef struct bg_run_options {
    bg_mode mode;
    uint64_t shots; /* per measurement setting, sampled mode only */
    uint64_t seed;
} bg_run_options;

typedef struct bg_resources {
    size_t system_registers;
    size_t ancilla_qubits;
    size_t fredkin_gates;
    size_t measured_registers;
} bg_resources;

typedef struct bg_estimate {
    double re;
    double im;
    double stderr_re;
    double stderr_im;
    uint64_t shots_used;
    bg_resources resources;
} bg_estimate;

typedef struct bg_orbit_row {
    size_t n;
    int weight;
    uint32_t representative;
    size_t period;
} bg_orbit_row;

BG_API const char *bg_version(void);
BG_API const char *bg_last_error(void);
BG_API const char *bg_status_name(bg_status status);

/* States. `values` holds dim*dim complex entries row-major as (re, im)
 * pairs, so 2*dim*dim doubles. */
BG_API bg_status bg_state_from_matrix(size_t dim, const double *values,
                                      bg_state **out);
BG_API bg_status bg_state_preset(const char *name, bg_state **out);
BG_API bg_status bg_state_random(size_t dim, size_t rank, uint64_t seed,
                                 bg_state **out);
BG_API void bg_state_free(bg_state *state);
BG_API size_t bg_state_dim(const bg_state *state);
BG_API bg_status bg_state_get(const bg_state *state, double *values,
                              size_t count);

/* Tr[rho_1 ... rho_n]. */
BG_API bg_status bg_direct_invariant(const bg_state *const *states, size_t n,
                                     double *re, double *im);

/* Protocols by name: swap, destructive-swap, cycle, me-cycle,
 * destructive-third-order, destructive-cycle, destructive-3cycle. */
BG_API size_t bg_protocol_count(void);
BG_API const char *bg_protocol_name(size_t index);
BG_API bg_status bg_run_protocol(const char *protocol,
                                 const bg_state *const *unknown,
                                 size_t n_unknown,
                                 const bg_state *const *known, size_t n_known,
                                 const bg_run_options *options,
                                 bg_estimate *out);
/* Direct invariant of the tuple a protocol estimates for these inputs. */
BG_API bg_status bg_protocol_oracle(const char *protocol,
                                    const bg_state *const *unknown,
                                    size_t n_unknown,
                                    const bg_state *const *known,
                                    size_t n_known, double *re, double *im);
/* Resources for an order-n invariant with m known states. A protocol that
 * does not apply returns BG_ERR_PARAMETER with the reason in bg_last_error. */
BG_API bg_status bg_resources_for(const char *protocol, size_t n, size_t m,
                                  bg_resources *out);
BG_API bg_status bg_hoeffding_shots(double epsilon, double delta,
                                    double range_bound, uint64_t *out);

/* Cyclic orbits of n-bit strings, grouped by weight, 1 <= n <= 20. */
BG_API bg_status bg_orbits_create(size_t n, bg_orbit_table **out);
BG_API void bg_orbits_free(bg_orbit_table *table);
BG_API size_t bg_orbits_count(const bg_orbit_table *table);
BG_API bg_status bg_orbits_row(const bg_orbit_table *table, size_t index,
                               bg_orbit_row *out);
/* Eigenvalue of the cycle shift on Fourier vector ell of orbit `index`. */
BG_API bg_status bg_orbits_eigenvalue(const bg_orbit_table *table,
                                      size_t index, size_t ell, double *re,
                                      double *im);
BG_API bg_status bg_necklace_count(size_t n, uint64_t *out);

/* Property suite. */
BG_API bg_status bg_validate(size_t trials, uint64_t seed, bg_validation **out);
BG_API void bg_validation_free(bg_validation *report);
BG_API size_t bg_validation_count(const bg_validation *report);
BG_API bg_status bg_validation_check(const bg_validation *report, size_t index,
                                     const char **name, int *passed,
                                     const char **detail);
BG_API int bg_validation_all_passed(const bg_validation *report);

#ifdef __cplusplus
}
#endif

#endif /* BARGMANN_BARGMANN_H_ */
