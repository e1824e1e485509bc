/* Copyright 2026 The netneq Authors
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

/* C interface to the netneq solver. Every call returns a status code; on
 * failure a message is available from netneq_last_error() on the same
 * thread until the next call. Strings handed out by the library are owned
 * by the caller and released with netneq_string_free(). */

#ifndef NETNEQ_NETNEQ_H_
#define NETNEQ_NETNEQ_H_

#include <stdint.h>

#if defined(_WIN32)
#define NETNEQ_API __declspec(dllexport)
#else
#define NETNEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum netneq_status {
  NETNEQ_OK = 0,
  NETNEQ_INVALID_ARGUMENT = 1, /* null pointer, unknown suite, bad axis */
  NETNEQ_INVALID_PARAMS = 2,   /* market parameters out of domain */
  NETNEQ_IO = 3,
  NETNEQ_INTERNAL = 4,
  NETNEQ_VERIFY_FAILED = 5 /* a verification suite found a disagreement */
} netneq_status;

typedef struct netneq_params netneq_params;
typedef struct netneq_outcome netneq_outcome;

NETNEQ_API const char* netneq_version(void);
NETNEQ_API const char* netneq_last_error(void);
NETNEQ_API void netneq_string_free(char* s);

/* Market parameters. v_star is recorded only and defaults to 0. */
NETNEQ_API netneq_status netneq_params_create(double t_N, double t_NoN, double kappa_u,
                                              double kappa_ad, double q_f, double q_p,
                                              double c, netneq_params** out);
/* Accepts the object written by netneq_params_to_json. */
NETNEQ_API netneq_status netneq_params_from_json(const char* json, netneq_params** out);
NETNEQ_API netneq_status netneq_params_to_json(const netneq_params* p, char** out);
NETNEQ_API void netneq_params_destroy(netneq_params* p);

/* Subgame-perfect outcome. A missing equilibrium is not an error: the
 * outcome carries label "None" and per-candidate diagnostics. */
NETNEQ_API netneq_status netneq_solve(const netneq_params* p, netneq_outcome** out);
/* Outcome when both ISPs are neutral. */
NETNEQ_API netneq_status netneq_benchmark(const netneq_params* p, netneq_outcome** out);
NETNEQ_API void netneq_outcome_destroy(netneq_outcome* o);

/* Label name ("A".."E", "None", "Benchmark") and region-map code
 * (a = 1 .. e = 5, anything else 0). */
NETNEQ_API netneq_status netneq_outcome_label(const netneq_outcome* o, const char** name,
                                              int* code);
/* Fails with NETNEQ_INVALID_ARGUMENT when the outcome has no equilibrium. */
NETNEQ_API netneq_status netneq_outcome_prices(const netneq_outcome* o, double* p_N,
                                               double* p_NoN, double* p_tilde);
NETNEQ_API netneq_status netneq_outcome_payoffs(const netneq_outcome* o, double* pi_N,
                                                double* pi_NoN, double* pi_CP);
NETNEQ_API netneq_status netneq_outcome_to_json(const netneq_outcome* o, char** out);

/* Equilibrium against the neutral benchmark, with all deltas. */
NETNEQ_API netneq_status netneq_compare_to_json(const netneq_params* p, char** out);

/* Two-axis sweep. Axis specs read "name:lo:hi:steps" with name one of tn,
 * tnon, ku, kad, qf, qp; the axis fields of `base` are overwritten. jobs = 0
 * uses every available core. Either path may be null to skip that file. */
NETNEQ_API netneq_status netneq_sweep(const netneq_params* base, const char* x_axis,
                                      const char* y_axis, int jobs, const char* csv_path,
                                      const char* map_path);

/* Runs suite "cp", "side", "continuous" or "spne". The JSON report is
 * written to *report even when the status is NETNEQ_VERIFY_FAILED. */
NETNEQ_API netneq_status netneq_verify(const char* suite, long samples, uint64_t seed,
                                       char** report);

#ifdef __cplusplus
}
#endif

#endif /* NETNEQ_NETNEQ_H_ */
