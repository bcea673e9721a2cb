/*
 * Copyright 2026 The bbtlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the bbtlab core. All functions return a status code;
 * BBTLAB_OK means the out-parameters are valid. On any other status,
 * bbtlab_last_error() returns a thread-local message describing the
 * failure (valid until the next bbtlab call on the same thread).
 *
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with bbtlab_string_free(). */
#ifndef BBTLAB_H
#define BBTLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bbtlab_status {
    BBTLAB_OK = 0,
    BBTLAB_INVALID_ARGUMENT = 1,
    BBTLAB_NON_INTEGER_RESULT = 2,
    BBTLAB_VERIFICATION_FAILED = 3,
    BBTLAB_BUDGET_EXHAUSTED = 4,
    BBTLAB_SYNTHESIS_FAILED = 5,
    BBTLAB_IO_ERROR = 6,
    BBTLAB_CORRUPT_RECORD = 7,
    BBTLAB_UNEQUAL_SUMS = 8,
    BBTLAB_OUT_OF_MEMORY = 9,
    BBTLAB_INTERNAL = 10
} bbtlab_status;

const char* bbtlab_version(void);
const char* bbtlab_status_name(bbtlab_status status);
const char* bbtlab_last_error(void);
void bbtlab_string_free(char* s);

/* ---- exact spectra ----------------------------------------------------- */

/* Opaque handle over the integer transform 2^n * fhat(S) of one function. */
typedef struct bbtlab_spectrum bbtlab_spectrum;

/* Little-endian function id: bit i of fid set means f(input i) = -1. */
bbtlab_status bbtlab_spectrum_from_fid(int n, uint64_t fid, bbtlab_spectrum** out);
/* values: 2^n entries of +1/-1 in input order. n up to 20. */
bbtlab_status bbtlab_spectrum_from_values(int n, const int8_t* values, size_t len,
                                          bbtlab_spectrum** out);
void bbtlab_spectrum_free(bbtlab_spectrum* s);
int bbtlab_spectrum_n(const bbtlab_spectrum* s);
/* Copies the 2^n integer coefficients into out (len must be exactly 2^n). */
bbtlab_status bbtlab_spectrum_coeffs(const bbtlab_spectrum* s, int64_t* out, size_t len);

/* ---- single-function analysis ------------------------------------------ */

/* Full diagnostic report (spectrum, influences, contraction exponent as an
 * exact fraction, degree, bound slacks) as a JSON object. */
bbtlab_status bbtlab_analyze_fid(int n, uint64_t fid, char** out_json);
/* family: parity | majority | dictator | and | or | tribes. */
bbtlab_status bbtlab_analyze_family(const char* family, int n, char** out_json);

/* Multi-start ternary mask synthesis; JSON carries mask, status, strategy. */
bbtlab_status bbtlab_synthesize(int n, uint64_t fid, char** out_json);

/* Exact minimum-support search. max_nodes / max_seconds of 0 = unlimited.
 * Returns BBTLAB_OK with "optimal":false in the JSON when the budget ran
 * out (an incumbent may still be present). */
bbtlab_status bbtlab_min_support(int n, uint64_t fid, uint64_t max_nodes,
                                 double max_seconds, char** out_json);

/* Exact integer check of a ternary mask (entries -1/0/+1, len = 2^n).
 * *out_ok = 1 and *out_margin = min_i f_i (H w)_i when the mask represents
 * the function with margin >= 1. */
bbtlab_status bbtlab_verify_mask(int n, uint64_t fid, const int8_t* mask, size_t len,
                                 int* out_ok, int64_t* out_margin);

/* Lex-least fid in the input-permutation / input-negation / output-negation
 * orbit of fid. n up to 5. */
bbtlab_status bbtlab_npn_canonicalize(int n, uint64_t fid, uint64_t* out_canonical);

/* ---- pipelines ---------------------------------------------------------- */

/* Optional heartbeat for long runs; called from worker threads. */
typedef void (*bbtlab_progress_fn)(uint64_t done, uint64_t total, void* user);

/* Runs one workbench pipeline end to end. subcommand is one of
 *   analyze | synth | minsupport | npn | census | correlate | verify
 * config_json keys (all optional unless the pipeline needs them):
 *   n (int), fid (hex string or integer), family (string), all (bool),
 *   sample (int), seed (int), tau (number), heuristic_only (bool),
 *   budget_nodes (int), budget_seconds (number), certs (path), out (path),
 *   threads (int), force (bool)
 * out_summary receives the machine-readable summary line; out_exit_code
 * (nullable) receives the suggested process exit code: 0 ok, 2 usage,
 * 3 verification, 4 budget. */
bbtlab_status bbtlab_run(const char* subcommand, const char* config_json,
                         bbtlab_progress_fn progress, void* user, int* out_exit_code,
                         char** out_summary);

#ifdef __cplusplus
}
#endif

#endif /* BBTLAB_H */
