/* Copyright 2026 The tlbraid Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef TLBRAID_TLBRAID_H_
#define TLBRAID_TLBRAID_H_

/* C interface to the tlbraid library.
 *
 * Objects are opaque handles released with the matching *_destroy call.
 * Every fallible call returns a tlb_status; on failure tlb_last_error()
 * describes the problem (thread-local, valid until the next call on the same
 * thread). Strings returned through char** out-parameters are owned by the
 * caller and released with tlb_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TLB_API __declspec(dllexport)
#else
#define TLB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tlb_status {
  TLB_OK = 0,
  TLB_INVALID_ARGUMENT = 1,
  TLB_NOT_PRIME = 2,
  TLB_REDUCIBLE_MODULUS = 3,
  TLB_ZERO_DIVISION = 4,
  TLB_FIELD_MISMATCH = 5,
  TLB_SHAPE_MISMATCH = 6,
  TLB_SINGULAR = 7,
  TLB_NOT_HERMITIAN = 8,
  TLB_NORM_NOT_ONE = 9,
  TLB_GATE_REJECTED = 10,
  TLB_CAP_EXCEEDED = 11,
  TLB_INTERTWINER = 12,
  TLB_PARSE = 13,
  TLB_UNSUPPORTED = 14,
  TLB_INTERNAL = 15,
  TLB_OUT_OF_MEMORY = 16
} tlb_status;

typedef enum tlb_format { TLB_FORMAT_JSON = 0, TLB_FORMAT_CSV = 1, TLB_FORMAT_TEXT = 2 } tlb_format;

typedef enum tlb_route { TLB_ROUTE_AUTO = 0, TLB_ROUTE_DIRECT = 1, TLB_ROUTE_PROJECTIVE = 2 } tlb_route;

typedef enum tlb_verdict {
  TLB_VERDICT_CONTAINS_SL = 0,
  TLB_VERDICT_CONTAINS_SU = 1,
  TLB_VERDICT_INCONCLUSIVE = 2,
  TLB_VERDICT_CAPPED = 3,
  TLB_VERDICT_REFUTED = 4
} tlb_verdict;

typedef struct tlb_field tlb_field;
typedef struct tlb_bundle tlb_bundle;

typedef struct tlb_run_options {
  uint64_t cap;      /* element cap for closures */
  tlb_route route;
  int timing;        /* 0 pins runtime_ms to 0 */
  int forced;        /* recorded in the report parameters */
  tlb_format format;
} tlb_run_options;

TLB_API void tlb_run_options_init(tlb_run_options* options);

TLB_API const char* tlb_version(void);
TLB_API const char* tlb_status_name(tlb_status status);
TLB_API const char* tlb_last_error(void);
TLB_API void tlb_string_free(char* s);

/* Verdict -> process exit code: 0 certified, 1 refuted, 2 otherwise. */
TLB_API int tlb_verdict_exit_code(tlb_verdict verdict);
TLB_API const char* tlb_verdict_name(tlb_verdict verdict);

/* modulus may be NULL for the canonical one; otherwise d+1 ascending
 * coefficients. */
TLB_API tlb_status tlb_field_create(uint64_t p, uint32_t d, const uint64_t* modulus, size_t modulus_len,
                                    tlb_field** out);
TLB_API void tlb_field_destroy(tlb_field* field);
TLB_API tlb_status tlb_field_header(const tlb_field* field, char** out);
TLB_API tlb_status tlb_field_order(const tlb_field* field, uint64_t* out);
/* "order:k" or an encoded element. */
TLB_API tlb_status tlb_field_resolve_alpha(const tlb_field* field, const char* selector, uint64_t* out);
TLB_API tlb_status tlb_quantum_e(const tlb_field* field, uint64_t alpha, uint64_t* out);

/* TLB_OK when the gate passes, TLB_GATE_REJECTED otherwise; reason_out
 * (optional) receives the failing clause. */
TLB_API tlb_status tlb_gate(const tlb_field* field, int n, uint64_t alpha, char** reason_out);

TLB_API tlb_status tlb_bundle_build(const tlb_field* field, int n, int r, uint64_t alpha, int force,
                                    tlb_bundle** out);
TLB_API tlb_status tlb_bundle_read(const char* text, tlb_bundle** out);
TLB_API void tlb_bundle_destroy(tlb_bundle* bundle);
TLB_API tlb_status tlb_bundle_write(const tlb_bundle* bundle, char** out);
TLB_API tlb_status tlb_bundle_dim(const tlb_bundle* bundle, size_t* out);
TLB_API tlb_status tlb_bundle_generator_count(const tlb_bundle* bundle, size_t* out);
/* Row-major encoded entries of generator index (0-based); len must be dim^2. */
TLB_API tlb_status tlb_bundle_generator(const tlb_bundle* bundle, size_t index, uint64_t* entries, size_t len);

TLB_API tlb_status tlb_analyze(const tlb_bundle* bundle, tlb_format format, char** out);
TLB_API tlb_status tlb_unitarize(const tlb_bundle* bundle, char** out);
TLB_API tlb_status tlb_certify(const tlb_bundle* bundle, const tlb_run_options* options, char** out,
                               tlb_verdict* verdict);
TLB_API tlb_status tlb_census(const tlb_bundle* bundle, const tlb_run_options* options, char** out,
                              tlb_verdict* verdict);
/* Every two-row factor [n-r, r] of B_n, certified individually and pairwise. */
TLB_API tlb_status tlb_certify_product(const tlb_field* field, int n, uint64_t alpha, int force,
                                       const tlb_run_options* options, char** out, tlb_verdict* verdict);
TLB_API tlb_status tlb_bounds(uint32_t n, uint64_t q, tlb_format format, char** out);
/* Grid over fields x alphas x n x r. alpha_selectors is a comma list
 * ("order:k" or codes) resolved in each field; with n_fields == 0 the
 * field-free spectrum table is produced. check: spectrum, relations or
 * irreducible. */
TLB_API tlb_status tlb_scan(const tlb_field* const* fields, size_t n_fields, const char* alpha_selectors,
                            int n_max, const char* check, int force, tlb_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TLBRAID_TLBRAID_H_ */
