/* Copyright 2026 The qpc Authors.
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

/* C interface to libqpc. Objects are opaque handles; every call returns a
 * status code and, on failure, leaves a message for qpc_last_error() on the
 * calling thread. Results are returned as JSON strings owned by the caller
 * and released with qpc_string_free(). Polynomials are written in the
 * compact digit notation ("10^21^3321") or as JSON arrays in increasing
 * degree. */

#ifndef QPC_QPC_H
#define QPC_QPC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QPC_API __declspec(dllexport)
#else
#define QPC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpc_status {
  QPC_OK = 0,
  QPC_ERR_PARSE = 2,
  QPC_ERR_PRECONDITION = 3,
  QPC_ERR_BUDGET = 4,
  QPC_ERR_INTERNAL = 5
} qpc_status;

typedef struct qpc_quotient qpc_quotient;
typedef struct qpc_generator qpc_generator;

/* Accept a modulus whose reduction mod p is not square-free. Operations
 * that need the basic irreducible factors then fail with
 * QPC_ERR_PRECONDITION. */
#define QPC_ALLOW_NON_SQUAREFREE 1u

typedef enum qpc_inner {
  QPC_INNER_F = 0,     /* sum of constant terms of g_i h_i mod f */
  QPC_INNER_EUCLID = 1 /* standard dot product */
} qpc_inner;

typedef enum qpc_shift {
  QPC_SHIFT_QP = 0, /* diag(D, ..., D), multiplication by x */
  QPC_SHIFT_QS = 1  /* diag(M, ..., M), M the transpose of D */
} qpc_shift;

/* Message of the last failed call on this thread; "" if none. */
QPC_API const char* qpc_last_error(void);
QPC_API void qpc_string_free(char* s);

/* ring is "p^s", for example "2^2". */
QPC_API qpc_status qpc_quotient_create(const char* ring, const char* f, unsigned flags,
                                       qpc_quotient** out);
QPC_API void qpc_quotient_free(qpc_quotient* q);

QPC_API qpc_status qpc_generator_create(const qpc_quotient* q, const char* const* components,
                                        size_t count, qpc_generator** out);
QPC_API void qpc_generator_free(qpc_generator* g);

/* {"notation", "algebraic", "coeffs"} */
QPC_API qpc_status qpc_parse(const char* ring, const char* notation, char** json);
/* {"modulus", "factors": [{"notation", "algebraic"}]} */
QPC_API qpc_status qpc_factor(const qpc_quotient* q, char** json);
/* Standard form of the ideal generated by gens, and its size. */
QPC_API qpc_status qpc_standard_form(const qpc_quotient* q, const char* const* gens, size_t count,
                                     char** json);
/* Standard form of the annihilator of the ideal generated by gens. */
QPC_API qpc_status qpc_annihilator(const qpc_quotient* q, const char* const* gens, size_t count,
                                   char** json);
/* h-sequence and minimal generating set of the code. */
QPC_API qpc_status qpc_generating_set(const qpc_generator* g, char** json);
/* {"n", "size", "size_exponent", "lee", "hamming", "triple"}; budget 0 and
 * threads 0 select the defaults. */
QPC_API qpc_status qpc_params(const qpc_generator* g, uint64_t budget, unsigned threads,
                              char** json);
/* {"free", "rank"} */
QPC_API qpc_status qpc_is_free(const qpc_generator* g, char** json);
/* Generator rows of the dual code. */
QPC_API qpc_status qpc_dual(const qpc_generator* g, qpc_inner inner, char** json);
/* Whether the code is invariant under the shift, and whether its Euclidean
 * dual is invariant under the transposed shift. The code is given either by
 * a generator or by rows_json, a JSON array of rows of length m*l. */
QPC_API qpc_status qpc_check_generator(const qpc_generator* g, qpc_shift shift, char** json);
QPC_API qpc_status qpc_check_rows(const qpc_quotient* q, const char* rows_json, qpc_shift shift,
                                  char** json);
/* Runs a TSV manifest. *all_matched is set to 1 iff every row matched. */
QPC_API qpc_status qpc_manifest(const char* path, uint64_t budget, unsigned threads, int timing,
                                char** json, int* all_matched);

#ifdef __cplusplus
}
#endif

#endif /* QPC_QPC_H */
