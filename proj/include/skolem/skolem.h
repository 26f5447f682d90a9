// Copyright 2026 The Skolem Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface of the Skolem arithmetic toolkit.
 *
 * Every object is an opaque handle created and destroyed through this API.
 * Functions return a skolem_status; on failure the thread's last error
 * message (and, for syntax errors, its position) describes the problem.
 * Strings returned through char** out-parameters are owned by the caller
 * and must be released with skolem_string_free.
 */

#ifndef SKOLEM_SKOLEM_H_
#define SKOLEM_SKOLEM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SKOLEM_API __declspec(dllexport)
#else
#define SKOLEM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skolem_status {
  SKOLEM_OK = 0,
  SKOLEM_ERR_SYNTAX = 1,           /* malformed formula text */
  SKOLEM_ERR_INVALID_ARGUMENT = 2, /* violated precondition */
  SKOLEM_ERR_RESOURCE = 3,         /* a size cap was exceeded */
  SKOLEM_ERR_NULL = 4,             /* a required pointer was NULL */
  SKOLEM_ERR_INTERNAL = 5          /* unexpected failure */
} skolem_status;

typedef enum skolem_polarity {
  SKOLEM_POLARITY_DIRECT = 0,     /* primes dividing the code */
  SKOLEM_POLARITY_COMPLEMENT = 1  /* primes not dividing the code */
} skolem_polarity;

typedef struct skolem_formula skolem_formula;
typedef struct skolem_engine skolem_engine;
typedef struct skolem_assignment skolem_assignment;
typedef struct skolem_rewrite skolem_rewrite;

typedef struct skolem_stats {
  uint64_t presburger_calls;
  uint64_t dnf_size;
  uint64_t systems;
  uint64_t exists_steps;
} skolem_stats;

/* ---------------------------------------------------------------- general */

SKOLEM_API const char* skolem_version(void);
SKOLEM_API const char* skolem_status_name(skolem_status status);
/* Message of the last failed call on this thread ("" when none). */
SKOLEM_API const char* skolem_last_error(void);
/* 1-based position of the last syntax error on this thread (0 otherwise). */
SKOLEM_API size_t skolem_last_error_line(void);
SKOLEM_API size_t skolem_last_error_column(void);
SKOLEM_API void skolem_string_free(char* s);

/* --------------------------------------------------------------- formulas */

SKOLEM_API skolem_status skolem_parse(const char* text, skolem_formula** out);
SKOLEM_API void skolem_formula_free(skolem_formula* f);
/* Canonical text; parses back to the same formula. */
SKOLEM_API skolem_status skolem_formula_print(const skolem_formula* f,
                                              char** out);
/* Free variables, comma-separated, in name order. */
SKOLEM_API skolem_status skolem_formula_free_vars(const skolem_formula* f,
                                                  char** out);
SKOLEM_API skolem_status skolem_formula_equal(const skolem_formula* a,
                                              const skolem_formula* b,
                                              int* out);
/* Expands divides, prime, rad and ppart into the core language. */
SKOLEM_API skolem_status skolem_desugar(const skolem_formula* f,
                                        skolem_formula** out);
/* Newline-separated formulas with '#' comment lines, as the corpus format;
 * returns the number of formulas and each one through *out (an array the
 * caller releases with skolem_formula_array_free). */
SKOLEM_API skolem_status skolem_parse_corpus(const char* text,
                                             skolem_formula*** out,
                                             size_t* count);
SKOLEM_API void skolem_formula_array_free(skolem_formula** fs, size_t count);

/* ---------------------------------------------------------------- engines */

SKOLEM_API skolem_engine* skolem_engine_new(void);
SKOLEM_API void skolem_engine_free(skolem_engine* e);
/* "dnf=N,pres=N,systems=N,alloc=N"; unknown keys are errors. */
SKOLEM_API skolem_status skolem_engine_set_caps(skolem_engine* e,
                                                const char* caps);
/* Boolean options: "prune", "compact", "allocation" (use the allocation
 * form of the subset conditions instead of Hall conditions). */
SKOLEM_API skolem_status skolem_engine_set_option(skolem_engine* e,
                                                  const char* name, int value);
SKOLEM_API skolem_status skolem_engine_stats(const skolem_engine* e,
                                             skolem_stats* out);

/* ------------------------------------------------------------ assignments */

SKOLEM_API skolem_assignment* skolem_assignment_new(void);
SKOLEM_API void skolem_assignment_free(skolem_assignment* a);
/* Binds var to a positive decimal integer. */
SKOLEM_API skolem_status skolem_assignment_set(skolem_assignment* a,
                                               const char* var,
                                               const char* decimal);

/* ---------------------------------------------------- elimination & truth */

/* Counting normal form. */
SKOLEM_API skolem_status skolem_eliminate(skolem_engine* e,
                                          const skolem_formula* f,
                                          skolem_formula** out);
SKOLEM_API skolem_status skolem_simplify(skolem_engine* e,
                                         const skolem_formula* nf,
                                         skolem_formula** out);
SKOLEM_API skolem_status skolem_eval(skolem_engine* e, const skolem_formula* f,
                                     const skolem_assignment* a, int* out);
SKOLEM_API skolem_status skolem_decide(skolem_engine* e,
                                       const skolem_formula* sentence,
                                       int* out);
/* Compares f and g on the grid of numbers built from the comma-separated
 * base primes with exponents up to max_exp. *equivalent is 1 when they
 * agree everywhere; otherwise *counterexample receives "v=1, w=2". */
SKOLEM_API skolem_status skolem_check_equiv(skolem_engine* e,
                                            const skolem_formula* f,
                                            const skolem_formula* g,
                                            const char* base,
                                            unsigned max_exp, int* equivalent,
                                            char** counterexample);

/* --------------------------------------------------------- debug dumps */

/* Relativization of a (desugared) counting-free formula to Presburger
 * arithmetic over exponents. */
SKOLEM_API skolem_status skolem_dump_relativized(const skolem_formula* f,
                                                 char** out);
/* Each counting atom of the normal form of f with the quantifier-free
 * Presburger formula of its body, one per line. */
SKOLEM_API skolem_status skolem_dump_presburger(skolem_engine* e,
                                                const skolem_formula* f,
                                                char** out);
/* The subset-existence condition for demands m (k entries) and n (l
 * entries), given comma-separated; with_u selects the covered set U. */
SKOLEM_API skolem_status skolem_dump_b2(const char* m, const char* n,
                                        int with_u, int allocation,
                                        char** out);

/* ----------------------------------------------------------- arithmetic */

/* "360 = 2^3 * 3^2 * 5" */
SKOLEM_API skolem_status skolem_arith_factor(const char* n, char** out);
/* "30 = 2 * 3 * 5" */
SKOLEM_API skolem_status skolem_arith_radical(const char* n, char** out);
/* "{2, 3, 5}" */
SKOLEM_API skolem_status skolem_arith_support(const char* n, char** out);
/* The p-part of n, e.g. "8". */
SKOLEM_API skolem_status skolem_arith_ppart(const char* n, const char* p,
                                            char** out);
/* Tuples are comma-separated numbers ("12,18"); a set is `count` tuples of
 * equal length. gamma prints one tuple "(a, b)"; min_elements prints one
 * tuple per line. */
SKOLEM_API skolem_status skolem_arith_gamma(const char* const* tuples,
                                            size_t count, char** out);
SKOLEM_API skolem_status skolem_arith_min_elements(const char* const* tuples,
                                                   size_t count, char** out);
SKOLEM_API skolem_status skolem_arith_precedes(const char* a, const char* b,
                                               int* out);

/* ------------------------------------------------------ definable sets */

/* The set {p prime : theta(p; params)} with u standing for p. */
SKOLEM_API skolem_status skolem_radical_code(skolem_engine* e,
                                             const skolem_formula* theta,
                                             const char* u,
                                             const skolem_assignment* params,
                                             skolem_polarity* polarity,
                                             char** code);
/* Rewrites #[p: theta] >= k in the comma-separated tuple variables `vars`
 * with every other free variable fixed by params. */
SKOLEM_API skolem_status skolem_embed_rewrite(skolem_engine* e,
                                              const skolem_formula* theta,
                                              const char* vars, uint64_t k,
                                              const skolem_assignment* params,
                                              skolem_rewrite** out);
SKOLEM_API void skolem_rewrite_free(skolem_rewrite* r);
SKOLEM_API skolem_status skolem_rewrite_psi(const skolem_rewrite* r,
                                            skolem_formula** out);
SKOLEM_API size_t skolem_rewrite_param_count(const skolem_rewrite* r);
/* The i-th code variable: its name, sign pattern (one 0/1 per tuple
 * variable), polarity and squarefree code. */
SKOLEM_API skolem_status skolem_rewrite_param(const skolem_rewrite* r,
                                              size_t i, char** name,
                                              char** pattern,
                                              skolem_polarity* polarity,
                                              char** code);

#ifdef __cplusplus
}
#endif

#endif /* SKOLEM_SKOLEM_H_ */
