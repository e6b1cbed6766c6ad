/*
 * C interface to the cplstab library: exact basis vectors of the local Weyl
 * modules realized in charged Fock space, the straightening engine, the
 * stable direct-limit basis and the verification suites.
 *
 * All objects are opaque handles. Every function that can fail returns a
 * cplstab_status; on failure the thread-local message from
 * cplstab_last_error() describes what went wrong. Strings returned through
 * char** outputs are heap-allocated and must be released with
 * cplstab_string_free().
 */
#ifndef CPLSTAB_H
#define CPLSTAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cplstab_status {
  CPLSTAB_OK = 0,
  CPLSTAB_ERROR_INVALID_INPUT = 1,
  CPLSTAB_ERROR_CHECK_FAILED = 2,
  CPLSTAB_ERROR_INTERNAL = 3
} cplstab_status;

typedef struct cplstab_vector cplstab_vector; /* exact vector in the Fock model */
typedef struct cplstab_poly cplstab_poly;     /* exact polynomial in h[-1], h[-2], ... */

/* Message for the most recent failure on this thread; empty string if none. */
const char* cplstab_last_error(void);

void cplstab_string_free(char* s);
void cplstab_vector_free(cplstab_vector* v);
void cplstab_poly_free(cplstab_poly* p);

/* ---- vectors ----------------------------------------------------------- */

/* Normalized basis vector CL(xi); xi serialized as "n:k:lambda" ("4:2:2,1"). */
cplstab_status cplstab_vector_cl(const char* xi, cplstab_vector** out);
/* Plain basis vector B(xi). */
cplstab_status cplstab_vector_b(const char* xi, cplstab_vector** out);
/* Raising-operator basis vector from the lowest weight vector. */
cplstab_status cplstab_vector_bbar(const char* xi, cplstab_vector** out);
/* Weyl module generator w_n. */
cplstab_status cplstab_vector_wn(int n, cplstab_vector** out);
/* Translation operator applied to a vector. */
cplstab_status cplstab_vector_translate(const cplstab_vector* v, int p, cplstab_vector** out);

cplstab_status cplstab_vector_text(const cplstab_vector* v, char** out);
cplstab_status cplstab_vector_json(const cplstab_vector* v, char** out);
cplstab_status cplstab_vector_from_json(const char* json, cplstab_vector** out);
/* 1 when equal, 0 when different. Exact comparison. */
int cplstab_vector_equal(const cplstab_vector* a, const cplstab_vector* b);

/* ---- polynomials ------------------------------------------------------- */

/* Normal ordering of (prod y t^{p_i})(prod x t^{-q_j}); tuples as
 * comma-separated integers ("1,2" / "3,3"). */
cplstab_status cplstab_poly_straighten(const char* p_csv, const char* q_csv, cplstab_poly** out);
/* Stable polynomial form f for a partition ("2,1"; "" for the empty one). */
cplstab_status cplstab_poly_f_lambda(const char* lambda_csv, cplstab_poly** out);

cplstab_status cplstab_poly_text(const cplstab_poly* p, char** out);
cplstab_status cplstab_poly_json(const cplstab_poly* p, char** out);
cplstab_status cplstab_poly_from_json(const char* json, cplstab_poly** out);
int cplstab_poly_equal(const cplstab_poly* a, const cplstab_poly* b);

/* ---- batch queries ----------------------------------------------------- */

/* Dimension of the n-th Weyl module (2^n) as a decimal string. */
cplstab_status cplstab_dim(int n, char** out);

/* Stable basis of the weight space indexed by (j, d), as JSON. */
cplstab_status cplstab_stable_basis_json(int j, int d, char** out);

/* Runs a verification suite. suite is one of the names from
 * cplstab_suite_names(), or "all". n_max < 0 selects the default bound.
 * *passed is set to 1/0; the report text goes to *report (one line per
 * suite). Returns CPLSTAB_ERROR_CHECK_FAILED when a suite fails, which still
 * fills *report. */
cplstab_status cplstab_check(const char* suite, int n_max, uint64_t seed, char** report,
                             int* passed);

/* Newline-separated list of the known suite names. */
cplstab_status cplstab_suite_names(char** out);

#ifdef __cplusplus
}
#endif

#endif /* CPLSTAB_H */
