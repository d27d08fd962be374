/* Copyright (c) 2026 dpring developers
 * SPDX-License-Identifier: Apache-2.0
 *
 * C API for the dpring library: exact computation in iterated differential
 * polynomial rings over Q and F_p (normal forms, Groebner bases, ideal
 * powers, truncated power intersections, zero certificates, Lie algebra
 * checks).
 *
 * Conventions:
 *   - Every function that can fail returns dpr_status; results come back
 *     through out-parameters. DPR_OK is 0.
 *   - On failure, dpr_last_error() returns a thread-local message.
 *   - Objects are opaque handles freed with their dpr_*_free function.
 *     Handles are independent: a poly stays valid after its ring handle is
 *     freed.
 *   - Strings returned through char** are heap-allocated; release them with
 *     dpr_string_free.
 *   - Variable indices are 0-based here; documents and reports use 1-based
 *     numbering.
 */

#ifndef DPRING_H
#define DPRING_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dpr_status {
  DPR_OK = 0,
  DPR_ERR_USAGE = 1,   /* unparseable input: expressions, literals, documents */
  DPR_ERR_DOMAIN = 2,  /* mathematically invalid request on well-formed input */
  DPR_ERR_ARG = 3,     /* null handle or out-parameter */
  DPR_ERR_INTERNAL = 4
} dpr_status;

typedef struct dpr_ring dpr_ring;
typedef struct dpr_poly dpr_poly;
typedef struct dpr_gb dpr_gb;
typedef struct dpr_lie dpr_lie;

/* Message for the most recent failure on this thread. */
const char* dpr_last_error(void);

void dpr_string_free(char* s);

/* ---- rings ---------------------------------------------------------- */

/* json: {"field": "Q" | {"Fp": p}, "vars": ["x1", ...],
 *        "delta": {"i,j": "<expression>", ...}}  (keys 1-based, j < i) */
dpr_status dpr_ring_from_json(const char* json_text, dpr_ring** out);
void dpr_ring_free(dpr_ring* r);
dpr_status dpr_ring_nvars(const dpr_ring* r, int* out);
/* 1 when the derivation table passes validation. */
dpr_status dpr_ring_is_valid(const dpr_ring* r, int* out);
/* 1 when every table entry has total degree <= 1. */
dpr_status dpr_ring_is_filtered(const dpr_ring* r, int* out);
/* Validation report as a JSON document (ok flag plus violation list). */
dpr_status dpr_ring_validation_json(const dpr_ring* r, char** out);

/* ---- polynomials ----------------------------------------------------- */

dpr_status dpr_poly_parse(const dpr_ring* r, const char* expr, dpr_poly** out);
void dpr_poly_free(dpr_poly* p);
dpr_status dpr_poly_to_string(const dpr_poly* p, char** out);
dpr_status dpr_poly_add(const dpr_poly* a, const dpr_poly* b, dpr_poly** out);
dpr_status dpr_poly_sub(const dpr_poly* a, const dpr_poly* b, dpr_poly** out);
dpr_status dpr_poly_mul(const dpr_poly* a, const dpr_poly* b, dpr_poly** out);
/* Total degree; -1 for the zero polynomial. */
dpr_status dpr_poly_degree(const dpr_poly* p, int* out);
dpr_status dpr_poly_equal(const dpr_poly* a, const dpr_poly* b, int* out);
dpr_status dpr_poly_is_central(const dpr_poly* p, int* out);
dpr_status dpr_poly_is_normal(const dpr_poly* p, int* out);
/* Leibniz extension of table row i applied to p (p must use variables < i). */
dpr_status dpr_poly_apply_derivation(const dpr_ring* r, int i, const dpr_poly* p, dpr_poly** out);

/* ---- Groebner bases --------------------------------------------------- */

/* gens: comma-separated expressions. two_sided: 0 for a left basis. */
dpr_status dpr_gb_compute(const dpr_ring* r, const char* gens, int two_sided, dpr_gb** out);
void dpr_gb_free(dpr_gb* g);
dpr_status dpr_gb_size(const dpr_gb* g, size_t* out);
dpr_status dpr_gb_element(const dpr_gb* g, size_t index, char** out);
dpr_status dpr_gb_reduce(const dpr_gb* g, const dpr_poly* p, dpr_poly** out);
dpr_status dpr_gb_member(const dpr_gb* g, const dpr_poly* p, int* out);
/* dim of the quotient by a two-sided basis; finite set to 0 or 1. */
dpr_status dpr_gb_quotient_dim(const dpr_gb* g, int* finite, unsigned long long* dim);

/* ---- Lie algebras ----------------------------------------------------- */

/* json: {"field": ..., "dim": n, "brackets": {"i,j": [c1..cn], ...}} (i > j) */
dpr_status dpr_lie_from_json(const char* json_text, dpr_lie** out);
void dpr_lie_free(dpr_lie* l);
dpr_status dpr_lie_is_valid(const dpr_lie* l, int* out);
dpr_status dpr_lie_is_adapted(const dpr_lie* l, int* out);
dpr_status dpr_lie_is_solvable(const dpr_lie* l, int* out);
dpr_status dpr_lie_is_nilpotent(const dpr_lie* l, int* out);
dpr_status dpr_lie_derived_is_nilpotent(const dpr_lie* l, int* out);
/* Enveloping-algebra presentation; needs an adapted basis. */
dpr_status dpr_lie_to_ring(const dpr_lie* l, dpr_ring** out);

/* ---- commands --------------------------------------------------------- */

/* Runs one CLI command (argv without the program name): validate, nf, mul,
 * gb, powint, iterate, cert, invariant-factor, lie, verify. Returns the
 * process exit code (0 ok, 1 domain error, 2 usage error) and fills the
 * report text; out/err may each be NULL when not wanted. */
int dpr_run_command(int argc, const char* const* argv, char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* DPRING_H */
