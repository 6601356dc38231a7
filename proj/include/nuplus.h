/* nuplus: exact correction terms of lens spaces and knot surgeries,
 * V-sequences, and the nu^+ invariant of cable knots.
 *
 * All fallible functions return a status code; a human-readable message for
 * the most recent failure on the calling thread is available from
 * nuplus_last_error(). Strings returned through char** out-parameters are
 * allocated by the library and must be released with nuplus_string_free().
 * Rational results are rendered exactly as "num/den" ("num" when the
 * denominator is 1), e.g. "7/2", "0", "-1/10".
 */
#ifndef NUPLUS_H
#define NUPLUS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NUPLUS_API __declspec(dllexport)
#else
#define NUPLUS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nuplus_status {
    NUPLUS_OK = 0,
    NUPLUS_EDOMAIN = 1,     /* invalid mathematical input */
    NUPLUS_EPARSE = 2,      /* knot-expression syntax error */
    NUPLUS_EVERIFY = 3,     /* a verification suite failed */
    NUPLUS_EREGIME = 4,     /* formula invoked outside its supported regime */
    NUPLUS_EINCOMPLETE = 5, /* evaluation only bounds the requested value */
    NUPLUS_EINVAL = 6,      /* null pointer or malformed call */
    NUPLUS_EINTERNAL = 7    /* internal consistency check failed */
} nuplus_status;

/* Opaque handles. */
typedef struct nuplus_knot nuplus_knot; /* a parsed or constructed knot expression */
typedef struct nuplus_eval nuplus_eval; /* the result of evaluating a knot */

NUPLUS_API const char* nuplus_version(void);

/* Message for the most recent failure on this thread ("" if none). The
 * pointer stays valid until the next failing call on the same thread. */
NUPLUS_API const char* nuplus_last_error(void);

/* Byte offset of the most recent syntax error on this thread; meaningful
 * only after a call returned NUPLUS_EPARSE. */
NUPLUS_API size_t nuplus_last_error_position(void);

NUPLUS_API void nuplus_string_free(char* s);

/* --- lens spaces ------------------------------------------------------- */

/* d(L(p,q), i), exact. i may be any integer (reduced mod p). */
NUPLUS_API nuplus_status nuplus_lens_d(int64_t p, int64_t q, int64_t i, char** out);

/* Conjugated label (p+q-1-i) mod p; requires 0 <= i < p. */
NUPLUS_API nuplus_status nuplus_lens_conj_label(int64_t p, int64_t q, int64_t i, int64_t* out);

/* --- Spin^c projections of the reducible surgery ----------------------- */

/* (i - (p-1)(q-1)/2) mod q and mod p; require 0 <= i < pq. */
NUPLUS_API nuplus_status nuplus_phi1(int64_t p, int64_t q, int64_t i, int64_t* out);
NUPLUS_API nuplus_status nuplus_phi2(int64_t p, int64_t q, int64_t i, int64_t* out);

/* --- knot expressions --------------------------------------------------- */

/* Grammar: unknot | torus(p,q) | cable(p,q; <expr>) | v[a,b,...,0]  */
NUPLUS_API nuplus_status nuplus_knot_parse(const char* text, nuplus_knot** out);
NUPLUS_API nuplus_status nuplus_knot_unknot(nuplus_knot** out);
NUPLUS_API nuplus_status nuplus_knot_torus(int64_t p, int64_t q, nuplus_knot** out);
NUPLUS_API nuplus_status nuplus_knot_cable(int64_t p, int64_t q, const nuplus_knot* companion,
                                           nuplus_knot** out);
NUPLUS_API nuplus_status nuplus_knot_explicit_v(const int64_t* values, size_t count,
                                                nuplus_knot** out);
NUPLUS_API nuplus_status nuplus_knot_render(const nuplus_knot* knot, char** out);
NUPLUS_API void nuplus_knot_free(nuplus_knot* knot);

/* --- evaluation --------------------------------------------------------- */

NUPLUS_API nuplus_status nuplus_knot_eval(const nuplus_knot* knot, nuplus_eval** out);
NUPLUS_API void nuplus_eval_free(nuplus_eval* eval);

/* 1 when the V-sequence is fully determined, 0 when only bounded. */
NUPLUS_API int nuplus_eval_complete(const nuplus_eval* eval);

/* nu^+ when complete; otherwise the best known lower bound. */
NUPLUS_API nuplus_status nuplus_eval_nu(const nuplus_eval* eval, int64_t* out);

/* Known V-values: the full sequence when complete, else the window prefix. */
NUPLUS_API size_t nuplus_eval_v_len(const nuplus_eval* eval);
NUPLUS_API nuplus_status nuplus_eval_v_at(const nuplus_eval* eval, size_t index, int64_t* out);

/* Comma-separated V-values, e.g. "2,1,1,1,0". Empty string if none known. */
NUPLUS_API nuplus_status nuplus_eval_v_string(const nuplus_eval* eval, char** out);

/* Regime provenance notes accumulated per cable level. */
NUPLUS_API size_t nuplus_eval_note_count(const nuplus_eval* eval);
NUPLUS_API const char* nuplus_eval_note(const nuplus_eval* eval, size_t index);

/* 1 when every successive drop of the known V-values is at most 1. */
NUPLUS_API int nuplus_eval_unit_drops(const nuplus_eval* eval);

/* --- V-sequences and surgery -------------------------------------------- */

/* V-sequence of the torus knot T_{p,q} as a comma list. The second form is
 * the independent torsion-coefficient route (for cross-checking). */
NUPLUS_API nuplus_status nuplus_torus_v(int64_t p, int64_t q, char** out);
NUPLUS_API nuplus_status nuplus_torus_v_oracle(int64_t p, int64_t q, char** out);

/* d(S^3_{p/q}(K), i) where K is a fully evaluated knot; 0 <= i <= p-1.
 * Returns NUPLUS_EINCOMPLETE if the evaluation did not determine the
 * V-sequence. */
NUPLUS_API nuplus_status nuplus_surgery_d(int64_t p, int64_t q, int64_t i,
                                          const nuplus_eval* knot, char** out);

/* --- cabling formulas ---------------------------------------------------- */

/* nu^+(K_{p,q}) = p*nu + (p-1)(q-1)/2 for q >= (2nu-1)p - 1. On success sets
 * *value and, if regime_tag is non-NULL, a tag ("proof-backed" or
 * "paper-stated, proof-gap"). Below the regime returns NUPLUS_EREGIME and
 * stores ceil(pq/2) in *lower_bound when non-NULL. */
NUPLUS_API nuplus_status nuplus_nu_cable(int64_t nu, int64_t p, int64_t q, int64_t* value,
                                         int64_t* lower_bound, char** regime_tag);

/* ceil(pq/2); requires q < (2nu-1)p + 1. */
NUPLUS_API nuplus_status nuplus_nu_cable_lower_bound(int64_t nu, int64_t p, int64_t q,
                                                     int64_t* out);

/* g_4(K_{p,q}) = p*n + (p-1)(q-1)/2 when the companion has nu^+ = g_4 = n;
 * same regime contract as nuplus_nu_cable. */
NUPLUS_API nuplus_status nuplus_g4_cable(int64_t n, int64_t p, int64_t q, int64_t* value,
                                         int64_t* lower_bound, char** regime_tag);

/* Unconditional upper bound p*g4 + (p-1)(q-1)/2. */
NUPLUS_API nuplus_status nuplus_g4_cable_upper_bound(int64_t g4, int64_t p, int64_t q,
                                                     int64_t* out);

/* nu^+ of a quasi-alternating knot from its (even) signature. */
NUPLUS_API nuplus_status nuplus_nu_quasi_alternating(int64_t sigma, int64_t* out);

/* --- verification --------------------------------------------------------- */

/* Called once per property suite with its name, pass flag, and a detail
 * line (range swept, or the counterexample on failure). */
typedef void (*nuplus_verify_callback)(const char* suite, int passed, const char* detail,
                                       void* user);

/* Runs every property suite (max_p >= 2 scales the lens sweeps, seed feeds
 * the randomized ones). Returns NUPLUS_OK when all suites pass,
 * NUPLUS_EVERIFY when any fail. */
NUPLUS_API nuplus_status nuplus_verify(int64_t max_p, uint64_t seed,
                                       nuplus_verify_callback callback, void* user);

#ifdef __cplusplus
}
#endif

#endif /* NUPLUS_H */
