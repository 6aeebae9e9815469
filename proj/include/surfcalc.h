/* surfcalc C API: permutation-group, braid/Hurwitz, orbifold, Beauville,
 * Dynkin and surface-invariant calculators behind a stable C ABI.
 *
 * Conventions:
 *  - every fallible call returns sc_status; SC_OK is zero
 *  - objects are opaque handles released with their sc_*_free function
 *  - strings returned through char** are UTF-8, owned by the caller,
 *    released with sc_string_free; structured results are JSON
 *  - permutations compose right to left: (p o q)(x) = p(q(x))
 *  - sc_last_error() describes the most recent failure on this thread
 */
#ifndef SURFCALC_H
#define SURFCALC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERROR_DEGREE_MISMATCH,
  SC_ERROR_OUT_OF_RANGE,
  SC_ERROR_REPEATED_POINT,
  SC_ERROR_CAP_EXCEEDED,
  SC_ERROR_DEGREE_TOO_LARGE,
  SC_ERROR_RANK_MISMATCH,
  SC_ERROR_STRAND_MISMATCH,
  SC_ERROR_INDEX_OUT_OF_RANGE,
  SC_ERROR_LENGTH_MISMATCH,
  SC_ERROR_NOT_CENTRAL,
  SC_ERROR_REPLAY_FAILED,
  SC_ERROR_NOT_ELLIPTIC,
  SC_ERROR_NOT_INTEGRAL,
  SC_ERROR_NOT_CLOSED,
  SC_ERROR_MEMBER_MISSING,
  SC_ERROR_BOUND_EXCEEDED,
  SC_ERROR_DISCONNECTED,
  SC_ERROR_NOT_ADE,
  SC_ERROR_NOT_EXTENDED,
  SC_ERROR_UNKNOWN_LABEL,
  SC_ERROR_NOT_APPLICABLE,
  SC_ERROR_NOT_FOUND_WITHIN_BOUND,
  SC_ERROR_PARSE,
  SC_ERROR_INTERNAL
} sc_status;

const char* sc_status_name(sc_status status);
const char* sc_last_error(void); /* thread-local message, never NULL */
void sc_string_free(char* s);

/* ----------------------------------------------------- permutations --- */

typedef struct sc_perm sc_perm;
typedef struct sc_elementset sc_elementset;

/* "(5,4,1)(2,6)", "(4..8)" ranges, "id"; 1-based points */
sc_status sc_perm_parse(const char* cycles, int degree, sc_perm** out);
sc_status sc_perm_identity(int degree, sc_perm** out);
void sc_perm_free(sc_perm* p);

int sc_perm_degree(const sc_perm* p);
sc_status sc_perm_compose(const sc_perm* p, const sc_perm* q, sc_perm** out);
sc_status sc_perm_inverse(const sc_perm* p, sc_perm** out);
sc_status sc_perm_order(const sc_perm* p, long long* out);
int sc_perm_equal(const sc_perm* p, const sc_perm* q);
sc_status sc_perm_format(const sc_perm* p, char** out);  /* cycle text */
sc_status sc_perm_to_json(const sc_perm* p, char** out);

sc_status sc_closure(const sc_perm* const* generators, size_t count, size_t cap,
                     sc_elementset** out);
/* full symmetric group on `degree` points, degree <= 9 */
sc_status sc_symmetric_group(int degree, sc_elementset** out);
size_t sc_elementset_size(const sc_elementset* s);
sc_status sc_elementset_get(const sc_elementset* s, size_t index, sc_perm** out);
sc_status sc_elementset_to_json(const sc_elementset* s, char** out);
void sc_elementset_free(sc_elementset* s);

/* witness g with g a g^-1 = a2, g c g^-1 = c2 from an exhaustive scan of
 * the ambient symmetric group (degree <= 9).  found is 0/1; caveat is set
 * for degree 6 where inner automorphisms are not all automorphisms. */
sc_status sc_pair_conjugator(const sc_perm* a, const sc_perm* c,
                             const sc_perm* a2, const sc_perm* c2,
                             sc_perm** witness, int* found, int* degree6_caveat);

/* ----------------------------------------------------------- braids --- */

typedef struct sc_braid sc_braid;
typedef struct sc_freeword sc_freeword;

sc_status sc_braid_parse(const char* text, int strands, sc_braid** out); /* "s1 s2^-1" */
sc_status sc_freeword_parse(const char* text, int rank, sc_freeword** out); /* "g1 g2^-1" */
void sc_braid_free(sc_braid* b);
void sc_freeword_free(sc_freeword* w);

sc_status sc_braid_format(const sc_braid* b, char** out);
sc_status sc_freeword_format(const sc_freeword* w, char** out);

sc_status sc_artin_apply(const sc_braid* b, const sc_freeword* w, sc_freeword** out);
sc_status sc_braid_equal(const sc_braid* b1, const sc_braid* b2, int* out);
sc_status sc_full_twist(int strands, sc_braid** out);
sc_status sc_coxeter_chain(int length, sc_braid** out); /* on length+1 strands */
sc_status sc_braid_permutation(const sc_braid* b, sc_perm** out);

/* --------------------------------------------------- factorizations --- */

typedef struct sc_factorization sc_factorization;

/* {"degree": n, "factors": [perm-or-cycle-string, ...]} */
sc_status sc_factorization_parse(const char* json, sc_factorization** out);
void sc_factorization_free(sc_factorization* f);
sc_status sc_factorization_to_json(const sc_factorization* f, char** out);
sc_status sc_factorization_product(const sc_factorization* f, sc_perm** out);

/* direction 1 = forward (braid generator), 0 = backward (its inverse) */
sc_status sc_hurwitz_move(const sc_factorization* f, int index, int forward,
                          sc_factorization** out);
sc_status sc_simultaneous_conjugate(const sc_factorization* f, const sc_perm* b,
                                    sc_factorization** out);

/* orbit report as JSON; threads >= 1, result independent of thread count */
sc_status sc_hurwitz_orbit(const sc_factorization* f, size_t cap, int mod_conjugation,
                           int threads, size_t representative_limit, char** report);

/* {"verdict": "yes"|"no"|"unknown", "path": [{"i":k,"dir":"f"|"b"},...]} */
sc_status sc_hurwitz_equivalent(const sc_factorization* f1, const sc_factorization* f2,
                                size_t cap, char** result);

/* verified move path carrying the conjugate of f by its h-th factor back
 * to f; JSON array of moves */
sc_status sc_auroux_path(const sc_factorization* f, int h, char** path);

/* apply a JSON move path */
sc_status sc_replay(const sc_factorization* f, const char* path_json,
                    sc_factorization** out);

/* -------------------------------------------------------- orbifolds --- */

/* 0 = elliptic, 1 = parabolic, 2 = hyperbolic */
sc_status sc_triangle_classify(long long m1, long long m2, long long m3, int* out);
sc_status sc_triangle_order(long long m1, long long m2, long long m3, long long* out);

/* signature text "(b; m1,m2,...)" */
sc_status sc_orbifold_euler(const char* signature, long long* numerator,
                            long long* denominator);
sc_status sc_signature_classify(const char* signature, int* out);
sc_status sc_cover_genus(const char* signature, long long group_order, long long* out);

sc_status sc_isogenous_invariants(long long g1, long long g2, long long group_order,
                                  long long* e, long long* chi, long long* k2);
long long sc_zeuthen_segre_bound(long long genus, long long base_genus);
long long sc_pencil_singular_fibres(long long e_total, long long e_section,
                                    long long e_base_locus, int dimension);

/* ------------------------------------------------------- Beauville --- */

/* stabilizer set of the pair (a, c) inside the group generated by them
 * (closure capped at `cap`) */
sc_status sc_sigma_set(const sc_perm* a, const sc_perm* c, size_t cap,
                       sc_elementset** out);

/* unmixed Beauville check inside an explicit closed group given as the
 * closure of `group_generators`; certificate as JSON */
sc_status sc_beauville_check(const sc_perm* a, const sc_perm* c,
                             const sc_perm* a2, const sc_perm* c2,
                             const sc_perm* const* group_generators, size_t count,
                             size_t cap, char** certificate);

/* all unmixed structures on (Z/n)^2 up to simultaneous automorphism;
 * JSON {"n":n,"count":N,"structures":[...]} with at most `limit`
 * structures listed (0 = all) */
sc_status sc_search_abelian(int n, size_t limit, char** result);

sc_status sc_inverting_witness(const sc_perm* a, const sc_perm* c, sc_perm** witness,
                               int* found, int* degree6_caveat);
sc_status sc_orders_triple(const sc_perm* a, const sc_perm* c, long long out[3]);

/* ------------------------------------------------ curve configurations --- */

typedef struct sc_curveconfig sc_curveconfig;

/* {"count": k, "edges": [[i, j], [i, j, mult], ...]} (1-based) */
sc_status sc_curveconfig_parse(const char* json, sc_curveconfig** out);
void sc_curveconfig_free(sc_curveconfig* c);

sc_status sc_dynkin_negative_definite(const sc_curveconfig* c, int* out);
/* {"label": "A3"} or {"label": null, "reason": "..."} */
sc_status sc_dynkin_classify(const sc_curveconfig* c, char** out);
sc_status sc_dynkin_classify_extended(const sc_curveconfig* c, char** out);
/* JSON array of positive coefficients */
sc_status sc_fundamental_cycle(const sc_curveconfig* c, char** out);
sc_status sc_elliptic_divisor(const sc_curveconfig* c, char** out);
/* {"equation": "...", "milnor_number": n, "aut_group": "..."} */
sc_status sc_rdp_data(const char* label, char** out);

/* ------------------------------------------------ surface invariants --- */

typedef struct sc_surface_invariants {
  long long chi;
  long long p_g;
  long long k2;
  long long e;
  long long sigma;
  long long r;  /* meaningful only when r_known */
  int r_known;
  int simply_connected;
} sc_surface_invariants;

sc_status sc_bidouble_invariants(long long a, long long b, long long c, long long d,
                                 sc_surface_invariants* out);
sc_status sc_abc_invariants(long long a, long long b, long long c,
                            sc_surface_invariants* out, long long* moduli_dimension,
                            int* moduli_dimension_applicable);
sc_status sc_manetti_invariants(long long a, long long b, long long n,
                                sc_surface_invariants* out);

sc_status sc_homeo_test(const sc_surface_invariants* s1,
                        const sc_surface_invariants* s2, int* out);
/* 1 = obstructed, 0 = no obstruction */
sc_status sc_diffeo_obstruction(const sc_surface_invariants* s1,
                                const sc_surface_invariants* s2, int* out);

/* JSON array of h objects {"a":..,"b":..,"c":..,"d":..} */
sc_status sc_box_family(int h, int max_exponent, int max_scale, char** out);

sc_status sc_plurigenus(long long chi, long long k2, long long m, long long* out);
sc_status sc_hilbert_5canonical(long long chi, long long k2, long long m,
                                long long* out);

/* {"all": bool, "clauses": {...}} */
sc_status sc_nondef_hypotheses(long long a, long long b, long long c, long long k,
                               char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SURFCALC_H */
