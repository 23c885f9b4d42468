#ifndef ASWDIST_H
#define ASWDIST_H

/* C interface to the conductor-distribution library. All report functions
 * write a heap-allocated JSON document into *out_json (free it with
 * asw_string_free) and return ASW_OK, or an error status with *out_json set
 * to a JSON object {"error": ..., "message": ...}. Big integers and
 * rationals are serialized as decimal strings. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  ASW_OK = 0,
  ASW_ERR_INVALID_ARGUMENT = 1,
  ASW_ERR_NON_PRIME = 2,
  ASW_ERR_NON_POSITIVE_EXPONENT = 3,
  ASW_ERR_TRIVIAL_GROUP = 4,
  ASW_ERR_OUT_OF_RANGE = 5,
  ASW_ERR_NOT_INTERMEDIATE = 6,
  ASW_ERR_NOT_PROPER = 7,
  ASW_ERR_INVALID_INDEX_VECTOR = 8,
  ASW_ERR_RESOURCE_LIMIT = 9,
  ASW_ERR_MISMATCHED_CHARACTERISTIC = 10,
  ASW_ERR_TRUNCATION_TOO_SMALL = 11,
  ASW_ERR_TRUNCATION_TOO_LARGE = 12,
  ASW_ERR_NON_SQUAREFUL_CONDUCTOR = 13,
  ASW_ERR_INSUFFICIENT_DATA = 14,
  ASW_ERR_INTERNAL_CHECK_FAILED = 15,
  ASW_ERR_UNKNOWN = 99
} asw_status;

const char* asw_status_name(asw_status s);

/* Opaque handle for a finite abelian p-group given by its cyclic type
 * e_1 >= e_2 >= ... >= 1 (the group is the product of Z/p^{e_j}). */
typedef struct asw_group asw_group;

asw_status asw_group_new(unsigned p, const int* type, size_t type_len,
                         asw_group** out);
void asw_group_free(asw_group* g);

/* Signature, alpha/beta/m~/a_p/d_p/delta and the local discriminant-exponent
 * ratio of the group. */
asw_status asw_group_invariants(const asw_group* g, char** out_json);

/* The subgroup-counting polynomial f_G, the weight polynomial e(X) and
 * |Aut(G)|; when index_csv is non-NULL (comma-separated decimal values
 * x_i = [p^{i-1}A : p^iA]), also |Hom|, |Epi| and kappa at that vector. */
asw_status asw_delsarte(const asw_group* g, const char* index_csv,
                        char** out_json);

/* Local Euler factor Phi = Lambda * Psi truncated at u^trunc, coefficients
 * as integer polynomials in the residue norm, plus the identity verdict. */
asw_status asw_local_factor(const asw_group* g, int trunc, char** out_json);

/* Conductor-count series of F_q(T) up to t^trunc and the counting function
 * C(q^n); q must be a power of the group prime. */
asw_status asw_global_series(const asw_group* g, unsigned q, int trunc,
                             char** out_json);

/* Asymptotic diagnostic report (normalized ratios along residue classes). */
asw_status asw_diagnose(const asw_group* g, unsigned q, int trunc,
                        char** out_json);

/* Discriminant bounds. The conductor for the norm bound is given as parallel
 * arrays of place degrees and exponents. */
asw_status asw_bounds_disc(const asw_group* g, long f_exp, char** out_json);
asw_status asw_bounds_norm(const asw_group* g, const int* degs,
                           const int* exps, size_t len, char** out_json);
asw_status asw_bounds_summary(const asw_group* g, char** out_json);
asw_status asw_bounds_zseries(unsigned q, unsigned p, int trunc,
                              char** out_json);

/* One-unit group oracle in (F_q[T]/pi^m)^x; pi is parsed as a polynomial in
 * T, e.g. "T^2+T+1". */
asw_status asw_oracle_unit(unsigned q, const char* pi, int m, char** out_json);

/* Artin-Schreier oracle. divisor syntax: semicolon-separated "place:exp"
 * entries with place a monic irreducible polynomial or "inf"; the empty
 * string is the trivial divisor. */
asw_status asw_oracle_asw_count(unsigned p, const char* divisor,
                                char** out_json);
asw_status asw_oracle_asw_counting(unsigned p, int n, int rank,
                                   char** out_json);

/* Engine-vs-oracle comparison table for G = (Z/p)^rank with rank = number of
 * entries of the cyclic type (all must be 1) and q = p. *out_equal is 1 iff
 * every degree agrees. */
asw_status asw_compare(const asw_group* g, unsigned q, int trunc,
                       int* out_equal, char** out_json);

void asw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ASWDIST_H */
