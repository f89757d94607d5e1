#ifndef SCHUBERT_C_H
#define SCHUBERT_C_H

/*
 * C interface to the equivariant Schubert calculus engine.
 *
 * All computations run against an opaque context fixing the rank n, the
 * exterior power degree k, the coefficient mode of the polynomial p and the
 * working basis.  Results come back as heap strings in the requested format
 * ("json", "text" or "latex"); release them with schub_free.  Every call
 * returns a status code; on failure schub_last_error() describes the
 * problem for the calling thread.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct schub_ctx schub_ctx;

typedef enum {
  SCHUB_OK = 0,
  SCHUB_ERR_ARG = 1,      /* invalid argument or unparsable input */
  SCHUB_ERR_VERIFY = 2,   /* an independent recomputation disagreed */
  SCHUB_ERR_INTERNAL = 3  /* internal inconsistency */
} schub_status;

const char* schub_version(void);
const char* schub_last_error(void);
void schub_free(char* s);

/* mode: "classical" | "generic" | "torus"; basis: "eps" | "mu" (mu needs
 * torus mode).  1 <= k <= n <= 8. */
schub_status schub_ctx_new(int n, int k, const char* mode, const char* basis, schub_ctx** out);
void schub_ctx_free(schub_ctx* ctx);

/* D_h applied to the basis wedge of the comma-separated index, in the
 * context basis (Pieri in the epsilon basis, equivariant Pieri in mu). */
schub_status schub_pieri(schub_ctx* ctx, int h, const char* index, const char* format, int verify,
                         char** out);

/* Structure constants of class(I) * class(J). */
schub_status schub_multiply(schub_ctx* ctx, const char* index_i, const char* index_j,
                            const char* format, int verify, char** out);

/* Matrix of the class operator of the index over the ordered wedge basis. */
schub_status schub_matrix(schub_ctx* ctx, const char* index, const char* format, int verify,
                          char** out);

/* The k presentation relations; *all_zero reports whether every relation is
 * the zero matrix (it always should be). */
schub_status schub_relations(schub_ctx* ctx, const char* format, char** out, int* all_zero);

/* Giambelli: class operator applied to the unit wedge; *match reports
 * whether the result is the basis wedge of the index. */
schub_status schub_giambelli(schub_ctx* ctx, const char* index, const char* format, int verify,
                             char** out, int* match);

/* GKM divisibility over the fixed-point graph for the diagonal of the class
 * operator matrix of the index, or of every basis index when index is NULL.
 * Torus contexts only. */
schub_status schub_gkm_check(schub_ctx* ctx, const char* index, const char* format, char** out,
                             int* all_pass);

/* Same check for an externally supplied operator matrix in the documented
 * JSON form (either one object or {"operators":[...]}); the context is
 * rebuilt from the embedded n/k/basis fields. */
schub_status schub_gkm_check_matrix_json(const char* matrix_json, const char* format, char** out,
                                         int* all_pass);

/* Full structure-constant table for I <= J in basis order; JSON format
 * streams one object per line. */
schub_status schub_table(schub_ctx* ctx, const char* format, int verify, char** out);

/* Divisorial Pieri product for the index (torus contexts). */
schub_status schub_divisorial(schub_ctx* ctx, const char* index, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SCHUBERT_C_H */
