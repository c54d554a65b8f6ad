/* C interface to the momentforge library.
 *
 * Polynomials live behind the opaque mf_poly handle. Every call returns an
 * mf_status; on failure mf_last_error() describes the problem (per thread).
 * Strings handed out through char** arguments belong to the caller and are
 * released with mf_string_free.
 */
#ifndef MOMENTFORGE_H
#define MOMENTFORGE_H

#include <stddef.h>

#if defined(_WIN32)
#define MF_API __declspec(dllexport)
#else
#define MF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mf_poly mf_poly;

typedef enum mf_status {
  MF_OK = 0,
  MF_ERR_ARGUMENT = 1,    /* null pointer, bad flag */
  MF_ERR_DEGENERATE = 2,  /* zero polynomial */
  MF_ERR_DIMENSION = 3,   /* (n, d) mismatch, index out of range */
  MF_ERR_DOMAIN = 4,      /* precondition violated */
  MF_ERR_PARSE = 5,
  MF_ERR_UNSUPPORTED = 6,
  MF_ERR_INTERNAL = 7
} mf_status;

/* coefficient kinds reported by mf_poly_info */
enum { MF_KIND_EXACT = 0, MF_KIND_FLOAT = 1, MF_KIND_PARAM = 2 };

/* arithmetic for results: AUTO follows the input (exact, float, or
 * symbolic for parametric input) */
enum { MF_AUTO = 0, MF_EXACT = 1, MF_FLOAT = 2 };

MF_API const char *mf_version(void);
MF_API const char *mf_last_error(void);
MF_API void mf_string_free(char *s);

MF_API mf_status mf_poly_from_json(const char *json, mf_poly **out);
/* text syntax, e.g. "x^3 + y^3", "sqrt(2)*x*z^2 + y^3", "b1*x^2*z + x*y^2" */
MF_API mf_status mf_poly_from_text(const char *text, int n, mf_poly **out);
MF_API void mf_poly_free(mf_poly *p);
MF_API mf_status mf_poly_info(const mf_poly *p, int *n, int *d, int *kind);
MF_API mf_status mf_poly_to_json(const mf_poly *p, char **out);
MF_API mf_status mf_poly_to_text(const mf_poly *p, char **out);

/* moment matrix m(f) = 2(H(f) - (d/n)I) and H(f) itself, rendered as
 * text (json = 0) or JSON (json = 1) */
MF_API mf_status mf_moment(const mf_poly *p, int mode, int json, char **out);
MF_API mf_status mf_hermitian(const mf_poly *p, int mode, int json, char **out);
/* row-major n*n doubles; capacity counts doubles */
MF_API mf_status mf_moment_values(const mf_poly *p, double *out, size_t capacity);
MF_API mf_status mf_sqlength(const mf_poly *p, int mode, int json, char **out);
MF_API mf_status mf_sqlength_value(const mf_poly *p, double *out);
/* gradient of the squared length over the full monomial basis */
MF_API mf_status mf_grad(const mf_poly *p, int mode, int json, char **out);
/* (1/|f|^2) d/dt |exp(t E_ij).f|^2 at t = 0, 0-based i, j */
MF_API mf_status mf_flow(const mf_poly *p, int i, int j, int mode, char **out);

MF_API mf_status mf_verify(const mf_poly *p, double *residual, int *exact_zero);
MF_API mf_status mf_fixed_point(const mf_poly *p, int *fixed);
MF_API mf_status mf_torus_canonical(const mf_poly *p, mf_poly **out);

MF_API mf_status mf_monomials(int n, int d, int json, char **out);
MF_API mf_status mf_orbits(int n, int d, int terms, int all_vars, int json, char **out);
MF_API mf_status mf_diagonal(int n, int d, int terms, int json, char **out);
MF_API mf_status mf_critical(int n, int d, int terms, double tol, int json, char **out);
/* which: "cubics", "quartics" or "all" */
MF_API mf_status mf_reproduce(const char *which, int json, char **out, int *all_match);
MF_API mf_status mf_emit_points(const mf_poly *p, double box, int samples, int json, char **out,
                                size_t *count);

#ifdef __cplusplus
}
#endif

#endif
