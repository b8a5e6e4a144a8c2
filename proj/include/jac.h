/*
 * C API of the integro-differential operator kernel. All objects are opaque
 * handles owned
 * by the library; every function returns a status code and reports details
 * through jac_last_error(). Strings returned through out-parameters are
 * heap-allocated and must be released with jac_str_free().
 */
#ifndef JAC_H
#define JAC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct jac_elem jac_elem;   /* operator (arity n) */
typedef struct jac_poly jac_poly;   /* polynomial in x_1..x_n */
typedef struct jac_ideal jac_ideal; /* two-sided ideal in normal form */

typedef enum jac_rc {
    JAC_OK = 0,
    JAC_ERR_PARSE = 2,  /* syntax or arity error in input text */
    JAC_ERR_DOMAIN = 3, /* domain errors: not a unit, singular matrix, ... */
    JAC_ERR_ARG = 4     /* null handle or invalid argument */
} jac_rc;

/* Thread-local diagnostics for the most recent failing call. */
const char* jac_last_error(void);      /* human-readable message */
const char* jac_last_error_kind(void); /* taxonomy tag, e.g. "NotAUnit(SingularMatrix)" */

void jac_str_free(char* s);
void jac_elem_free(jac_elem* e);
void jac_poly_free(jac_poly* p);
void jac_ideal_free(jac_ideal* a);

/* Operators ---------------------------------------------------------- */

jac_rc jac_elem_parse(const char* src, int n, jac_elem** out);
jac_rc jac_elem_arity(const jac_elem* e, int* out);
jac_rc jac_elem_pretty(const jac_elem* e, char** out);
jac_rc jac_elem_json(const jac_elem* e, char** out);

jac_rc jac_elem_add(const jac_elem* a, const jac_elem* b, jac_elem** out);
jac_rc jac_elem_mul(const jac_elem* a, const jac_elem* b, jac_elem** out);
jac_rc jac_elem_theta(const jac_elem* e, jac_elem** out);

/*
 * Unit factorization and inversion. Any out-parameter may be NULL when the
 * caller does not need it. The factorization JSON carries lambda, the
 * H-unit exponents (one object for arity 1, a list for arity n), the matrix
 * part and det(1+f).
 */
jac_rc jac_elem_invert(const jac_elem* e, jac_elem** inverse, char** factorization_json,
                       char** factorization_pretty);

/* Polynomials and the module action ---------------------------------- */

jac_rc jac_poly_parse(const char* src, int n, jac_poly** out);
jac_rc jac_poly_pretty(const jac_poly* p, char** out);
jac_rc jac_poly_json(const jac_poly* p, char** out);

jac_rc jac_apply(const jac_elem* e, const jac_poly* p, jac_poly** out);
/* Solve e y = p for y; e must be invertible. */
jac_rc jac_solve(const jac_elem* e, const jac_poly* p, jac_poly** out);

/* Prime spectrum and the ideal lattice ------------------------------- */

jac_rc jac_spec_text(int n, int as_dot, char** out);
jac_rc jac_ideal_count(int n, uint64_t* out);

jac_rc jac_ideal_parse(const char* src, int n, jac_ideal** out);
jac_rc jac_ideal_pretty(const jac_ideal* a, char** out);
jac_rc jac_ideal_json(const jac_ideal* a, char** out);
jac_rc jac_ideal_class(const jac_ideal* a, char** out);
/* The unique factorization into incomparable primes, e.g. "p{1} * p{2}". */
jac_rc jac_ideal_factor_text(const jac_ideal* a, char** out);
/* The same factorization as {"n": n, "primes": [[index...], ...]}. */
jac_rc jac_ideal_factor_json(const jac_ideal* a, char** out);

#ifdef __cplusplus
}
#endif

#endif /* JAC_H */
