#ifndef SPECTRA_H
#define SPECTRA_H

/* C interface to the alpha-spectral digraph library. All functions return a
 * status code; spectra_last_error() describes the most recent failure on the
 * calling thread. Strings returned through out-parameters are heap-allocated
 * and must be released with spectra_string_free(). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct spectra_digraph spectra_digraph; /* opaque */

typedef enum {
  SPECTRA_OK = 0,
  SPECTRA_ERR_INVALID = 1,   /* bad arguments, parse failure, unknown id */
  SPECTRA_ERR_NUMERIC = 2,   /* non-convergence or bracket failure */
  SPECTRA_ERR_FALSIFIED = 3, /* verification produced counterexamples */
} spectra_status;

const char* spectra_last_error(void);
void spectra_string_free(char* s);

/* Family text syntax: C(n), R(p1,...), Inf(p,q,s), Th(k1,...;l1,...),
 * CnG(n,g), ThHat(n). */
spectra_status spectra_family_parse(const char* text, spectra_digraph** out);
spectra_status spectra_family_canonical(const char* text, char** out);
spectra_status spectra_digraph_from_json(const char* json, spectra_digraph** out);
spectra_status spectra_digraph_to_json(const spectra_digraph* g, char** out);
void spectra_digraph_free(spectra_digraph* g);
int spectra_digraph_order(const spectra_digraph* g);
int spectra_digraph_size(const spectra_digraph* g);

typedef struct {
  double rho;
  double residual;
  long iterations;
} spectra_radius_result;

/* Power iteration on the shifted alpha-matrix; the digraph must be strongly
 * connected. */
spectra_status spectra_radius(const spectra_digraph* g, double alpha, double tol,
                              spectra_radius_result* out);
spectra_status spectra_radius_bisect(const spectra_digraph* g, double alpha, double lo, double hi,
                                     double tol, double* out);
/* Perron vector (unit 1-norm); buf must hold at least n doubles. */
spectra_status spectra_perron_vector(const spectra_digraph* g, double alpha, double tol,
                                     double* buf, size_t buflen);

/* det(xI - A_alpha) via LU. */
spectra_status spectra_charpoly_oracle(const spectra_digraph* g, double x, double alpha,
                                       double* out);
/* Closed-form characteristic polynomial of a family instance. */
spectra_status spectra_charpoly_closed(const char* family_text, double x, double alpha,
                                       double* out);

/* Reference tables as RFC-4180 CSV (rank,spec,rho). */
spectra_status spectra_table_inf_csv(int m, double alpha, int top, char** out);
spectra_status spectra_table_theta_csv(int m, int s, int t, double alpha, int top, char** out);

/* Theorem verification. theorem_id is one of: rose_monotone, inf_max,
 * c_ordering, theta_block, theta_family, joint_extremal, girth_chain,
 * first_four, delta_threshold. params_json carries the integer/real
 * parameters, e.g. {"m":15,"alpha":0.5}. Writes the TheoremReport JSON and
 * returns SPECTRA_ERR_FALSIFIED when counterexamples were found. */
spectra_status spectra_verify(const char* theorem_id, const char* params_json, char** report_out);

/* Gap scan CSV for the alpha > 1/2 conjecture; alphas may be NULL for the
 * default grid 0.55..0.95. */
spectra_status spectra_conjecture_csv(int n_lo, int n_hi, const double* alphas, size_t n_alphas,
                                      char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPECTRA_H */
