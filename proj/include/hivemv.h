/* C surface of the hive / crystal-combinatorics library.
 *
 * Conventions shared by every function here:
 *   - Coweights travel as int64 arrays of length n (or k*n row-major for
 *     weight lists).  Structured data (hives, subset tables, tetrahedra,
 *     matrices, reports) travels as JSON strings in the schemas documented
 *     in the library's README.
 *   - Functions returning variable-size data allocate a NUL-terminated
 *     string into *out; release it with hm_free.  On failure *out is left
 *     untouched.
 *   - The return code classifies failures; hm_last_error() returns a
 *     thread-local human-readable message for the most recent failure on
 *     the calling thread.
 */

#ifndef HIVEMV_H
#define HIVEMV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hm_status {
  HM_OK = 0,
  HM_EINVAL = 1,   /* rejected input: dominance, rank coherence, ranges */
  HM_EPARSE = 2,   /* malformed JSON or wrong schema */
  HM_EVERIFY = 3,  /* input parsed but fails the defining conditions */
  HM_EINTERNAL = 4 /* invariant broken inside the library */
} hm_status;

const char* hm_last_error(void);
void hm_free(char* buf);

/* --- enumeration ------------------------------------------------------- */

/* All hives with boundary (la, mu, nu); JSON array.  reversed != 0 flips
 * every rhombus inequality (calibration control). */
hm_status hm_hive_enumerate(const int64_t* la, const int64_t* mu, const int64_t* nu,
                            int32_t n, int32_t reversed, char** out);

/* Rhombus violations of a hive JSON object; JSON array, empty = valid. */
hm_status hm_hive_check(const char* hive_json, int32_t reversed, char** out);

/* All subset tables with the matching boundary; JSON array. */
hm_status hm_bz_enumerate(const int64_t* la, const int64_t* mu, const int64_t* nu,
                          int32_t n, char** out);

/* Exchange, edge and monotonicity violations of a subset-table JSON
 * object; JSON report object. */
hm_status hm_bz_check(const char* bz_json, char** out);

/* All k-tuple tetrahedra (k = weight count, 2..4) with the given boundary
 * list, weights row-major k*n; JSON array. */
hm_status hm_khive_enumerate(const int64_t* weights, int32_t k, int32_t n, char** out);

/* Completes the tetrahedron over two faces sharing an edge coweight and
 * returns {"tetrahedron":..., "r":..., "s":...}. */
hm_status hm_khive_associate(const char* p_hive_json, const char* q_hive_json, char** out);

/* --- oracles ----------------------------------------------------------- */

hm_status hm_lr_coefficient(const int64_t* la, const int64_t* mu, const int64_t* nu,
                            int32_t n, int64_t* out);

hm_status hm_triple_invariant_dim(const int64_t* la, const int64_t* mu, const int64_t* chi,
                                  int32_t n, int64_t* out);

/* weights row-major k*n, any k >= 2. */
hm_status hm_multi_invariant_dim(const int64_t* weights, int32_t k, int32_t n, int64_t* out);

/* --- the hive <-> subset-table translation ----------------------------- */

hm_status hm_phi_forward(const char* bz_json, const int64_t* nu, int32_t n, char** out);

/* has_seed != 0 shuffles the propagation order with the given seed; the
 * result must not depend on it. */
hm_status hm_phi_inverse(const char* hive_json, int32_t has_seed, uint64_t seed, char** out);

/* Full bijection report for one boundary triple; JSON object with "pass". */
hm_status hm_phi_verify(const int64_t* la, const int64_t* mu, const int64_t* nu,
                        int32_t n, char** out);

/* --- valuation evaluators ---------------------------------------------- */

/* subset holds 1-based elements, strictly increasing. */
hm_status hm_eval_dgamma(const char* matrix_json, const int32_t* subset,
                         int32_t subset_len, int64_t* out);

/* matrices_json is a JSON array of k matrix objects; sizes has length k. */
hm_status hm_eval_h(const char* matrices_json, const int32_t* sizes, int32_t k,
                    int64_t* out);

/* *finite = 0 means the coefficient vanished (value +infinity); *out is
 * only meaningful when *finite != 0. */
hm_status hm_eval_speyer(const char* g1_json, const char* g2_json, const char* g3_json,
                         int32_t i, int32_t j, int32_t k, int32_t* finite, int64_t* out);

/* Deterministic sample matrix in the JSON schema (resampled until
 * invertible). */
hm_status hm_random_matrix(int32_t n, uint64_t seed, int64_t exp_lo, int64_t exp_hi,
                           int64_t coeff_bound, char** out);

/* Exchange-relation statistics over `count` seeded random matrices; JSON
 * report with totals, rate and per-matrix failures. */
hm_status hm_eval_plucker_sweep(int32_t n, int32_t count, uint64_t seed, char** out);

/* --- acceptance sweep --------------------------------------------------- */

/* Runs the nine verification criteria; JSON array of
 * {"id","name","pass","details"}. */
hm_status hm_sweep_verify_all(int32_t n_max, int64_t entry_bound, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HIVEMV_H */
