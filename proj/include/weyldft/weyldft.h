/* C interface to the Weyl orbit-function discretization library.
 *
 * All functions return wdft_status; on any status other than WDFT_OK a
 * human-readable message is available from wdft_last_error() (thread
 * local).  Strings returned through char** out-parameters are allocated
 * by the library and must be released with wdft_string_free().
 *
 * Algebra names are family letter plus rank ("A2", "B3", "E7", ...).
 * Sign homomorphism names accept both the short spellings "1", "e",
 * "s", "l" and the long spellings "identity", "det", "short", "long".
 */
#ifndef WEYLDFT_H
#define WEYLDFT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wdft_status {
    WDFT_OK = 0,
    WDFT_INVALID_ALGEBRA = 1,
    WDFT_INADMISSIBLE_SIGN = 2,
    WDFT_LEVEL_TOO_SMALL = 3,
    WDFT_GROUP_TOO_LARGE = 4,
    WDFT_GRID_MISMATCH = 5,
    WDFT_MALFORMED_KAC = 6,
    WDFT_INVALID_ARGUMENT = 7,
    WDFT_INTERNAL = 8
} wdft_status;

/* Message for the most recent failure on this thread ("" if none). */
const char* wdft_last_error(void);

void wdft_string_free(char* s);

/* ---- Grids ----------------------------------------------------------- */

/* Serialize the sampling point set (Kac coordinates, numerators q of the
 * point q/M, orbit weight eps) or the weight label set (Kac coordinates,
 * normalization weight h).  format is "json" or "csv".  relaxed != 0
 * allows levels M <= m^sigma (sets may then be empty). */
wdft_status wdft_points(const char* algebra, const char* sigma, long long M, const char* format,
                        int relaxed, char** out);
wdft_status wdft_weights(const char* algebra, const char* sigma, long long M, const char* format,
                         int relaxed, char** out);

/* ---- Counting -------------------------------------------------------- */

/* Cardinality of the level-M sets by three independent routes: the
 * closed-form expression, orbit counting over the label simplex, and
 * direct enumeration of the weight set; n_points is the enumerated size
 * of the sampling grid.  The four agree for every valid input. */
wdft_status wdft_count(const char* algebra, const char* sigma, long long M, long long* closed_form,
                       long long* orbit_count, long long* n_weights, long long* n_points);

/* ---- Transforms ------------------------------------------------------ */

typedef struct wdft_plan wdft_plan;

/* weyl_cap <= 0 selects the default cap of 10^6 group elements. */
wdft_status wdft_plan_create(const char* algebra, const char* sigma, long long M,
                             long long weyl_cap, int relaxed, wdft_plan** out);
void wdft_plan_destroy(wdft_plan* plan);

wdft_status wdft_plan_sizes(const wdft_plan* plan, size_t* n_points, size_t* n_weights);

/* Forward / inverse transforms on raw sample buffers of length n_points
 * (forward) or n_weights (inverse); re/im arrays may not alias. */
wdft_status wdft_forward(const wdft_plan* plan, const double* re, const double* im, size_t n,
                         double* out_re, double* out_im);
wdft_status wdft_inverse(const wdft_plan* plan, const double* re, const double* im, size_t n,
                         double* out_re, double* out_im);
wdft_status wdft_hartley_forward(const wdft_plan* plan, const double* f, size_t n, double* out);
wdft_status wdft_hartley_inverse(const wdft_plan* plan, const double* d, size_t n, double* out);

/* JSON front end: samples_json must carry a header matching the plan and
 * a "values" array; returns the spectrum as JSON.  hartley != 0 runs the
 * real cas-kernel transform (imaginary parts of the input must be 0). */
wdft_status wdft_transform_json(const wdft_plan* plan, const char* samples_json, int hartley,
                                char** out_json);

/* Max relative reconstruction error over `trials` random sample tables
 * (seeded, deterministic). */
wdft_status wdft_roundtrip_error(const wdft_plan* plan, int hartley, unsigned long long seed,
                                 int trials, double* max_rel_err);

/* ---- Verification ---------------------------------------------------- */

/* Run the property suite (count agreement, congruence equivalence,
 * orbit-weight sum, shift identity, orthogonality, round trips,
 * Plancherel) for one configuration.  Returns a JSON report; *all_passed
 * is 1 when every check passed.  corrupt_eps_index >= 0 deliberately
 * corrupts one orbit weight first (negative-control test hook). */
wdft_status wdft_verify(const char* algebra, const char* sigma, long long M, long long weyl_cap,
                        int relaxed, long long corrupt_eps_index, char** out_json,
                        int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* WEYLDFT_H */
