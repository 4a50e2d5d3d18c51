#ifndef YTAB_H
#define YTAB_H

/* C interface to the ytab library: generalized RSK, jeu de taquin and
 * limit-shape numerics on prefixes of infinite Young tableaux.
 *
 * Conventions:
 *   - all functions returning ytab_status set a thread-local error message
 *     readable through ytab_last_error() on failure;
 *   - objects created by the library are released with the matching _free;
 *   - strings returned through char** are heap-allocated and must be
 *     released with ytab_string_free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ytab_status {
    YTAB_OK = 0,
    YTAB_EINVAL = 1,  /* invalid argument or malformed input */
    YTAB_EDOMAIN = 2, /* operation undefined on this input */
    YTAB_EIO = 3,     /* filesystem failure */
    YTAB_EINTERNAL = 4
} ytab_status;

const char* ytab_status_name(ytab_status status);

/* Message for the last failing call on this thread; empty string if none. */
const char* ytab_last_error(void);

void ytab_string_free(char* s);

/* ---- words ---------------------------------------------------------- */

typedef struct ytab_word ytab_word;

/* 0 selects the jdt reading of the alphabet, nonzero the insertion one. */
ytab_status ytab_word_parse(const char* text, int insertion_orientation,
                            ytab_word** out);
void ytab_word_free(ytab_word* w);
ytab_status ytab_word_to_string(const ytab_word* w, char** out);
size_t ytab_word_length(const ytab_word* w);

/* ---- standard tableaux ---------------------------------------------- */

typedef struct ytab_tableau ytab_tableau;

/* JSON shape: {"rows": [[1,3],[2]]}, French convention, row 1 first. */
ytab_status ytab_tableau_parse_json(const char* json_text, ytab_tableau** out);
ytab_status ytab_tableau_to_json(const ytab_tableau* t, char** out);
void ytab_tableau_free(ytab_tableau* t);

/* ---- RSK ------------------------------------------------------------ */

ytab_status ytab_recording_tableau(const ytab_word* w, ytab_tableau** out);

/* Row lengths of the RSK shape as a JSON array, e.g. [3,1]. */
ytab_status ytab_rsk_shape_json(const ytab_word* w, char** out);

/* ---- jeu de taquin -------------------------------------------------- */

ytab_status ytab_jdt_transform(const ytab_tableau* t, ytab_tableau** out);

/* JSON: {"boxes": [[x,y], ...], "complete": bool} */
ytab_status ytab_jdt_path_json(const ytab_tableau* t, char** out);

/* JSON array of [x,y] pairs, entry m holds the lazy position at time m. */
ytab_status ytab_lazy_path_json(const ytab_tableau* t, char** out);

/* ---- limit shape ---------------------------------------------------- */

double ytab_omega(double u);          /* |u| <= 2 */
double ytab_semicircle_cdf(double u); /* |u| <= 2 */
ytab_status ytab_curve_point(double w, double* x, double* y);
double ytab_pi_angle(double u);
double ytab_theta_cdf(double theta);

/* ---- experiments ---------------------------------------------------- */

/* config_json schema:
 *   {"experiment": str, "thoma": {"alpha": [...], "beta": [...], "gamma": g},
 *    "n": int, "trials": int, "seed": int, "workers": int,
 *    "tolerances": {...}}
 * Writes data.csv, summary.json and manifest.json under out_dir (pass NULL
 * or "" to skip file output).  On success *summary_json_out receives the
 * summary and *passed_out is 1 when the experiment met its tolerances.
 */
ytab_status ytab_run_experiment(const char* config_json, const char* out_dir,
                                char** summary_json_out, int* passed_out);

/* scope: "all", "greene", "duality", "standardization" or
 * "measure-preserving". */
ytab_status ytab_run_property_suite(const char* scope, unsigned long long seed,
                                    int workers, char** summary_json_out,
                                    int* passed_out);

#ifdef __cplusplus
}
#endif

#endif /* YTAB_H */
