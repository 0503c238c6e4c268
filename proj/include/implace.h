/* implace — fixed-outline floorplanning of soft rectangular modules.
 *
 * C interface of the shared library. All objects are opaque handles owned
 * by the library; every function that can fail returns an imp_status, with
 * a detail message available from imp_last_error() on the calling thread.
 * Strings returned through char** are heap-allocated and must be released
 * with imp_string_free(); const char* results borrow storage owned by the
 * queried handle and stay valid until that handle is freed.
 */

#ifndef IMPLACE_H
#define IMPLACE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum imp_status {
    IMP_OK = 0,
    IMP_ERR_INVALID_ARGUMENT = 1,
    IMP_ERR_INVALID_INSTANCE = 2,
    IMP_ERR_INVALID_SPEC = 3,
    IMP_ERR_INVALID_LAYOUT = 4,
    IMP_ERR_AREA_MISMATCH = 5,
    IMP_ERR_PARSE = 6,
    IMP_ERR_IO = 7,
    IMP_ERR_INTERNAL = 8
} imp_status;

typedef enum imp_algorithm {
    IMP_ALGORITHM_IMP = 0, /* iterative merging placement */
    IMP_ALGORITHM_ZDS = 1  /* recursive area-bipartition baseline */
} imp_algorithm;

typedef enum imp_gen_mode {
    IMP_GEN_IMP_FEASIBLE = 0,
    IMP_GEN_ZDS_FEASIBLE = 1,
    IMP_GEN_ADVERSARIAL = 2,
    IMP_GEN_UNCONSTRAINED = 3
} imp_gen_mode;

typedef enum imp_violation_kind {
    IMP_VIOLATION_DIMENSION = 0,
    IMP_VIOLATION_ASPECT = 1,
    IMP_VIOLATION_OVERLAP = 2,
    IMP_VIOLATION_OUT_OF_BOUNDS = 3
} imp_violation_kind;

typedef struct imp_instance imp_instance;
typedef struct imp_layout imp_layout;
typedef struct imp_place_report imp_place_report;
typedef struct imp_verify_report imp_verify_report;

const char *imp_version(void);
const char *imp_status_name(imp_status status);
/* Message for the most recent failing call on this thread; empty if none. */
const char *imp_last_error(void);
void imp_string_free(char *text);

/* ---- instances ------------------------------------------------------- */

imp_status imp_instance_parse(const char *json_text, imp_instance **out);
imp_status imp_instance_read(const char *path, imp_instance **out);
imp_status imp_instance_to_json(const imp_instance *instance, char **out_text);
imp_status imp_instance_write(const imp_instance *instance, const char *path);
void imp_instance_free(imp_instance *instance);

int imp_instance_module_count(const imp_instance *instance);
imp_status imp_instance_circuit(const imp_instance *instance, double *width, double *height);

/* Seeded deterministic instance generation. ratio_spread <= 0 selects the
 * default 0.9. */
imp_status imp_generate(int module_count, double lambda, uint64_t seed, imp_gen_mode mode,
                        double ratio_spread, imp_instance **out);

/* ---- placement ------------------------------------------------------- */

imp_status imp_place(const imp_instance *instance, imp_algorithm algorithm,
                     imp_place_report **out);

/* Borrowed; valid until the report is freed. */
const imp_layout *imp_place_report_layout(const imp_place_report *report);
int imp_place_report_violation_count(const imp_place_report *report);
imp_status imp_place_report_violation(const imp_place_report *report, int index,
                                      const char **module_name, double *ratio, double *lo,
                                      double *hi, double *magnitude);
/* Largest aspect-violation magnitude, 0 when the placement is clean. */
double imp_place_report_max_violation(const imp_place_report *report);
void imp_place_report_free(imp_place_report *report);

/* ---- layouts --------------------------------------------------------- */

imp_status imp_layout_parse(const char *json_text, imp_layout **out);
imp_status imp_layout_read(const char *path, imp_layout **out);
imp_status imp_layout_to_json(const imp_layout *layout, char **out_text);
imp_status imp_layout_write(const imp_layout *layout, const char *path);
void imp_layout_free(imp_layout *layout);

int imp_layout_rect_count(const imp_layout *layout);
imp_status imp_layout_rect(const imp_layout *layout, int index, const char **module_name,
                           double *x, double *y, double *w, double *h);

/* ---- verification and metrics ---------------------------------------- */

/* eps_rel <= 0 selects the default 1e-9. */
imp_status imp_verify(const imp_layout *layout, const imp_instance *instance, double eps_rel,
                      imp_verify_report **out);
int imp_verify_report_ok(const imp_verify_report *report);
int imp_verify_report_violation_count(const imp_verify_report *report);
imp_status imp_verify_report_violation(const imp_verify_report *report, int index,
                                       imp_violation_kind *kind, const char **description);
double imp_verify_report_deadspace(const imp_verify_report *report);
double imp_verify_report_max_violation(const imp_verify_report *report);
int imp_verify_report_has_hpwl(const imp_verify_report *report);
double imp_verify_report_hpwl(const imp_verify_report *report);
void imp_verify_report_free(imp_verify_report *report);

/* Half-perimeter wirelength over the instance netlist; 0 without nets. */
imp_status imp_hpwl(const imp_layout *layout, const imp_instance *instance, double *out);

/* ---- feasibility prechecks ------------------------------------------- */

typedef struct imp_feasibility {
    int has_uniform_lambda;
    double uniform_lambda; /* meaningful when has_uniform_lambda */
    int lambda_ok;         /* uniform lambda >= 3 */
    double circuit_ratio;  /* H / W */
    int circuit_ratio_ok;  /* within [1/lambda, lambda] */
    double worst_ratio;    /* the checked max expression */
    int condition_ok;      /* worst_ratio <= lambda - 1 */
    int guaranteed;        /* all of the above */
} imp_feasibility;

imp_status imp_check_imp_condition(const imp_instance *instance, imp_feasibility *out);
imp_status imp_check_zds_condition(const imp_instance *instance, imp_feasibility *out);
imp_status imp_dominance_gap(const imp_instance *instance, double *imp_worst, double *zds_worst);

/* ---- rendering -------------------------------------------------------- */

imp_status imp_render_svg(const imp_layout *layout, const imp_instance *instance,
                          char **out_text);

#ifdef __cplusplus
}
#endif

#endif /* IMPLACE_H */
