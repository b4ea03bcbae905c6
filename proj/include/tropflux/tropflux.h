/* Exact tropical flux computations: C interface. */
#ifndef TROPFLUX_H
#define TROPFLUX_H

#include <stdint.h>

#if defined(TROPFLUX_BUILDING)
#define TF_API __attribute__((visibility("default")))
#else
#define TF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
    TF_OK = 0,
    TF_ERR_INTERNAL = 1,
    TF_ERR_INPUT = 2,
    TF_ERR_PRECONDITION = 3
} tf_status;

typedef struct tf_curve tf_curve;
typedef struct tf_report tf_report;

/* Message of the last failed call on this thread; "" if none. */
TF_API const char* tf_last_error(void);
TF_API const char* tf_version(void);

/* Curves. Strings returned by accessors are owned by the handle. */
TF_API tf_status tf_curve_load(const char* path, tf_curve** out);
TF_API tf_status tf_curve_parse(const char* json_text, tf_curve** out);
TF_API void tf_curve_free(tf_curve* curve);
TF_API int tf_curve_genus(const tf_curve* curve);
TF_API int tf_curve_is_k4(const tf_curve* curve);
TF_API int tf_curve_is_numeric(const tf_curve* curve);
/* Entry (i, j) of the polarisation matrix, 0-based; NULL when out of range. */
TF_API const char* tf_curve_polarisation(const tf_curve* curve, int i, int j);

/* Commands. On success *out holds a report to release with tf_report_free. */
TF_API tf_status tf_cmd_curve_info(const char* path, const char* plot_path, tf_report** out);
TF_API tf_status tf_cmd_periods(const char* path, int j, int k, tf_report** out);
TF_API tf_status tf_cmd_ceresa(const char* path, tf_report** out);
TF_API tf_status tf_cmd_flux_classify(const char* value, const char* generators_path, tf_report** out);
/* path may be NULL for the built-in K4 curve. */
TF_API tf_status tf_cmd_lift_check(const char* path, int trials, uint64_t seed, tf_report** out);
TF_API tf_status tf_cmd_lefschetz(const char* path, tf_report** out);

TF_API const char* tf_report_text(const tf_report* report);
TF_API const char* tf_report_json(const tf_report* report);
/* 1 when every check in the report passed. */
TF_API int tf_report_ok(const tf_report* report);
TF_API void tf_report_free(tf_report* report);

#ifdef __cplusplus
}
#endif

#endif
