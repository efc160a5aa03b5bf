#ifndef GRSLAB_GRSLAB_H
#define GRSLAB_GRSLAB_H

/* C interface to libgrslab. Functions return a grslab_status; on failure the
 * message is available from grslab_last_error() on the calling thread until
 * the next call. Handles are opaque and must be released with the matching
 * destroy function. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(GRSLAB_BUILDING)
#    define GRSLAB_API __declspec(dllexport)
#  else
#    define GRSLAB_API __declspec(dllimport)
#  endif
#else
#  define GRSLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum grslab_status {
  GRSLAB_OK = 0,
  GRSLAB_ERR_DOMAIN = 1,
  GRSLAB_ERR_POLE = 2,
  GRSLAB_ERR_MAGNITUDE = 3,
  GRSLAB_ERR_NUMERIC = 4,
  GRSLAB_ERR_STRUCTURE = 5,
  GRSLAB_ERR_RESOLUTION = 6,
  GRSLAB_ERR_GRAMMAR = 7,
  GRSLAB_ERR_NOT_J_ORTHONORMAL = 8,
  GRSLAB_ERR_IO = 9,
  GRSLAB_ERR_USAGE = 10,
  GRSLAB_ERR_NULL = 100,
  GRSLAB_ERR_INTERNAL = 101
} grslab_status;

typedef enum grslab_example {
  GRSLAB_SHIFTED_HO = 0,
  GRSLAB_PERTURBED_ANHARMONIC = 1,
  GRSLAB_EXAMPLE1 = 2
} grslab_example;

typedef enum grslab_verdict {
  GRSLAB_FIRST_TYPE = 0,
  GRSLAB_NOT_J_ORTHONORMAL = 1,
  GRSLAB_UNDETERMINED = 2
} grslab_verdict;

typedef struct grslab_system grslab_system;
typedef struct grslab_report grslab_report;

/* Parameters of a catalog example. Fields left at zero take the example
 * defaults; p_expr may be NULL. */
typedef struct grslab_example_params {
  grslab_example id;
  double a;
  double beta;
  const char* p_expr;
  size_t n;
} grslab_example_params;

GRSLAB_API const char* grslab_version(void);
GRSLAB_API const char* grslab_last_error(void);

GRSLAB_API grslab_status grslab_log_gamma(double x, double* out);
GRSLAB_API grslab_status grslab_hyp2f1_terminating(int m, double b, double c, double z, double* out);
GRSLAB_API grslab_status grslab_overlap_closed_form(int n, int m, double* out);
GRSLAB_API grslab_status grslab_overlap_quadrature(int n, int m, double* out);

GRSLAB_API grslab_status grslab_system_create(const grslab_example_params* params, grslab_system** out);
GRSLAB_API void grslab_system_destroy(grslab_system* sys);
GRSLAB_API grslab_status grslab_system_size(const grslab_system* sys, size_t* out);
GRSLAB_API grslab_status grslab_biorthogonality_defect(const grslab_system* sys, double* out);
GRSLAB_API grslab_status grslab_j_orthonormality_defect(const grslab_system* sys, double* out);
/* [phi_n, phi_m] */
GRSLAB_API grslab_status grslab_krein_entry(const grslab_system* sys, size_t n, size_t m,
                                            double* re, double* im);
GRSLAB_API grslab_status grslab_classify(const grslab_system* sys, grslab_verdict* out);

/* Runs the verification suite with default tolerances. */
GRSLAB_API grslab_status grslab_verify(const grslab_example_params* params, grslab_report** out);
GRSLAB_API void grslab_report_destroy(grslab_report* report);
GRSLAB_API grslab_status grslab_report_passed(const grslab_report* report, int* out);
GRSLAB_API grslab_status grslab_report_check_count(const grslab_report* report, size_t* out);
/* The name pointer stays valid until the report is destroyed. */
GRSLAB_API grslab_status grslab_report_check(const grslab_report* report, size_t index,
                                             const char** name, double* value, double* tolerance,
                                             int* pass);
GRSLAB_API grslab_status grslab_report_write_json(const grslab_report* report, const char* path);

#ifdef __cplusplus
}
#endif

#endif
