#ifndef HYPSTOKES_H
#define HYPSTOKES_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HS_API __declspec(dllexport)
#else
#define HS_API __attribute__((visibility("default")))
#endif

typedef enum hs_status {
  HS_OK = 0,
  HS_ERR_INVALID_ARGUMENT,
  HS_ERR_PARSE,
  HS_ERR_NOT_GENERIC,
  HS_ERR_AMBIGUOUS_CLUSTERING,
  HS_ERR_INEXACT_INPUT,
  HS_ERR_POLE_AT_CENTER,
  HS_ERR_SINGULAR_MATRIX,
  HS_ERR_HYPOTHESES_VIOLATED,
  HS_ERR_SHAPE_MISMATCH,
  HS_ERR_ZERO_LEADING_ENTRY,
  HS_ERR_INVALID_QUIVER,
  HS_ERR_NOT_DIAGONALIZABLE,
  HS_ERR_POLE_OF_GAMMA,
  HS_ERR_SNAP_FAILURE,
  HS_ERR_IO,
  HS_ERR_INTERNAL
} hs_status;

typedef enum hs_format { HS_FORMAT_JSON = 0, HS_FORMAT_PRETTY = 1 } hs_format;

typedef struct hs_params hs_params;
typedef struct hs_result hs_result;

typedef struct hs_tolerances {
  double int_tol;
  double cluster_tol;
  double compare_tol;
  double snap_tol;
} hs_tolerances;

HS_API hs_tolerances hs_default_tolerances(void);

/* exact != 0: rationals are kept exact and JSON floats are rejected.
   exact == 0: every exponent is converted to a float. */
HS_API hs_status hs_params_from_json(const char* json, int exact, hs_params** out);

/* Comma separated exponents such as "1/3, -2/5" or "0.25"; glambda defaults to 1. */
HS_API hs_status hs_params_from_lists(const char* alpha, const char* beta, double glambda_re, double glambda_im,
                                      int exact, hs_params** out);
HS_API void hs_params_free(hs_params* p);

/* form: companion | jordan | normal | quiver; arith: auto | double | high | exact.
   A non-generic input yields HS_ERR_NOT_GENERIC together with a result holding the report. */
HS_API hs_status hs_compute(const hs_params* p, const char* form, const char* arith, const hs_tolerances* tol,
                            hs_result** out);
HS_API hs_status hs_verify(const hs_params* p, const char* arith, const hs_tolerances* tol, hs_result** out);

/* pair_json: {"s_plus": [[[re, im], ...], ...], "s_minus": ..., "blocks": [n-1, 1]} */
HS_API hs_status hs_verify_pair(const hs_params* p, const char* pair_json, const hs_tolerances* tol,
                                hs_result** out);

/* JSON lines, one record per instance. */
HS_API hs_status hs_corpus(uint64_t seed, int count, int jobs, const hs_tolerances* tol, hs_result** out);
HS_API hs_status hs_verify_corpus(uint64_t seed, int count, int jobs, const char* arith, const hs_tolerances* tol,
                                  hs_result** out);

/* The returned string lives as long as the result. */
HS_API const char* hs_result_text(hs_result* r, hs_format format);
HS_API int hs_result_passed(const hs_result* r);
HS_API void hs_result_free(hs_result* r);

/* Message of the last failure on this thread. */
HS_API const char* hs_last_error(void);
HS_API const char* hs_status_name(hs_status s);

#ifdef __cplusplus
}
#endif

#endif
