/*
 * oscul: C interface to the enumerative engine and verification lab.
 *
 * Every computation returns an osc_status. On success (and on a failed
 * verification, which still produces a report) *out receives a result
 * handle that the caller releases with osc_result_free. On any other
 * status *out is set to NULL and osc_last_error() describes the problem.
 * Error messages are per thread.
 */
#ifndef OSCUL_H
#define OSCUL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(OSC_BUILDING_LIBRARY)
#define OSC_API __declspec(dllexport)
#else
#define OSC_API __declspec(dllimport)
#endif
#else
#define OSC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum osc_status {
  OSC_OK = 0,
  OSC_ERR_USAGE = 1,
  OSC_ERR_PRECONDITION = 2,
  OSC_ERR_VERIFICATION_FAILED = 3,
  OSC_ERR_INTERNAL = 4
} osc_status;

typedef enum osc_field { OSC_FIELD_PRIME = 0, OSC_FIELD_RATIONAL = 1 } osc_field;

typedef struct osc_result osc_result;
typedef struct osc_class osc_class;

OSC_API const char* osc_version(void);
OSC_API const char* osc_status_string(osc_status status);
OSC_API const char* osc_last_error(void);

/* Enumerative pipeline. */
OSC_API osc_status osc_count_lines(int n, int d, int check, uint64_t seed, osc_result** out);
OSC_API osc_status osc_count_lines_table(int n_min, int n_max, int check, uint64_t seed, osc_result** out);
OSC_API osc_status osc_numerology(int n, int k, osc_result** out);
/* r = 0 picks the default contact order min(d, 2n - 1). */
OSC_API osc_status osc_osculating(int n, int d, int r, osc_result** out);
OSC_API osc_status osc_canonical(int n, int d, osc_result** out);
OSC_API osc_status osc_swept_degree(int n, int d, osc_result** out);
OSC_API osc_status osc_oracle(int n, int d, uint64_t seed, osc_result** out);

/* Verification lab. */
OSC_API osc_status osc_verify_gg_pn(int n, int d, int samples, osc_field field, uint64_t seed, osc_result** out);
OSC_API osc_status osc_verify_gg_gr(int n, int lines, int group_elements, osc_field field, uint64_t seed,
                                    osc_result** out);
/* x may be NULL (x_len = 0) to draw the point from the seed. */
OSC_API osc_status osc_verify_wedge2(int n, int d, const int64_t* x, size_t x_len, osc_field field, uint64_t seed,
                                     size_t budget, osc_result** out);
/* dim_w = 0 sweeps 1..6 and dim_k = 0 sweeps 1..3; trials is per case. */
OSC_API osc_status osc_verify_lemma_linalg(int dim_w, int dim_k, int trials, osc_field field, uint64_t seed,
                                           osc_result** out);
OSC_API osc_status osc_verify_contact(int n, int d, int samples, osc_field field, uint64_t seed,
                                      osc_result** out);

/* Result accessors. Returned strings live as long as the handle. */
OSC_API const char* osc_result_command(const osc_result* r);
OSC_API const char* osc_result_json(const osc_result* r);
OSC_API const char* osc_result_text(const osc_result* r);
OSC_API int osc_result_passed(const osc_result* r);
/* Top-level field of the "result" object rendered as text (strings are
   returned unquoted), or NULL when absent. */
OSC_API const char* osc_result_get(const osc_result* r, const char* key);
OSC_API void osc_result_free(osc_result* r);

/* Schubert classes of G(m, N). */
OSC_API osc_status osc_class_schubert(int m, int N, const int* parts, size_t len, osc_class** out);
OSC_API osc_status osc_class_add(const osc_class* a, const osc_class* b, osc_class** out);
OSC_API osc_status osc_class_mul(const osc_class* a, const osc_class* b, osc_class** out);
/* Write the degree (decimal) or the partition listing into buf. *needed
   receives the required size including the terminator; a too-small buffer
   yields OSC_ERR_USAGE. */
OSC_API osc_status osc_class_integrate(const osc_class* c, char* buf, size_t buf_len, size_t* needed);
OSC_API osc_status osc_class_string(const osc_class* c, char* buf, size_t buf_len, size_t* needed);
OSC_API void osc_class_free(osc_class* c);

#ifdef __cplusplus
}
#endif

#endif /* OSCUL_H */
