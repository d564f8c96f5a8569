/* C interface to the Dunkl oscillator library. Every function returns a
 * status; on failure dunkl_last_error() holds a message for the calling
 * thread. Handles are opaque and owned by the caller. */
#ifndef DUNKL_DUNKL_H
#define DUNKL_DUNKL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DUNKL_BUILDING)
#    define DUNKL_API __declspec(dllexport)
#  else
#    define DUNKL_API __declspec(dllimport)
#  endif
#else
#  define DUNKL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dunkl_status {
  DUNKL_OK = 0,
  DUNKL_ERR_DOMAIN = 1,
  DUNKL_ERR_ADMISSIBILITY = 2,
  DUNKL_ERR_SINGULAR_EXTENSION = 3,
  DUNKL_ERR_DEGENERATE_PARAMETERS = 4,
  DUNKL_ERR_NULLSPACE_DIMENSION = 5,
  DUNKL_ERR_PARITY = 6,
  DUNKL_ERR_CONSTRUCTION = 7,
  DUNKL_ERR_STENCIL_DOMAIN = 8,
  DUNKL_ERR_NULL_ARGUMENT = 20,
  DUNKL_ERR_OUT_OF_RANGE = 21,
  DUNKL_ERR_INTERNAL = 99
} dunkl_status;

typedef struct dunkl_params dunkl_params;
typedef struct dunkl_spectrum dunkl_spectrum;
typedef struct dunkl_state dunkl_state;
typedef struct dunkl_reports dunkl_reports;

DUNKL_API const char* dunkl_version(void);
DUNKL_API const char* dunkl_last_error(void);
DUNKL_API const char* dunkl_status_name(dunkl_status s);

/* mu1, mu2 > -1/2 */
DUNKL_API dunkl_status dunkl_params_create(double mu1, double mu2, dunkl_params** out);
DUNKL_API dunkl_status dunkl_params_get(const dunkl_params* p, double* mu1, double* mu2);
DUNKL_API void dunkl_params_destroy(dunkl_params* p);

/* Extension selection: ext is NULL/"" for none or "I:1", "II:2", "III:2";
 * angular_ext != 0 selects the X1-Jacobi angular extension. The two are
 * mutually exclusive. */

typedef struct dunkl_spectrum_row {
  int eps1;
  int eps2;
  int n_twice; /* n = n_twice / 2 */
  int k;
  double msq;
  double energy;
} dunkl_spectrum_row;

/* All states with energy <= emax, sorted by (energy, sector, n, k). With a
 * radial extension, n values whose seed is inadmissible are skipped and
 * listed in the note; if none is admissible the call fails. */
DUNKL_API dunkl_status dunkl_spectrum_create(const dunkl_params* p, double emax, const char* ext, int angular_ext,
                                             dunkl_spectrum** out);
DUNKL_API size_t dunkl_spectrum_size(const dunkl_spectrum* s);
DUNKL_API dunkl_status dunkl_spectrum_row_get(const dunkl_spectrum* s, size_t i, dunkl_spectrum_row* row);
/* "base", "I:1", ..., or "X1" */
DUNKL_API const char* dunkl_spectrum_tag(const dunkl_spectrum* s);
/* empty unless some n were skipped */
DUNKL_API const char* dunkl_spectrum_note(const dunkl_spectrum* s);
DUNKL_API void dunkl_spectrum_destroy(dunkl_spectrum* s);

DUNKL_API dunkl_status dunkl_state_create(const dunkl_params* p, int eps1, int eps2, int n_twice, int k,
                                          const char* ext, int angular_ext, dunkl_state** out);
DUNKL_API dunkl_status dunkl_state_energy(const dunkl_state* s, double* energy);
DUNKL_API dunkl_status dunkl_state_msq(const dunkl_state* s, double* msq);
/* Wavefunction value; the origin only where a direction-independent limit exists. */
DUNKL_API dunkl_status dunkl_state_eval(const dunkl_state* s, double x1, double x2, double* value);
DUNKL_API void dunkl_state_destroy(dunkl_state* s);

/* Runs the verification suite. exts holds n_ext extension specs (may be
 * NULL when n_ext is 0). tolerance <= 0 keeps the per-check defaults. */
DUNKL_API dunkl_status dunkl_verify_run(const dunkl_params* p, const char* const* exts, size_t n_ext, int angular_ext,
                                        uint64_t seed, double tolerance, dunkl_reports** out);
DUNKL_API size_t dunkl_reports_size(const dunkl_reports* r);
DUNKL_API dunkl_status dunkl_reports_get(const dunkl_reports* r, size_t i, const char** check, double* deviation,
                                         double* tolerance, int* pass);
DUNKL_API int dunkl_reports_all_pass(const dunkl_reports* r);
/* JSON array, one object per check; owned by the handle */
DUNKL_API const char* dunkl_reports_json(const dunkl_reports* r);
DUNKL_API void dunkl_reports_destroy(dunkl_reports* r);

#ifdef __cplusplus
}
#endif

#endif
