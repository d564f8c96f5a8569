/* Exercises the shared library through its C header only. */
#include "dunkl/dunkl.h"

#include <math.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static void params(void) {
  dunkl_params* p = NULL;
  double a = 0, b = 0;
  EXPECT(dunkl_params_create(0.3, 0.7, &p) == DUNKL_OK);
  EXPECT(dunkl_params_get(p, &a, &b) == DUNKL_OK);
  EXPECT(a == 0.3 && b == 0.7);
  dunkl_params_destroy(p);

  p = (dunkl_params*)1;
  EXPECT(dunkl_params_create(-0.5, 0.1, &p) == DUNKL_ERR_DOMAIN);
  EXPECT(p == NULL);
  EXPECT(strstr(dunkl_last_error(), "mu1") != NULL);
  EXPECT(dunkl_params_create(0.1, 0.1, NULL) == DUNKL_ERR_NULL_ARGUMENT);
  EXPECT(strcmp(dunkl_status_name(DUNKL_ERR_ADMISSIBILITY), "admissibility error") == 0);
  EXPECT(strlen(dunkl_version()) > 0);
}

static void spectrum(void) {
  dunkl_params* p = NULL;
  dunkl_spectrum* s = NULL;
  dunkl_spectrum_row row;
  size_t i;
  dunkl_params_create(0.3, 0.7, &p);

  EXPECT(dunkl_spectrum_create(p, 6.0, NULL, 0, &s) == DUNKL_OK);
  EXPECT(dunkl_spectrum_size(s) == 15);
  EXPECT(strcmp(dunkl_spectrum_tag(s), "base") == 0);
  EXPECT(dunkl_spectrum_row_get(s, 0, &row) == DUNKL_OK);
  EXPECT(row.eps1 == 0 && row.eps2 == 0 && row.n_twice == 0 && row.k == 0);
  EXPECT(fabs(row.energy - 2.0) < 1e-15);
  EXPECT(dunkl_spectrum_row_get(s, 15, &row) == DUNKL_ERR_OUT_OF_RANGE);
  dunkl_spectrum_destroy(s);

  /* type I keeps the base energies */
  EXPECT(dunkl_spectrum_create(p, 6.0, "I:1", 0, &s) == DUNKL_OK);
  EXPECT(dunkl_spectrum_size(s) == 15);
  for (i = 0; i < dunkl_spectrum_size(s); ++i) {
    dunkl_spectrum_row_get(s, i, &row);
    EXPECT(row.k >= 1);
  }
  EXPECT(strcmp(dunkl_spectrum_tag(s), "I:1") == 0);
  dunkl_spectrum_destroy(s);

  EXPECT(dunkl_spectrum_create(p, 3.0, "II:3", 0, &s) == DUNKL_ERR_ADMISSIBILITY);
  EXPECT(s == NULL);
  EXPECT(dunkl_spectrum_create(p, 3.0, "III:1", 0, &s) == DUNKL_ERR_ADMISSIBILITY);
  EXPECT(dunkl_spectrum_create(p, 3.0, "V:1", 0, &s) == DUNKL_ERR_DOMAIN);
  EXPECT(dunkl_spectrum_create(p, 3.0, "I:1", 1, &s) == DUNKL_ERR_DOMAIN);
  EXPECT(dunkl_spectrum_create(p, 3.0, NULL, 1, &s) == DUNKL_ERR_SINGULAR_EXTENSION);
  dunkl_params_destroy(p);

  dunkl_params_create(0.9, 0.9, &p);
  EXPECT(dunkl_spectrum_create(p, 3.0, NULL, 1, &s) == DUNKL_ERR_DEGENERATE_PARAMETERS);
  dunkl_params_destroy(p);
}

static void states(void) {
  dunkl_params* p = NULL;
  dunkl_state* st = NULL;
  double e = 0, v1 = 0, v2 = 0;
  dunkl_params_create(0.3, 0.7, &p);

  EXPECT(dunkl_state_create(p, 1, 0, 3, 2, NULL, 0, &st) == DUNKL_OK);
  EXPECT(dunkl_state_energy(st, &e) == DUNKL_OK);
  EXPECT(fabs(e - 9.0) < 1e-14);
  EXPECT(dunkl_state_eval(st, 0.7, 0.4, &v1) == DUNKL_OK);
  EXPECT(dunkl_state_eval(st, -0.7, 0.4, &v2) == DUNKL_OK);
  EXPECT(fabs(v1 + v2) < 1e-14);
  dunkl_state_destroy(st);

  EXPECT(dunkl_state_create(p, 0, 0, 2, 0, "III:2", 0, &st) == DUNKL_OK);
  dunkl_state_energy(st, &e);
  EXPECT(fabs(e) < 1e-14);
  dunkl_state_destroy(st);

  EXPECT(dunkl_state_create(p, 1, 0, 0, 0, NULL, 0, &st) == DUNKL_ERR_DOMAIN);
  EXPECT(dunkl_state_create(p, 0, 0, 0, 0, "I:1", 0, &st) == DUNKL_ERR_ADMISSIBILITY);
  dunkl_params_destroy(p);
}

static void verify(void) {
  dunkl_params* p = NULL;
  dunkl_reports* r = NULL;
  const char* exts[] = {"I:1"};
  const char* name = NULL;
  double dev = 0, tol = 0;
  int pass = 0;
  dunkl_params_create(0.3, 0.7, &p);

  EXPECT(dunkl_verify_run(p, exts, 1, 0, 12345, 0.0, &r) == DUNKL_OK);
  EXPECT(dunkl_reports_size(r) > 6);
  EXPECT(dunkl_reports_all_pass(r) == 1);
  EXPECT(dunkl_reports_get(r, 0, &name, &dev, &tol, &pass) == DUNKL_OK);
  EXPECT(strcmp(name, "base_angular_gram") == 0);
  EXPECT(pass == 1 && dev <= tol);
  EXPECT(dunkl_reports_json(r)[0] == '[');
  dunkl_reports_destroy(r);

  EXPECT(dunkl_verify_run(p, NULL, 0, 0, 12345, 1e-15, &r) == DUNKL_OK);
  EXPECT(dunkl_reports_all_pass(r) == 0);
  dunkl_reports_destroy(r);
  EXPECT(dunkl_verify_run(p, NULL, 1, 0, 1, 0.0, &r) == DUNKL_ERR_NULL_ARGUMENT);
  dunkl_params_destroy(p);
}

int main(void) {
  params();
  spectrum();
  states();
  verify();
  if (failures)
    fprintf(stderr, "%d failure(s)\n", failures);
  else
    printf("C API: all checks passed\n");
  return failures ? 1 : 0;
}
