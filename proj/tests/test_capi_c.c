/* Compiled as plain C: proves the public header is usable from C and the
 * shared library links without any C++ runtime in the consumer. */

#include <math.h>
#include <stdio.h>

#include "sxx.h"

static int failures = 0;

static void expect(int ok, const char* what) {
  if (!ok) {
    ++failures;
    fprintf(stderr, "FAIL: %s\n", what);
  }
}

int main(void) {
  double w = 0.0;
  expect(sxx_witness_thermo(1.0, 0.0, 0.0, 0.0, &w) == SXX_OK, "witness status");
  expect(fabs(w - 4.0 / 3.14159265358979324) < 1e-8, "witness value 4/pi");

  expect(sxx_witness_thermo(1.0, 0.0, 0.0, -1.0, &w) == SXX_INVALID_ARGUMENT,
         "negative T rejected");

  sxx_oracle* oracle = NULL;
  expect(sxx_oracle_create(1.0, 0.5, 0.25, 4, &oracle) == SXX_OK, "oracle create");
  if (oracle) {
    double lnz_o = 0.0, lnz_f = 0.0;
    expect(sxx_oracle_log_partition(oracle, 1.0, &lnz_o) == SXX_OK, "oracle lnZ");
    expect(sxx_log_partition_finite(1.0, 0.5, 0.25, 4, 1.0, &lnz_f) == SXX_OK,
           "fermion lnZ");
    expect(fabs(lnz_o - lnz_f) < 1e-9, "lnZ agreement");
    sxx_oracle_free(oracle);
  }

  if (failures == 0) printf("c api smoke test passed\n");
  return failures;
}
