// Exercises the extern-C surface of the shared library: status codes, output
// contracts, and the oracle handle lifecycle. Values themselves are covered
// in depth by the core suites; here we check the C boundary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "sxx.h"

TEST_SUITE("capi") {

TEST_CASE("version and status strings") {
  CHECK(std::strlen(sxx_version()) > 0);
  CHECK(std::strcmp(sxx_status_message(SXX_OK), "ok") == 0);
  CHECK(std::strlen(sxx_status_message(SXX_DEGENERATE_GROUND_STATE)) > 0);
}

TEST_CASE("argument validation surfaces as status codes") {
  double out = 0.0;
  CHECK(sxx_omega_cutoff(1.0, 0.0, 0.0, nullptr) == SXX_INVALID_ARGUMENT);
  CHECK(sxx_omega_cutoff(-1.0, 0.0, 0.0, &out) == SXX_INVALID_ARGUMENT);
  CHECK(sxx_witness_thermo(1.0, 0.0, 0.0, -0.5, &out) == SXX_INVALID_ARGUMENT);
  CHECK(sxx_witness_finite(1.0, 0.0, 0.0, 5, 1.0, &out) == SXX_INVALID_ARGUMENT);
  CHECK(sxx_log_partition_finite(1.0, 0.0, 0.0, 4, 0.0, &out) ==
        SXX_FINITE_T_REQUIRED);
  CHECK(sxx_log_partition_density(1.0, 0.0, 0.0, 0.0, &out) == SXX_FINITE_T_REQUIRED);
  double eta = 0.0, entropy = 0.0;
  CHECK(sxx_site_entropy(1.0, 0.0, 0.0, SXX_SITE_EVEN, 0.5, &eta, &entropy) ==
        SXX_ZERO_T_REQUIRED);
  CHECK(sxx_max_entropy_field(1.0, 0.5, SXX_SITE_EVEN, &out, nullptr, nullptr) ==
        SXX_NO_SOLUTION);
}

TEST_CASE("closed-form spot values through the C surface") {
  double omega = 0.0;
  REQUIRE(sxx_omega_cutoff(1.0, 0.5, 0.7, &omega) == SXX_OK);
  CHECK(omega == doctest::Approx(std::numbers::pi / 2));

  double w = 0.0;
  REQUIRE(sxx_witness_thermo(1.0, 0.0, 0.0, 0.0, &w) == SXX_OK);
  CHECK(w == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-12));

  double lp = 0.0, lm = 0.0;
  REQUIRE(sxx_dispersion_cont(1.0, 0.0, 0.0, 0.0, &lp, &lm) == SXX_OK);
  CHECK(lp == doctest::Approx(2.0));
  CHECK(lm == doctest::Approx(-2.0));

  double theta = 0.0;
  REQUIRE(sxx_bogoliubov_angle(0.0, 0.0, 1.0, 2, 1, &theta) == SXX_OK);
  CHECK(theta == doctest::Approx(std::numbers::pi / 4));

  int witnessed = -1;
  REQUIRE(sxx_classify_point(1.0, 0.0, 0.0, 0.0, &witnessed) == SXX_OK);
  CHECK(witnessed == 1);
  REQUIRE(sxx_classify_point(1.0, 2.0, 0.0, 0.0, &witnessed) == SXX_OK);
  CHECK(witnessed == 0);
}

TEST_CASE("mode spectrum fills caller arrays, NULLs skipped") {
  std::vector<double> plus(2), minus(2);
  REQUIRE(sxx_mode_spectrum(1.0, 1.0, 0.0, 4, plus.data(), minus.data(), nullptr) ==
          SXX_OK);
  CHECK(plus[0] == doctest::Approx(2.0 + 2.0 * std::cos(std::numbers::pi / 5)));
  CHECK(minus[1] == doctest::Approx(2.0 - 2.0 * std::cos(2 * std::numbers::pi / 5)));
}

TEST_CASE("boundary and feature extraction") {
  int found = -1;
  double B_star = 0.0, bracket = 1.0;
  REQUIRE(sxx_witness_boundary_field(1.0, 0.0, 0.0, &found, &B_star, &bracket) == SXX_OK);
  CHECK(found == 1);
  CHECK(bracket <= 1e-8);
  CHECK(B_star ==
        doctest::Approx(std::sqrt(1.0 - std::numbers::pi * std::numbers::pi / 16.0))
            .epsilon(1e-6));
  REQUIRE(sxx_witness_boundary_field(1.0, 0.8, 0.0, &found, &B_star, &bracket) == SXX_OK);
  CHECK(found == 0);

  double bc = 0.0;
  REQUIRE(sxx_critical_staggered_field(1.0, 1e-8, &bc) == SXX_OK);
  CHECK(bc == doctest::Approx(0.56).epsilon(0.01));
  CHECK(sxx_critical_staggered_field(1.0, 1e-12, &bc) == SXX_INVALID_ARGUMENT);

  double B_peak = 0.0, eps = 0.0;
  int degenerate = -1;
  REQUIRE(sxx_max_entropy_field(1.0, 1.0, SXX_SITE_ODD, &B_peak, &eps, &degenerate) ==
          SXX_OK);
  CHECK(degenerate == 0);
  CHECK(B_peak == doctest::Approx(1.18).epsilon(0.01));
  CHECK(eps == doctest::Approx(B_peak - 1.0));
  REQUIRE(sxx_max_entropy_field(1.0, 0.0, SXX_SITE_ODD, &B_peak, &eps, &degenerate) ==
          SXX_OK);
  CHECK(degenerate == 1);
  CHECK(B_peak == 0.0);
}

TEST_CASE("oracle handle lifecycle and agreement with the analytic route") {
  sxx_oracle* oracle = nullptr;
  REQUIRE(sxx_oracle_create(1.0, 0.3, 0.4, 6, &oracle) == SXX_OK);
  REQUIRE(oracle != nullptr);

  int dim = 0;
  REQUIRE(sxx_oracle_dim(oracle, &dim) == SXX_OK);
  CHECK(dim == 64);

  std::vector<double> spectrum(dim);
  REQUIRE(sxx_oracle_eigenvalues(oracle, spectrum.data(), dim) == SXX_OK);
  CHECK(sxx_oracle_eigenvalues(oracle, spectrum.data(), dim - 1) == SXX_INVALID_ARGUMENT);
  for (int i = 1; i < dim; ++i) CHECK(spectrum[i] >= spectrum[i - 1]);

  double e0 = 0.0, e0_analytic = 0.0;
  REQUIRE(sxx_oracle_ground_energy(oracle, &e0) == SXX_OK);
  CHECK(e0 == doctest::Approx(spectrum[0]));
  REQUIRE(sxx_ground_energy_finite(1.0, 0.3, 0.4, 6, &e0_analytic) == SXX_OK);
  CHECK(std::abs(e0 - e0_analytic) <= 1e-9);

  double lnz_o = 0.0, lnz_f = 0.0;
  REQUIRE(sxx_oracle_log_partition(oracle, 0.7, &lnz_o) == SXX_OK);
  REQUIRE(sxx_log_partition_finite(1.0, 0.3, 0.4, 6, 0.7, &lnz_f) == SXX_OK);
  CHECK(std::abs(lnz_o - lnz_f) <= 1e-9);
  CHECK(sxx_oracle_log_partition(oracle, 0.0, &lnz_o) == SXX_FINITE_T_REQUIRED);

  double w_o = 0.0, w_f = 0.0;
  REQUIRE(sxx_oracle_witness(oracle, 0.0, &w_o) == SXX_OK);
  REQUIRE(sxx_witness_finite(1.0, 0.3, 0.4, 6, 0.0, &w_f) == SXX_OK);
  CHECK(std::abs(w_o - w_f) <= 1e-8);

  double sz = 0.0;
  REQUIRE(sxx_oracle_site_magnetization(oracle, 1.0, 3, &sz) == SXX_OK);
  CHECK(std::abs(sz) <= 1.0);
  CHECK(sxx_oracle_site_magnetization(oracle, 1.0, 7, &sz) == SXX_INVALID_ARGUMENT);

  double s = 0.0;
  REQUIRE(sxx_oracle_ground_site_entropy(oracle, 1, &s) == SXX_OK);
  CHECK(s >= 0.0);
  CHECK(s <= 1.0);

  sxx_oracle_free(oracle);
  sxx_oracle_free(nullptr);  // must be a no-op

  CHECK(sxx_oracle_create(1.0, 0.0, 0.0, 14, &oracle) == SXX_INVALID_ARGUMENT);
  // degenerate ground state refuses the entropy
  sxx_oracle* degen = nullptr;
  REQUIRE(sxx_oracle_create(1.0, 0.5, 0.0, 2, &degen) == SXX_OK);
  CHECK(sxx_oracle_ground_site_entropy(degen, 1, &s) == SXX_DEGENERATE_GROUND_STATE);
  sxx_oracle_free(degen);
}

}  // TEST_SUITE
