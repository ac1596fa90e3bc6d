#include "sxx.h"

#include <cmath>
#include <new>

#include "sxx/analysis.hpp"
#include "sxx/fermion.hpp"
#include "sxx/model.hpp"
#include "sxx/oracle.hpp"
#include "sxx/thermo.hpp"

struct sxx_oracle {
  sxx::oracle::ExactDiagonalization impl;
};

namespace {

sxx_status map_code(sxx::errc code) {
  switch (code) {
    case sxx::errc::invalid_argument: return SXX_INVALID_ARGUMENT;
    case sxx::errc::finite_temperature_required: return SXX_FINITE_T_REQUIRED;
    case sxx::errc::zero_temperature_required: return SXX_ZERO_T_REQUIRED;
    case sxx::errc::degenerate_ground_state: return SXX_DEGENERATE_GROUND_STATE;
    case sxx::errc::no_solution: return SXX_NO_SOLUTION;
    case sxx::errc::internal: return SXX_INTERNAL_ERROR;
  }
  return SXX_INTERNAL_ERROR;
}

template <class F>
sxx_status guarded(F&& body) noexcept {
  try {
    body();
    return SXX_OK;
  } catch (const sxx::error& e) {
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    return SXX_INTERNAL_ERROR;
  } catch (...) {
    return SXX_INTERNAL_ERROR;
  }
}

sxx::Temperature as_temperature(double t) {
  if (!std::isfinite(t) || t < 0.0)
    throw sxx::error(sxx::errc::invalid_argument,
                     "temperature must be finite and >= 0");
  return t == 0.0 ? sxx::Temperature::zero() : sxx::Temperature::finite(t);
}

sxx::SiteParity as_parity(sxx_parity parity) {
  if (parity != SXX_SITE_EVEN && parity != SXX_SITE_ODD)
    throw sxx::error(sxx::errc::invalid_argument, "bad parity value");
  return parity == SXX_SITE_EVEN ? sxx::SiteParity::even : sxx::SiteParity::odd;
}

void require(bool ok) {
  if (!ok) throw sxx::error(sxx::errc::invalid_argument, "null output pointer");
}

}  // namespace

extern "C" {

const char* sxx_version(void) { return "0.1.0"; }

const char* sxx_status_message(sxx_status status) {
  switch (status) {
    case SXX_OK: return "ok";
    case SXX_INVALID_ARGUMENT: return "invalid argument";
    case SXX_FINITE_T_REQUIRED: return "operation requires T > 0";
    case SXX_ZERO_T_REQUIRED: return "operation is defined at T = 0 only";
    case SXX_DEGENERATE_GROUND_STATE: return "ground state is degenerate";
    case SXX_NO_SOLUTION: return "no solution exists";
    case SXX_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

sxx_status sxx_omega_cutoff(double J, double B, double b, double* omega) {
  return guarded([&] {
    require(omega);
    const sxx::CouplingParams p{J, B, b};
    sxx::validate(p);
    *omega = sxx::omega_cutoff(p);
  });
}

sxx_status sxx_dispersion_cont(double J, double B, double b, double omega,
                               double* lambda_plus, double* lambda_minus) {
  return guarded([&] {
    require(lambda_plus && lambda_minus);
    const sxx::CouplingParams p{J, B, b};
    sxx::validate(p);
    const sxx::Dispersion d = sxx::dispersion_cont(omega, p);
    *lambda_plus = d.plus;
    *lambda_minus = d.minus;
  });
}

sxx_status sxx_dispersion_finite(double J, double B, double b, int n_sites, int k,
                                 double* lambda_plus, double* lambda_minus) {
  return guarded([&] {
    require(lambda_plus && lambda_minus);
    const sxx::CouplingParams p{J, B, b};
    sxx::validate(p);
    const sxx::Dispersion d = sxx::dispersion_finite(k, sxx::FiniteChain(n_sites), p);
    *lambda_plus = d.plus;
    *lambda_minus = d.minus;
  });
}

sxx_status sxx_bogoliubov_angle(double J, double B, double b, int n_sites, int k,
                                double* theta) {
  return guarded([&] {
    require(theta);
    const sxx::CouplingParams p{J, B, b};
    sxx::validate(p);
    *theta = sxx::bogoliubov_angle(k, sxx::FiniteChain(n_sites), p);
  });
}

sxx_status sxx_mode_spectrum(double J, double B, double b, int n_sites,
                             double* lambda_plus, double* lambda_minus,
                             double* theta) {
  return guarded([&] {
    const auto modes =
        sxx::fermion::mode_spectrum(sxx::FiniteChain(n_sites), {J, B, b});
    for (std::size_t i = 0; i < modes.size(); ++i) {
      if (lambda_plus) lambda_plus[i] = modes[i].lambda_plus;
      if (lambda_minus) lambda_minus[i] = modes[i].lambda_minus;
      if (theta) theta[i] = modes[i].theta;
    }
  });
}

sxx_status sxx_ground_energy_finite(double J, double B, double b, int n_sites,
                                    double* energy) {
  return guarded([&] {
    require(energy);
    *energy = sxx::fermion::ground_energy_finite(sxx::FiniteChain(n_sites), {J, B, b});
  });
}

sxx_status sxx_log_partition_finite(double J, double B, double b, int n_sites,
                                    double t, double* ln_z) {
  return guarded([&] {
    require(ln_z);
    *ln_z = sxx::fermion::log_partition_finite(sxx::FiniteChain(n_sites), {J, B, b},
                                               as_temperature(t));
  });
}

sxx_status sxx_witness_finite(double J, double B, double b, int n_sites,
                              double t, double* witness) {
  return guarded([&] {
    require(witness);
    *witness = sxx::fermion::witness_finite(sxx::FiniteChain(n_sites), {J, B, b},
                                            as_temperature(t));
  });
}

sxx_status sxx_magnetization_finite(double J, double B, double b, int n_sites,
                                    double t, double* magnetization) {
  return guarded([&] {
    require(magnetization);
    *magnetization = sxx::fermion::magnetization_finite(
        sxx::FiniteChain(n_sites), {J, B, b}, as_temperature(t));
  });
}

sxx_status sxx_staggered_magnetization_finite(double J, double B, double b,
                                              int n_sites, double t,
                                              double* staggered) {
  return guarded([&] {
    require(staggered);
    *staggered = sxx::fermion::staggered_magnetization_finite(
        sxx::FiniteChain(n_sites), {J, B, b}, as_temperature(t));
  });
}

sxx_status sxx_log_partition_density(double J, double B, double b, double t,
                                     double* density) {
  return guarded([&] {
    require(density);
    *density = sxx::thermo::log_partition_density({J, B, b}, as_temperature(t));
  });
}

sxx_status sxx_witness_thermo(double J, double B, double b, double t,
                              double* witness) {
  return guarded([&] {
    require(witness);
    *witness = sxx::thermo::witness_thermo({J, B, b}, as_temperature(t));
  });
}

sxx_status sxx_magnetization_density(double J, double B, double b, double t,
                                     double* magnetization) {
  return guarded([&] {
    require(magnetization);
    *magnetization = sxx::thermo::magnetization_density({J, B, b}, as_temperature(t));
  });
}

sxx_status sxx_staggered_magnetization_density(double J, double B, double b,
                                               double t, double* staggered) {
  return guarded([&] {
    require(staggered);
    *staggered =
        sxx::thermo::staggered_magnetization_density({J, B, b}, as_temperature(t));
  });
}

sxx_status sxx_site_occupation(double J, double B, double b, sxx_parity parity,
                               double t, double* eta) {
  return guarded([&] {
    require(eta);
    *eta = sxx::thermo::site_occupation({J, B, b}, as_parity(parity),
                                        as_temperature(t));
  });
}

sxx_status sxx_site_entropy(double J, double B, double b, sxx_parity parity,
                            double t, double* eta, double* entropy) {
  return guarded([&] {
    require(entropy);
    const sxx::thermo::EntropyPoint point = sxx::thermo::site_entropy(
        {J, B, b}, as_parity(parity), as_temperature(t));
    if (eta) *eta = point.eta;
    *entropy = point.S;
  });
}

sxx_status sxx_witness_boundary_field(double J, double b, double t, int* found,
                                      double* B_star, double* bracket) {
  return guarded([&] {
    require(found);
    const sxx::analysis::BoundaryResult r =
        sxx::analysis::witness_boundary_field(J, b, as_temperature(t));
    *found = r.found ? 1 : 0;
    if (r.found) {
      if (B_star) *B_star = r.B_star;
      if (bracket) *bracket = r.bracket;
    }
  });
}

sxx_status sxx_critical_staggered_field(double J, double tol, double* b_c) {
  return guarded([&] {
    require(b_c);
    *b_c = sxx::analysis::critical_staggered_field(J, tol);
  });
}

sxx_status sxx_max_entropy_field(double J, double b, sxx_parity parity,
                                 double* B_peak, double* epsilon,
                                 int* degenerate) {
  return guarded([&] {
    require(B_peak);
    const sxx::analysis::PeakPoint peak =
        sxx::analysis::max_entropy_field(J, b, as_parity(parity));
    *B_peak = peak.B_peak;
    if (epsilon) *epsilon = peak.epsilon;
    if (degenerate) *degenerate = peak.degenerate ? 1 : 0;
  });
}

sxx_status sxx_classify_point(double J, double B, double b, double t,
                              int* witnessed) {
  return guarded([&] {
    require(witnessed);
    *witnessed = sxx::analysis::classify_point({J, B, b}, as_temperature(t)) ==
                         sxx::analysis::Classification::witnessed_entangled
                     ? 1
                     : 0;
  });
}

sxx_status sxx_oracle_create(double J, double B, double b, int n_sites,
                             sxx_oracle** out) {
  return guarded([&] {
    require(out);
    *out = new sxx_oracle{
        sxx::oracle::ExactDiagonalization(sxx::FiniteChain(n_sites), {J, B, b})};
  });
}

void sxx_oracle_free(sxx_oracle* oracle) { delete oracle; }

sxx_status sxx_oracle_dim(const sxx_oracle* oracle, int* dim) {
  return guarded([&] {
    require(oracle && dim);
    *dim = oracle->impl.dim();
  });
}

sxx_status sxx_oracle_eigenvalues(const sxx_oracle* oracle, double* out,
                                  int capacity) {
  return guarded([&] {
    require(oracle && out);
    const auto& values = oracle->impl.eigenvalues();
    if (capacity < static_cast<int>(values.size()))
      throw sxx::error(sxx::errc::invalid_argument, "capacity < dim");
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i];
  });
}

sxx_status sxx_oracle_ground_energy(const sxx_oracle* oracle, double* energy) {
  return guarded([&] {
    require(oracle && energy);
    *energy = oracle->impl.ground_energy();
  });
}

sxx_status sxx_oracle_log_partition(const sxx_oracle* oracle, double t,
                                    double* ln_z) {
  return guarded([&] {
    require(oracle && ln_z);
    *ln_z = oracle->impl.log_partition(as_temperature(t));
  });
}

sxx_status sxx_oracle_witness(const sxx_oracle* oracle, double t,
                              double* witness) {
  return guarded([&] {
    require(oracle && witness);
    *witness = oracle->impl.witness(as_temperature(t));
  });
}

sxx_status sxx_oracle_site_magnetization(const sxx_oracle* oracle, double t,
                                         int site, double* sz) {
  return guarded([&] {
    require(oracle && sz);
    *sz = oracle->impl.site_magnetization(as_temperature(t), site);
  });
}

sxx_status sxx_oracle_ground_site_entropy(const sxx_oracle* oracle, int site,
                                          double* entropy) {
  return guarded([&] {
    require(oracle && entropy);
    *entropy = oracle->impl.ground_site_entropy(site);
  });
}

}  // extern "C"
