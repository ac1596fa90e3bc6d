#include "sxx/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sxx/numeric.hpp"

namespace sxx::thermo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

// (1/2) d lambda+ / dJ. The J = b = 0 corner is the J -> 0+ limit cos(omega);
// with b = 0 the same expression also sidesteps the 0/0 at omega = pi/2.
double coupling_factor(double omega, const CouplingParams& p) {
  const double c = std::cos(omega);
  if (p.b == 0.0) return c;
  return p.J * c * c / std::sqrt(p.J * p.J * c * c + p.b * p.b);
}

// Integrate over [0, pi/2], splitting at Omega when the integrand has a
// steep thermal front there.
template <class F>
double band_integral(const F& f, const CouplingParams& p, Temperature T) {
  if (!T.is_zero() && T.beta() * p.J > 20.0) {
    const double omega = omega_cutoff(p);
    if (omega > 0.0 && omega < kHalfPi)
      return numeric::integrate(f, 0.0, omega) +
             numeric::integrate(f, omega, kHalfPi);
  }
  return numeric::integrate(f, 0.0, kHalfPi);
}

}  // namespace

double log_partition_density(const CouplingParams& p, Temperature T) {
  validate(p);
  if (T.is_zero())
    throw error(errc::finite_temperature_required,
                "the ln Z density diverges at T = 0");
  const double beta = T.beta();
  auto f = [&](double omega) {
    const Dispersion d = dispersion_cont(omega, p);
    return numeric::log_2cosh(0.5 * beta * d.plus) +
           numeric::log_2cosh(0.5 * beta * d.minus);
  };
  return band_integral(f, p, T) / kPi;
}

double witness_thermo(const CouplingParams& p, Temperature T) {
  validate(p);
  if (p.J == 0.0) return 0.0;
  if (T.is_zero()) {
    const double omega = omega_cutoff(p);
    if (omega == 0.0) return 0.0;
    auto f = [&](double w) { return coupling_factor(w, p); };
    return 4.0 / kPi * numeric::integrate(f, 0.0, omega);
  }
  auto f = [&](double omega) {
    const Dispersion d = dispersion_cont(omega, p);
    return (thermal_tanh(d.plus, T) - thermal_tanh(d.minus, T)) *
           coupling_factor(omega, p);
  };
  return 2.0 / kPi * band_integral(f, p, T);
}

double magnetization_density(const CouplingParams& p, Temperature T) {
  validate(p);
  if (T.is_zero()) {
    const double mag = 1.0 - 2.0 * omega_cutoff(p) / kPi;
    return p.B < 0.0 ? -mag : mag;  // mag = 0 exactly at B = 0
  }
  auto f = [&](double omega) {
    const Dispersion d = dispersion_cont(omega, p);
    return thermal_tanh(d.plus, T) + thermal_tanh(d.minus, T);
  };
  return band_integral(f, p, T) / kPi;
}

double staggered_magnetization_density(const CouplingParams& p, Temperature T) {
  validate(p);
  if (p.b == 0.0) return 0.0;
  auto staggered_factor = [&](double omega) {
    const double c = std::cos(omega);
    return p.b / std::sqrt(p.J * p.J * c * c + p.b * p.b);  // root >= |b| > 0
  };
  if (T.is_zero()) {
    const double omega = omega_cutoff(p);
    if (omega == 0.0) return 0.0;
    auto f = [&](double w) { return 2.0 * staggered_factor(w); };
    return numeric::integrate(f, 0.0, omega) / kPi;
  }
  auto f = [&](double omega) {
    const Dispersion d = dispersion_cont(omega, p);
    return (thermal_tanh(d.plus, T) - thermal_tanh(d.minus, T)) *
           staggered_factor(omega);
  };
  return band_integral(f, p, T) / kPi;
}

double site_occupation(const CouplingParams& p, SiteParity parity, Temperature T) {
  const double m = magnetization_density(p, T);
  const double m_s = staggered_magnetization_density(p, T);
  const double eta = 0.5 * (1.0 + m + parity_sign(parity) * m_s);
  return std::clamp(eta, 0.0, 1.0);
}

EntropyPoint site_entropy(const CouplingParams& p, SiteParity parity, Temperature T) {
  if (!T.is_zero())
    throw error(errc::zero_temperature_required,
                "single-site entropy is defined at T = 0 only (the chain "
                "must be in its pure ground state)");
  const double eta = site_occupation(p, parity, T);
  return {eta, numeric::binary_entropy(eta)};
}

ThermoObservables observables(const CouplingParams& p, Temperature T) {
  ThermoObservables out;
  out.omega = omega_cutoff(p);
  out.W = witness_thermo(p, T);
  out.m = magnetization_density(p, T);
  out.m_s = staggered_magnetization_density(p, T);
  if (!T.is_zero()) {
    out.lnZ_density = log_partition_density(p, T);
    out.free_energy_density = -T.value() * *out.lnZ_density;
  }
  return out;
}

}  // namespace sxx::thermo
