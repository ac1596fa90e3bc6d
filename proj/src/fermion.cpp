#include "sxx/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sxx/numeric.hpp"

namespace sxx::fermion {

namespace {

double mode_cos(int k, const FiniteChain& chain) {
  return std::cos(std::numbers::pi * k / (chain.sites() + 1));
}

}  // namespace

ModeSpectrum mode_spectrum(const FiniteChain& chain, const CouplingParams& p) {
  validate(p);
  ModeSpectrum modes;
  modes.reserve(chain.modes());
  for (int k = 1; k <= chain.modes(); ++k) {
    const Dispersion d = dispersion_finite(k, chain, p);
    modes.push_back({d.plus, d.minus, bogoliubov_angle(k, chain, p)});
  }
  return modes;
}

double ground_energy_finite(const FiniteChain& chain, const CouplingParams& p) {
  validate(p);
  double e0 = 0.0;
  for (int k = 1; k <= chain.modes(); ++k) {
    const Dispersion d = dispersion_finite(k, chain, p);
    e0 += std::min(0.0, d.plus) + std::min(0.0, d.minus) - 2.0 * p.B;
  }
  return e0;
}

double log_partition_finite(const FiniteChain& chain, const CouplingParams& p, Temperature T) {
  validate(p);
  if (T.is_zero())
    throw error(errc::finite_temperature_required,
                "ln Z diverges at T = 0; use ground_energy_finite()");
  const double beta = T.beta();
  double lnz = 0.0;
  for (int k = 1; k <= chain.modes(); ++k) {
    const Dispersion d = dispersion_finite(k, chain, p);
    lnz += numeric::log_2cosh(0.5 * beta * d.plus) +
           numeric::log_2cosh(0.5 * beta * d.minus);
  }
  return lnz;
}

double witness_finite(const FiniteChain& chain, const CouplingParams& p, Temperature T) {
  validate(p);
  double sum = 0.0;
  for (int k = 1; k <= chain.modes(); ++k) {
    const double c = mode_cos(k, chain);
    const double root = std::sqrt(p.J * p.J * c * c + p.b * p.b);
    const double factor = root == 0.0 ? c : p.J * c * c / root;
    const Dispersion d = dispersion_finite(k, chain, p);
    sum += (thermal_tanh(d.plus, T) - thermal_tanh(d.minus, T)) * factor;
  }
  return 2.0 * sum / chain.sites();
}

double magnetization_finite(const FiniteChain& chain, const CouplingParams& p, Temperature T) {
  validate(p);
  double sum = 0.0;
  for (int k = 1; k <= chain.modes(); ++k) {
    const Dispersion d = dispersion_finite(k, chain, p);
    sum += thermal_tanh(d.plus, T) + thermal_tanh(d.minus, T);
  }
  return sum;
}

double staggered_magnetization_finite(const FiniteChain& chain, const CouplingParams& p,
                                      Temperature T) {
  validate(p);
  if (p.b == 0.0) return 0.0;
  double sum = 0.0;
  for (int k = 1; k <= chain.modes(); ++k) {
    const double c = mode_cos(k, chain);
    const double root = std::sqrt(p.J * p.J * c * c + p.b * p.b);  // >= |b| > 0
    const Dispersion d = dispersion_finite(k, chain, p);
    sum += (thermal_tanh(d.plus, T) - thermal_tanh(d.minus, T)) * p.b / root;
  }
  return sum;
}

}  // namespace sxx::fermion
