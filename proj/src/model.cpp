#include "sxx/model.hpp"

#include <algorithm>
#include <numbers>

namespace sxx {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

void validate(const CouplingParams& p) {
  if (!std::isfinite(p.J) || !std::isfinite(p.B) || !std::isfinite(p.b))
    throw error(errc::invalid_argument, "coupling parameters must be finite");
  if (p.J < 0.0)
    throw error(errc::invalid_argument, "exchange coupling J must be >= 0");
}

Temperature Temperature::finite(double t) {
  if (!std::isfinite(t) || t <= 0.0)
    throw error(errc::invalid_argument, "finite temperature must be > 0");
  return Temperature(t);
}

FiniteChain::FiniteChain(int sites) : n_(sites) {
  if (sites < 2 || sites % 2 != 0)
    throw error(errc::invalid_argument, "chain length must be even and >= 2");
}

double omega_cutoff(const CouplingParams& p) {
  const double B = std::abs(p.B);
  const double b = std::abs(p.b);
  if (B < b) return kHalfPi;
  if (p.J == 0.0) return 0.0;
  const double gap2 = (B - b) * (B + b);  // B^2 - b^2 >= 0 here
  const double r = std::sqrt(gap2) / p.J;
  return std::acos(std::min(1.0, r));
}

Dispersion dispersion_cont(double omega, const CouplingParams& p) {
  const double c = std::cos(omega);
  const double eps = 2.0 * std::sqrt(p.J * p.J * c * c + p.b * p.b);
  return {2.0 * p.B + eps, 2.0 * p.B - eps};
}

namespace {
double mode_angle(int k, const FiniteChain& chain) {
  if (k < 1 || k > chain.modes())
    throw error(errc::invalid_argument, "mode index k out of range 1..N/2");
  return std::numbers::pi * k / (chain.sites() + 1);
}
}  // namespace

Dispersion dispersion_finite(int k, const FiniteChain& chain, const CouplingParams& p) {
  return dispersion_cont(mode_angle(k, chain), p);
}

double bogoliubov_angle(int k, const FiniteChain& chain, const CouplingParams& p) {
  double two_theta = std::atan2(p.b, p.J * std::cos(mode_angle(k, chain)));
  if (two_theta < 0.0) two_theta += std::numbers::pi;
  return 0.5 * two_theta;
}

double thermal_tanh(double lambda, const Temperature& T) {
  if (T.is_zero()) return lambda > 0.0 ? 1.0 : (lambda < 0.0 ? -1.0 : 0.0);
  return std::tanh(0.5 * T.beta() * lambda);
}

}  // namespace sxx
