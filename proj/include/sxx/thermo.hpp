#pragma once

// Thermodynamic-limit observables: the per-site ln Z integral and its exact
// J/B/b derivatives, the zero-temperature closed forms driven by the cutoff
// angle Omega, and the single-site occupation / entropy.
//
// Quadrature policy: adaptive 15-point Gauss-Legendre with abs tol 1e-12 and
// rel tol 1e-10. At T = 0 the sign-limit integrands are used directly on
// [0, Omega] (never a large-beta proxy); at finite T with beta*J > 20 the
// [0, pi/2] domain is split at Omega, where the integrands develop a steep
// front as the lower band edge crosses zero.

#include <optional>

#include "sxx/model.hpp"

namespace sxx::thermo {

struct ThermoObservables {
  std::optional<double> lnZ_density;          // finite T only
  std::optional<double> free_energy_density;  // -T * lnZ_density
  double W = 0.0;
  double m = 0.0;
  double m_s = 0.0;
  double omega = 0.0;
};

struct EntropyPoint {
  double eta;  // occupation in [0, 1]
  double S;    // binary entropy in bits
};

// (1/pi) int_0^{pi/2} ln[4 cosh(beta l+/2) cosh(beta l-/2)] d omega.
// Throws errc::finite_temperature_required at T = 0 (the density diverges).
double log_partition_density(const CouplingParams& p, Temperature T);

// W = (2/beta) d/dJ of the density. Finite T:
//   (2/pi) int_0^{pi/2} [tanh(beta l+/2) - tanh(beta l-/2)]
//                        J cos^2/sqrt(J^2 cos^2 + b^2) d omega;
// T = 0: (4/pi) int_0^Omega J cos^2/sqrt(J^2 cos^2 + b^2) d omega.
// Exactly 0 at J = 0.
double witness_thermo(const CouplingParams& p, Temperature T);

// T = 0: sign(B) (1 - 2 Omega/pi), exactly. Finite T:
// (1/pi) int [tanh(beta l+/2) + tanh(beta l-/2)] d omega.
double magnetization_density(const CouplingParams& p, Temperature T);

// T = 0: (1/pi) int_0^Omega 2b/sqrt(J^2 cos^2 + b^2) d omega. Finite T:
// (1/pi) int [tanh(beta l+/2) - tanh(beta l-/2)] b/sqrt(...) d omega.
// Exactly 0 at b = 0 (short-circuited, no quadrature).
double staggered_magnetization_density(const CouplingParams& p, Temperature T);

// eta = (1 + m + (-1)^l m_s)/2 clamped to [0,1]. The zero-temperature value
// is the physically grounded one; finite T evaluates the same combination
// from finite-T densities (an extension beyond the T = 0 derivation, see
// README).
double site_occupation(const CouplingParams& p, SiteParity parity, Temperature T);

// Binary entropy of site_occupation. Defined at T = 0 only, where the chain
// is pure and the entropy measures site-rest entanglement; throws
// errc::zero_temperature_required otherwise.
EntropyPoint site_entropy(const CouplingParams& p, SiteParity parity, Temperature T);

// Bundle of the above at one parameter point.
ThermoObservables observables(const CouplingParams& p, Temperature T);

}  // namespace sxx::thermo
