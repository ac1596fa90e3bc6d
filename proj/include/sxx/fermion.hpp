#pragma once

// Analytic finite-N solution built on the free-fermion mode energies
// lambda_k(+/-). The partition function factorizes over modes,
//
//   Z = prod_k 2 cosh(beta lambda_k+ / 2) 2 cosh(beta lambda_k- / 2),
//
// and the witness / magnetizations are exact parameter derivatives of ln Z,
// evaluated analytically (finite differences are demoted to tests).
//
// The witness sums the chain's N-1 bonds but keeps the 1/N normalization, so
// its product-state bound is (N-1)/N < 1 and the |W| <= 1 criterion stays
// sound on finite open chains.

#include "sxx/model.hpp"

namespace sxx::fermion {

// Modes k = 1..N/2 from dispersion_finite and bogoliubov_angle.
ModeSpectrum mode_spectrum(const FiniteChain& chain, const CouplingParams& p);

// E0 = sum_k [ min(0, lambda_k+) + min(0, lambda_k-) - 2B ].
double ground_energy_finite(const FiniteChain& chain, const CouplingParams& p);

// ln Z = sum_k [ ln 2cosh(beta lambda_k+/2) + ln 2cosh(beta lambda_k-/2) ],
// each term via the overflow-safe form |x| + log1p(e^{-2|x|}).
// Throws errc::finite_temperature_required at T = 0.
double log_partition_finite(const FiniteChain& chain, const CouplingParams& p, Temperature T);

// W = (2/ beta N) d(lnZ)/dJ
//   = (2/N) sum_k [tanh(beta l+/2) - tanh(beta l-/2)] J c_k^2 / sqrt(J^2 c_k^2 + b^2),
// c_k = cos(pi k/(N+1)). At T = 0 tanh becomes sign with sign(0) := 0. The
// J = b = 0 corner of the derivative factor (0/0) takes its J -> 0+ limit
// c_k, keeping W continuous; the tanh difference vanishes there anyway.
double witness_finite(const FiniteChain& chain, const CouplingParams& p, Temperature T);

// M = (1/beta) d(lnZ)/dB = sum_k [tanh(beta l+/2) + tanh(beta l-/2)].
double magnetization_finite(const FiniteChain& chain, const CouplingParams& p, Temperature T);

// M_s = (1/beta) d(lnZ)/db
//     = sum_k [tanh(beta l+/2) - tanh(beta l-/2)] b / sqrt(J^2 c_k^2 + b^2);
// exactly 0 at b = 0.
double staggered_magnetization_finite(const FiniteChain& chain, const CouplingParams& p,
                                      Temperature T);

}  // namespace sxx::fermion
