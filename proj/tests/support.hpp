#pragma once

// Shared helpers for the test suites: a deterministic uniform generator
// (raw mt19937_64 bits, so draws are identical across standard libraries)
// and a complex product-state builder used by the separability-bound checks.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace testutil {

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}

  // uniform in [0, 1)
  double next() { return static_cast<double>(rng_() >> 11) * 0x1p-53; }
  double in(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 rng_;
};

// N-qubit product state from Bloch angles: site l contributes
// cos(theta/2)|z=-1> + e^{i phi} sin(theta/2)|z=+1>, matching the bit
// convention (bit set <=> sz = +1) of the oracle module.
inline std::vector<std::complex<double>> product_state(
    const std::vector<double>& theta, const std::vector<double>& phi) {
  const int n = static_cast<int>(theta.size());
  std::vector<std::complex<double>> psi(std::size_t{1} << n);
  for (std::size_t s = 0; s < psi.size(); ++s) {
    std::complex<double> amp{1.0, 0.0};
    for (int l = 0; l < n; ++l) {
      const double half = 0.5 * theta[l];
      if ((s >> l) & 1u)
        amp *= std::polar(std::sin(half), phi[l]);
      else
        amp *= std::cos(half);
    }
    psi[s] = amp;
  }
  return psi;
}

// sum_{l=1}^{N-1} <sx_l sx_{l+1} + sy_l sy_{l+1}> on an arbitrary state.
inline double bond_correlator_sum(const std::vector<std::complex<double>>& psi, int n) {
  double total = 0.0;
  for (int l = 0; l + 1 < n; ++l) {
    const std::size_t mask = (std::size_t{1} << l) | (std::size_t{1} << (l + 1));
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t s = 0; s < psi.size(); ++s) {
      if (((s >> l) ^ (s >> (l + 1))) & 1u)
        acc += std::conj(psi[s]) * 2.0 * psi[s ^ mask];
    }
    total += acc.real();
  }
  return total;
}

}  // namespace testutil
