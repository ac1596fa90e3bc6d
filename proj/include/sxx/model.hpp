#pragma once

// Parameter types and the closed-form layer of the staggered-field XX chain:
//
//   H = -sum_l [ (J/2)(sx_l sx_{l+1} + sy_l sy_{l+1}) + B_l sz_l ],
//   B_l = B + (-1)^l b,  sites l = 1..N, open ends, N even.
//
// Odd sites carry local field B - b, even sites B + b. After the
// Jordan-Wigner / sine-Fourier / Bogoliubov chain the single-mode energies are
//
//   lambda_k(+/-) = 2B +/- 2 sqrt(J^2 cos^2(pi k/(N+1)) + b^2),  k = 1..N/2,
//
// and in the N -> infinity limit omega = pi k/(N+1) becomes continuous on
// [0, pi/2]. Everything here is a pure function of its arguments.

#include <cmath>
#include <vector>

#include "sxx/error.hpp"

namespace sxx {

struct CouplingParams {
  double J = 1.0;  // exchange coupling, J >= 0
  double B = 0.0;  // uniform field
  double b = 0.0;  // staggered field amplitude
};

// Throws errc::invalid_argument unless J >= 0 and all fields are finite.
void validate(const CouplingParams& p);

// Exact zero is its own variant; it is never approximated by a large beta.
class Temperature {
 public:
  static Temperature zero() noexcept { return Temperature(0.0); }
  static Temperature finite(double t);  // requires t > 0 and finite

  bool is_zero() const noexcept { return t_ == 0.0; }
  double value() const noexcept { return t_; }
  double beta() const { return 1.0 / t_; }  // meaningful for finite T only

 private:
  explicit Temperature(double t) noexcept : t_(t) {}
  double t_;
};

class FiniteChain {
 public:
  explicit FiniteChain(int sites);  // requires even sites >= 2
  int sites() const noexcept { return n_; }
  int modes() const noexcept { return n_ / 2; }

 private:
  int n_;
};

enum class SiteParity { even, odd };

// (-1)^l: +1 on even sites, -1 on odd sites.
inline int parity_sign(SiteParity p) noexcept {
  return p == SiteParity::even ? +1 : -1;
}

struct Dispersion {
  double plus;
  double minus;
};

struct Mode {
  double lambda_plus;
  double lambda_minus;
  double theta;  // Bogoliubov angle, 2*theta in [0, pi)
};

// Entries ordered k = 1..N/2.
using ModeSpectrum = std::vector<Mode>;

// Fermi-edge angle of the zero-temperature mode sea:
//   pi/2                         for |B| <  |b|
//   acos(sqrt(B^2 - b^2)/J)      for |b| <= |B| <= sqrt(J^2 + b^2)
//   0                            for |B| >  sqrt(J^2 + b^2)
// The acos argument is clamped to [0,1]; B^2 - b^2 can overshoot J^2 by an
// ulp right at the closing edge. J = 0 degenerates to the outer cases.
double omega_cutoff(const CouplingParams& p);

// lambda(omega) = 2B +/- 2 sqrt(J^2 cos^2 omega + b^2), omega in [0, pi/2].
Dispersion dispersion_cont(double omega, const CouplingParams& p);

// dispersion_cont at omega = pi k/(N+1); throws unless 1 <= k <= N/2.
Dispersion dispersion_finite(int k, const FiniteChain& chain, const CouplingParams& p);

// theta_k = atan2(b, J cos(pi k/(N+1))) / 2, shifted so 2*theta_k lands in
// [0, pi). tan(2 theta_k) = b / [J cos(pi k/(N+1))]; atan2(0, 0) = 0 covers
// the J = b = 0 corner.
double bogoliubov_angle(int k, const FiniteChain& chain, const CouplingParams& p);

// tanh(beta*lambda/2) at finite T, sign(lambda) at T = 0 with sign(0) := 0.
double thermal_tanh(double lambda, const Temperature& T);

}  // namespace sxx
