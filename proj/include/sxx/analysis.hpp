#pragma once

// Feature extraction on top of the thermodynamic-limit observables: the
// |W| = 1 boundary in B, the critical staggered field b_c, and the
// maximal-entropy ridge B_peak(b) of the odd-site entropy. All root finding
// is bracketing bisection; the T = 0 integrands have kinks that rule out
// derivative-based methods.

#include <span>
#include <vector>

#include "sxx/model.hpp"

namespace sxx::analysis {

struct BoundaryResult {
  bool found = false;
  double B_star = 0.0;  // outermost B >= 0 with W = 1 (valid when found)
  double bracket = 0.0; // final bisection interval width, <= 1e-8
};

// Scans 128 points over [0, sqrt(J^2+b^2) + 20T] for the outermost grid point
// with W >= 1, then bisects the crossing. found = false when no grid point
// reaches W >= 1. W is not assumed monotone in B.
BoundaryResult witness_boundary_field(double J, double b, Temperature T);

// The b where max_B W(T=0) crosses 1. At T = 0, W is constant in B on
// [0, b] (Omega stays pi/2), so the maximum sits at B = 0 and the problem
// reduces to the root of W(J, 0, b) = 1 in b, bisected on [0, J].
// Requires J > 0 and tol >= 1e-8.
double critical_staggered_field(double J, double tol = 1e-8);

struct PeakPoint {
  double b = 0.0;
  double B_peak = 0.0;
  double epsilon = 0.0;    // B_peak - b, > 0 for b > 0
  bool degenerate = false; // b = 0: the peak collapses to the point B = 0
};

// Solves g(Omega) = Omega - pi/2 + int_0^Omega b/sqrt(J^2 cos^2 + b^2) = 0
// (the odd-site eta = 1/2, i.e. M = M_s, condition) and maps back
// B_peak = sqrt(J^2 cos^2 Omega* + b^2), so b < B_peak <= sqrt(J^2 + b^2).
// Even parity admits no solution with b > 0 (both sides of the condition
// have fixed opposite signs); b = 0 collapses to the degenerate point
// B = 0 for either parity. Verifies S_odd(B_peak) = 1 to 1e-9 before
// returning. Throws errc::no_solution for even parity with b > 0.
PeakPoint max_entropy_field(double J, double b, SiteParity parity);

// max_entropy_field over an ascending positive b grid (odd parity).
std::vector<PeakPoint> epsilon_curve(double J, std::span<const double> b_grid);

enum class Classification {
  witnessed_entangled,  // W > 1: entanglement certified
  undetected,           // the witness is silent; NOT a separability claim
};

Classification classify_point(const CouplingParams& p, Temperature T);

}  // namespace sxx::analysis
