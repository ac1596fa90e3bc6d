#include "sxx/analysis.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "sxx/numeric.hpp"
#include "sxx/thermo.hpp"

namespace sxx::analysis {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kScanPoints = 128;
constexpr double kBisectTol = 1e-8;

double witness_at(double J, double B, double b, Temperature T) {
  return thermo::witness_thermo({J, B, b}, T);
}

}  // namespace

BoundaryResult witness_boundary_field(double J, double b, Temperature T) {
  if (!(J > 0.0)) throw error(errc::invalid_argument, "boundary tracing needs J > 0");
  validate({J, 0.0, b});

  double b_max = std::sqrt(J * J + b * b) + 20.0 * T.value();
  // W -> 0 for large B at any T; grow the window in the unlikely case the
  // last grid point is still inside the witnessed region.
  for (int grow = 0; witness_at(J, b_max, b, T) >= 1.0; ++grow) {
    if (grow == 8) throw error(errc::internal, "witnessed region did not close");
    b_max *= 2.0;
  }

  int last = -1;
  std::array<double, kScanPoints> grid{};
  for (int i = 0; i < kScanPoints; ++i) {
    grid[i] = i == kScanPoints - 1 ? b_max : b_max * i / (kScanPoints - 1);
    if (witness_at(J, grid[i], b, T) >= 1.0) last = i;
  }
  if (last < 0) return {};
  if (last == kScanPoints - 1)
    throw error(errc::internal, "boundary scan lost its outer bracket");

  const auto f = [&](double B) { return witness_at(J, B, b, T) - 1.0; };
  const numeric::Bracket r = numeric::bisect(f, grid[last], grid[last + 1], kBisectTol);
  return {true, r.mid(), r.width()};
}

double critical_staggered_field(double J, double tol) {
  if (!(J > 0.0)) throw error(errc::invalid_argument, "b_c is defined for J > 0");
  if (!(tol >= 1e-8))
    throw error(errc::invalid_argument, "b_c tolerance must be >= 1e-8");
  const Temperature zero = Temperature::zero();
  // W(J, 0, 0) = 4/pi > 1 and W(J, 0, J) < 1: the bracket is [0, J].
  const auto f = [&](double b) { return witness_at(J, 0.0, b, zero) - 1.0; };
  return numeric::bisect(f, 0.0, J, tol).mid();
}

PeakPoint max_entropy_field(double J, double b, SiteParity parity) {
  if (!(J > 0.0) || b < 0.0 || !std::isfinite(b))
    throw error(errc::invalid_argument, "entropy peak needs J > 0 and b >= 0");
  if (b == 0.0) return {0.0, 0.0, 0.0, true};
  if (parity == SiteParity::even)
    throw error(errc::no_solution,
                "even-site entropy reaches 1 only at B = b = 0");

  // g(0) = -pi/2 < 0 < g(pi/2) and g' = 1 + b/sqrt(...) > 0: one root.
  // Bisected to 1e-10 so that |eta_odd - 1/2| = |g(Omega)|/pi stays below
  // 1e-9 at the returned point.
  auto g = [&](double omega) {
    auto f = [&](double w) {
      const double c = std::cos(w);
      return b / std::sqrt(J * J * c * c + b * b);
    };
    return omega - kHalfPi + numeric::integrate(f, 0.0, omega);
  };
  const double omega_star = numeric::bisect(g, 0.0, kHalfPi, 1e-10).mid();
  const double c = std::cos(omega_star);
  const double B_peak = std::sqrt(J * J * c * c + b * b);

  const thermo::EntropyPoint s =
      thermo::site_entropy({J, B_peak, b}, SiteParity::odd, Temperature::zero());
  if (std::abs(s.S - 1.0) > 1e-9)
    throw error(errc::internal, "entropy peak failed its S = 1 check");
  return {b, B_peak, B_peak - b, false};
}

std::vector<PeakPoint> epsilon_curve(double J, std::span<const double> b_grid) {
  std::vector<PeakPoint> out;
  out.reserve(b_grid.size());
  double prev = 0.0;
  for (double b : b_grid) {
    if (!(b > 0.0) || b < prev)
      throw error(errc::invalid_argument, "b grid must be ascending and positive");
    prev = b;
    out.push_back(max_entropy_field(J, b, SiteParity::odd));
  }
  return out;
}

Classification classify_point(const CouplingParams& p, Temperature T) {
  return thermo::witness_thermo(p, T) > 1.0 + 1e-12
             ? Classification::witnessed_entangled
             : Classification::undetected;
}

}  // namespace sxx::analysis
