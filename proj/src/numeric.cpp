#include "sxx/numeric.hpp"

#include <numbers>

namespace sxx::numeric {

double binary_entropy(double eta) {
  if (eta <= 0.0 || eta >= 1.0) return 0.0;
  return -(eta * std::log2(eta) + (1.0 - eta) * std::log2(1.0 - eta));
}

namespace {

// Legendre roots by Newton iteration on the three-term recurrence.
GaussLegendre build_gl15() {
  constexpr int n = 15;
  GaussLegendre q{};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.node[i] = -x;  // iteration starts from the upper half; store ascending
    q.node[n - 1 - i] = x;
    q.weight[i] = w;
    q.weight[n - 1 - i] = w;
  }
  return q;
}

}  // namespace

const GaussLegendre& gauss_legendre_15() {
  static const GaussLegendre q = build_gl15();
  return q;
}

}  // namespace sxx::numeric
