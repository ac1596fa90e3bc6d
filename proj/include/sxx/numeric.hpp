#pragma once

// Small numeric kernels shared across modules: overflow-safe log(2 cosh),
// binary entropy, adaptive Gauss-Legendre quadrature and bracketing bisection.

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

namespace sxx::numeric {

// ln(2 cosh x) = |x| + log1p(e^{-2|x|}); exact for |x| up to DBL_MAX scale,
// where cosh itself overflows past ~710.
inline double log_2cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a));
}

// -eta log2 eta - (1-eta) log2(1-eta) with 0 log 0 := 0; eta clamped to [0,1].
double binary_entropy(double eta);

// 15-point Gauss-Legendre nodes/weights on [-1, 1], nodes ascending.
struct GaussLegendre {
  std::array<double, 15> node;
  std::array<double, 15> weight;
};
const GaussLegendre& gauss_legendre_15();

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 48;
};

namespace detail {

template <class F>
double gl15(const F& f, double a, double b) {
  const GaussLegendre& q = gauss_legendre_15();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < q.node.size(); ++i)
    sum += q.weight[i] * f(mid + half * q.node[i]);
  return half * sum;
}

template <class F>
double adaptive(const F& f, double a, double b, double whole, double abs_tol,
                double rel_tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gl15(f, a, mid);
  const double right = gl15(f, mid, b);
  const double refined = left + right;
  const double err = std::abs(refined - whole);
  if (depth <= 0 || err <= std::max(abs_tol, rel_tol * std::abs(refined)))
    return refined;
  return adaptive(f, a, mid, left, 0.5 * abs_tol, rel_tol, depth - 1) +
         adaptive(f, mid, b, right, 0.5 * abs_tol, rel_tol, depth - 1);
}

}  // namespace detail

// Adaptive composite Gauss-Legendre: 15-point panels, recursive bisection,
// panel accepted when the two-half refinement moves the estimate by less than
// the tolerance. Deterministic for a given integrand.
template <class F>
double integrate(const F& f, double a, double b, QuadratureOptions opt = {}) {
  if (a == b) return 0.0;
  return detail::adaptive(f, a, b, detail::gl15(f, a, b), opt.abs_tol,
                          opt.rel_tol, opt.max_depth);
}

struct Bracket {
  double lo;
  double hi;
  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
};

// Bracketing bisection on [lo, hi]; requires f(lo) and f(hi) on opposite
// sides of zero (a zero endpoint counts as its own side). Shrinks until the
// width is <= xtol.
template <class F>
Bracket bisect(const F& f, double lo, double hi, double xtol) {
  const bool lo_nonneg = f(lo) >= 0.0;
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at rounding floor
    if ((f(mid) >= 0.0) == lo_nonneg)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

}  // namespace sxx::numeric
