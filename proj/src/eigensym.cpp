#include "sxx/eigensym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sxx/error.hpp"

namespace sxx::linalg {

namespace {

// Householder reduction to tridiagonal form. On exit d holds the diagonal,
// e the subdiagonal (e[0] = 0), and a the accumulated orthogonal transform Q
// with A = Q T Q^T.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
  auto A = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(A(i, k));
      if (scale == 0.0) {
        e[i] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          A(j, i) = A(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
          e[j] = g / h;
          f += e[j] * A(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = A(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + g * A(i, k);
        }
      }
    } else {
      e[i] = A(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    const int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0.0;
        for (int k = 0; k <= l; ++k) g += A(i, k) * A(k, j);
        for (int k = 0; k <= l; ++k) A(k, j) -= g * A(k, i);
      }
    }
    d[i] = A(i, i);
    A(i, i) = 1.0;
    for (int j = 0; j <= l; ++j) A(j, i) = A(i, j) = 0.0;
  }
}

// QL with implicit shifts on the tridiagonal (d, e). z is the transform
// accumulator stored transposed (row j = eigenvector of d[j] on exit), so
// each plane rotation sweeps two contiguous rows.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n,
                 std::vector<double>& z) {
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw error(errc::internal, "symmetric QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double bb = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * bb;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - bb;
          double* zi = z.data() + static_cast<std::size_t>(i) * n;
          double* zi1 = z.data() + static_cast<std::size_t>(i + 1) * n;
          for (int k = 0; k < n; ++k) {
            f = zi1[k];
            zi1[k] = s * zi[k] + c * f;
            zi[k] = c * zi[k] - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

EigenResult eigen_symmetric(std::span<const double> a, int dim) {
  if (dim < 1 || a.size() != static_cast<std::size_t>(dim) * dim)
    throw error(errc::invalid_argument, "matrix buffer does not match dim");

  EigenResult out;
  out.dim = dim;
  if (dim == 1) {
    out.values = {a[0]};
    out.vectors = {1.0};
    return out;
  }

  std::vector<double> q(a.begin(), a.end());
  std::vector<double> d(dim), e(dim);
  tridiagonalize(q, dim, d, e);

  std::vector<double> qt(static_cast<std::size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      qt[static_cast<std::size_t>(j) * dim + i] = q[static_cast<std::size_t>(i) * dim + j];
  ql_implicit(d, e, dim, qt);

  std::vector<int> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return d[i] < d[j]; });

  out.values.resize(dim);
  out.vectors.resize(static_cast<std::size_t>(dim) * dim);
  for (int j = 0; j < dim; ++j) {
    out.values[j] = d[order[j]];
    const double* src = qt.data() + static_cast<std::size_t>(order[j]) * dim;
    std::copy(src, src + dim,
              out.vectors.begin() + static_cast<std::size_t>(j) * dim);
  }
  return out;
}

}  // namespace sxx::linalg
