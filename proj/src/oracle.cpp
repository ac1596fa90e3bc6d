#include "sxx/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "sxx/numeric.hpp"

namespace sxx::oracle {

namespace {

double site_field(const CouplingParams& p, int site) {
  return p.B + (site % 2 == 1 ? -p.b : p.b);
}

double z_value(unsigned s, int site) {
  return (s >> (site - 1)) & 1u ? 1.0 : -1.0;
}

}  // namespace

double DenseOperator::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double DenseOperator::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

DenseOperator build_hamiltonian(const FiniteChain& chain, const CouplingParams& p) {
  const int n = chain.sites();
  if (n > kMaxSites)
    throw error(errc::invalid_argument, "dense oracle is limited to N <= 12");
  validate(p);

  const unsigned dim = 1u << n;
  DenseOperator h(static_cast<int>(dim));
  for (unsigned s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (int l = 1; l <= n; ++l) diag -= site_field(p, l) * z_value(s, l);
    h.at(s, s) = diag;
    for (int l = 1; l < n; ++l) {
      if (((s >> (l - 1)) ^ (s >> l)) & 1u) {
        const unsigned flipped = s ^ ((1u << (l - 1)) | (1u << l));
        h.at(s, flipped) = -p.J;
      }
    }
  }
  return h;
}

ExactDiagonalization::ExactDiagonalization(const FiniteChain& chain, const CouplingParams& p)
    : n_(chain.sites()), h_(build_hamiltonian(chain, p)),
      eig_(linalg::eigen_symmetric(h_.data(), h_.dim())) {}

std::vector<double> ExactDiagonalization::thermal_weights(Temperature T) const {
  const auto& E = eig_.values;
  std::vector<double> w(E.size(), 0.0);
  if (T.is_zero()) {
    std::size_t g = 0;
    while (g < E.size() && E[g] - E[0] < kDegenerateTol) ++g;
    for (std::size_t i = 0; i < g; ++i) w[i] = 1.0 / static_cast<double>(g);
    return w;
  }
  const double beta = T.beta();
  double z = 0.0;
  for (std::size_t i = 0; i < E.size(); ++i) {
    w[i] = std::exp(-beta * (E[i] - E[0]));
    z += w[i];
  }
  for (double& wi : w) wi /= z;
  return w;
}

double ExactDiagonalization::log_partition(Temperature T) const {
  if (T.is_zero())
    throw error(errc::finite_temperature_required,
                "ln Z diverges at T = 0; use ground_energy()");
  const double beta = T.beta();
  const auto& E = eig_.values;
  double sum = 0.0;
  for (double e : E) sum += std::exp(-beta * (e - E[0]));
  return -beta * E[0] + std::log(sum);
}

double ExactDiagonalization::bond_correlator(std::span<const double> v) const {
  // sum_{l=1}^{N-1} <v| sx_l sx_{l+1} + sy_l sy_{l+1} |v>; the operator maps
  // |..01..> -> 2|..10..> and annihilates aligned bonds.
  const unsigned dim = 1u << n_;
  double total = 0.0;
  for (int l = 1; l < n_; ++l) {
    const unsigned mask = (1u << (l - 1)) | (1u << l);
    double acc = 0.0;
    for (unsigned s = 0; s < dim; ++s) {
      if (((s >> (l - 1)) ^ (s >> l)) & 1u) acc += v[s] * v[s ^ mask];
    }
    total += 2.0 * acc;
  }
  return total;
}

double ExactDiagonalization::witness(Temperature T) const {
  const auto w = thermal_weights(T);
  double acc = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 0.0) continue;
    acc += w[j] * bond_correlator(eig_.vector(static_cast<int>(j)));
  }
  return acc / n_;
}

double ExactDiagonalization::site_magnetization(Temperature T, int site) const {
  if (site < 1 || site > n_)
    throw error(errc::invalid_argument, "site index out of range 1..N");
  const auto w = thermal_weights(T);
  const unsigned dim = 1u << n_;
  double acc = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 0.0) continue;
    const auto v = eig_.vector(static_cast<int>(j));
    double sz = 0.0;
    for (unsigned s = 0; s < dim; ++s) sz += v[s] * v[s] * z_value(s, site);
    acc += w[j] * sz;
  }
  return acc;
}

double ExactDiagonalization::ground_site_entropy(int site) const {
  if (site < 1 || site > n_)
    throw error(errc::invalid_argument, "site index out of range 1..N");
  const auto& E = eig_.values;
  if (E.size() > 1 && E[1] - E[0] < kDegenerateTol)
    throw error(errc::degenerate_ground_state,
                "single-site entropy needs a unique ground state");

  const auto v = eig_.vector(0);
  const unsigned dim = 1u << n_;
  const unsigned bit = 1u << (site - 1);

  double sz = 0.0;
  for (unsigned s = 0; s < dim; ++s) sz += v[s] * v[s] * z_value(s, site);
  const double s_formula = numeric::binary_entropy(0.5 * (1.0 + sz));

  // Independent route: trace out everything but the site and diagonalize the
  // 2x2 reduced state (the ground vector is real, so rho is real symmetric).
  double r11 = 0.0, r00 = 0.0, r10 = 0.0;
  for (unsigned s = 0; s < dim; ++s) {
    if (s & bit) {
      r11 += v[s] * v[s];
      r10 += v[s] * v[s ^ bit];
    } else {
      r00 += v[s] * v[s];
    }
  }
  const double mean = 0.5 * (r11 + r00);
  const double half_gap = std::hypot(0.5 * (r11 - r00), r10);
  const double mu_hi = mean + half_gap;
  const double mu_lo = mean - half_gap;
  double s_traced = 0.0;
  if (mu_hi > 0.0 && mu_hi < 1.0) s_traced -= mu_hi * std::log2(mu_hi);
  if (mu_lo > 0.0 && mu_lo < 1.0) s_traced -= mu_lo * std::log2(mu_lo);

  if (std::abs(s_formula - s_traced) > 1e-10)
    throw error(errc::internal,
                "reduced-state entropy disagrees with the <sz> formula");
  return s_formula;
}

double log_partition_direct(const FiniteChain& chain, const CouplingParams& p, Temperature T) {
  return ExactDiagonalization(chain, p).log_partition(T);
}

double witness_direct(const FiniteChain& chain, const CouplingParams& p, Temperature T) {
  return ExactDiagonalization(chain, p).witness(T);
}

double site_magnetization_direct(const FiniteChain& chain, const CouplingParams& p,
                                 Temperature T, int site) {
  return ExactDiagonalization(chain, p).site_magnetization(T, site);
}

double ground_site_entropy_direct(const FiniteChain& chain, const CouplingParams& p, int site) {
  return ExactDiagonalization(chain, p).ground_site_entropy(site);
}

}  // namespace sxx::oracle
