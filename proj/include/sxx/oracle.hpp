#pragma once

// Brute-force ground truth for small even chains: the full 2^N Hamiltonian in
// the sigma-z product basis, its spectral decomposition, and thermal / ground
// state expectation values computed with no free-fermion input. Everything
// the analytic modules produce is cross-checked against this one.
//
// Basis convention: state index s is a bitstring; bit (l-1) set means
// sigma-z = +1 at site l. The matrix is real symmetric (sy x sy has real
// entries), so no complex arithmetic appears anywhere.

#include <span>
#include <vector>

#include "sxx/eigensym.hpp"
#include "sxx/model.hpp"

namespace sxx::oracle {

inline constexpr int kMaxSites = 12;        // 2^12 = 4096 keeps dense ED sane
inline constexpr double kDegenerateTol = 1e-10;

class DenseOperator {
 public:
  explicit DenseOperator(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {}

  int dim() const noexcept { return dim_; }
  double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  std::span<const double> data() const noexcept { return a_; }

  double trace() const;
  double max_abs() const;

 private:
  int dim_;
  std::vector<double> a_;
};

// Hopping: -J between |..01..> and |..10..> on each of the N-1 bonds;
// diagonal: -sum_l B_l z_l with B_l = B + (-1)^l b. Throws for odd N or
// N outside [2, kMaxSites].
DenseOperator build_hamiltonian(const FiniteChain& chain, const CouplingParams& p);

// Builds and diagonalizes once; all observables are then spectral sums.
// Immutable after construction.
class ExactDiagonalization {
 public:
  ExactDiagonalization(const FiniteChain& chain, const CouplingParams& p);

  int sites() const noexcept { return n_; }
  int dim() const noexcept { return eig_.dim; }
  const DenseOperator& hamiltonian() const noexcept { return h_; }
  const std::vector<double>& eigenvalues() const noexcept { return eig_.values; }
  const linalg::EigenResult& decomposition() const noexcept { return eig_; }

  double ground_energy() const { return eig_.values.front(); }

  // ln sum_n e^{-beta E_n}, max-shifted; finite T only.
  double log_partition(Temperature T) const;

  // (1/N) sum_bonds <sx sx + sy sy> in the thermal state; at T = 0 the
  // average over the (near-)degenerate ground eigenspace, i.e. the
  // beta -> infinity limit of the thermal state.
  double witness(Temperature T) const;

  // <sigma-z_l>, site l = 1..N, same T = 0 convention as witness().
  double site_magnetization(Temperature T, int site) const;

  // Ground-state single-site entropy in bits. Uses eta = (1 + <sz>)/2 (the
  // off-diagonal <sx>, <sy> vanish by fermion-parity symmetry) and verifies
  // against the 2x2 reduced density matrix from an explicit partial trace.
  // Throws errc::degenerate_ground_state when the gap is < kDegenerateTol.
  double ground_site_entropy(int site) const;

 private:
  std::vector<double> thermal_weights(Temperature T) const;
  double bond_correlator(std::span<const double> v) const;  // sum over bonds

  int n_;
  DenseOperator h_;
  linalg::EigenResult eig_;
};

// Convenience one-shot forms of the operations above.
double log_partition_direct(const FiniteChain& chain, const CouplingParams& p, Temperature T);
double witness_direct(const FiniteChain& chain, const CouplingParams& p, Temperature T);
double site_magnetization_direct(const FiniteChain& chain, const CouplingParams& p,
                                 Temperature T, int site);
double ground_site_entropy_direct(const FiniteChain& chain, const CouplingParams& p, int site);

}  // namespace sxx::oracle
