#pragma once

// Dense real-symmetric eigensolver: Householder reduction to tridiagonal form
// followed by QL iteration with implicit shifts, eigenvectors accumulated.
// Sized for the exact-diagonalization oracle (dim <= 4096); no workspace
// tricks, no packed storage.

#include <span>
#include <vector>

namespace sxx::linalg {

struct EigenResult {
  int dim = 0;
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row j = eigenvector of values[j], length dim

  std::span<const double> vector(int j) const {
    return {vectors.data() + static_cast<std::size_t>(j) * dim,
            static_cast<std::size_t>(dim)};
  }
};

// a: row-major symmetric dim x dim (only symmetry is assumed, not checked).
// Throws errc::internal if the QL iteration fails to converge.
EigenResult eigen_symmetric(std::span<const double> a, int dim);

}  // namespace sxx::linalg
