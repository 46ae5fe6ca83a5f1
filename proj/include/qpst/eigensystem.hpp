#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qpst/chain.hpp"

namespace qpst {

// Ascending eigenvalues with orthonormal eigenvectors; column k of
// `vectors` belongs to values[k].
struct EigenSystem {
  std::vector<double> values;
  SquareMatrix vectors;

  std::size_t size() const { return values.size(); }
  // Component of eigenvector k on site index `row` (0-based).
  double component(std::size_t row, std::size_t k) const { return vectors(row, k); }
};

// Implicit-shift QL on the symmetric tridiagonal matrix with the given
// diagonal (n entries) and off-diagonal (n - 1 entries).
// Throws NumericalError if an eigenvalue fails to converge.
EigenSystem diagonalize_tridiagonal(std::span<const double> diagonal, std::span<const double> off_diagonal);

EigenSystem diagonalize(const HamiltonianMatrix& h);

// Eigenvalues only; same algorithm without accumulating vectors.
std::vector<double> eigenvalues(const HamiltonianMatrix& h);

}  // namespace qpst
