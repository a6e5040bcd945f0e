#pragma once

#include <vector>

#include "edmc/matrix.hpp"

namespace edmc {

/// Eigenvalues sorted descending; eigenvectors in the matching columns of
/// an orthonormal matrix, each column's largest-magnitude entry positive.
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;
};

/// Cyclic Jacobi diagonalization of a symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm drops below 1e-12 * ||S||_F, capped at 100
/// sweeps (a cap hit throws; it cannot happen for symmetric input).
EigenDecomposition eig_sym(const Matrix& s);

/// Eigenvalues only (descending); skips eigenvector accumulation.
std::vector<double> eig_sym_values(const Matrix& s);

}  // namespace edmc
