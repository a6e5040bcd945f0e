#pragma once

#include "edmc/types.hpp"

namespace edmc {

/// Squared pairwise distances of a point configuration.
SquaredDistanceMatrix edm(const PointConfiguration& x);

/// Distance matrix from a Gram matrix: 1 g' - 2 G + g 1' with g = diag(G).
SquaredDistanceMatrix kappa(const GramMatrix& g);

/// Gram matrix from a fully observed distance matrix: -1/2 P D P with the
/// centering projector P. Rejects matrices with missing entries.
GramMatrix tau(const SquaredDistanceMatrix& d);

/// Double-centers an arbitrary symmetric matrix: -1/2 P S P. The mapping
/// behind tau, exposed for gradient computations on symmetric iterates.
Matrix double_center(const Matrix& s);

struct EdmCheck {
  bool is_edm = false;
  /// Numerical rank of tau(D): eigenvalues above tol * lambda_max.
  int embedding_dim = 0;
};

/// D is an EDM iff tau(D) is positive semidefinite within tol (relative to
/// the largest eigenvalue).
EdmCheck is_edm(const SquaredDistanceMatrix& d, double tol = 1e-9);

}  // namespace edmc
