#pragma once

#include "edmc/types.hpp"

namespace edmc {

struct MdsDiagnostics {
  /// Top-p eigenvalues that were negative and clamped to zero.
  int clamped = 0;
};

/// Classical multidimensional scaling: top-p eigenpairs of tau(D) give
/// X = U_p Lambda_p^(1/2), negative eigenvalues clamped to zero first.
PointConfiguration classical_mds(const SquaredDistanceMatrix& d, int p,
                                 MdsDiagnostics* diag = nullptr);

/// Rotates a configuration onto its principal directions (eigenvectors of
/// the centered column Gram matrix), ordered by decreasing variance.
/// Pairwise distances are unchanged.
PointConfiguration principal_coords(const PointConfiguration& x);

}  // namespace edmc
