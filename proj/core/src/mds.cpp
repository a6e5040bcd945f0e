#include "edmc/mds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "edmc/eigensolver.hpp"
#include "edmc/operators.hpp"

namespace edmc {

PointConfiguration classical_mds(const SquaredDistanceMatrix& d, int p,
                                 MdsDiagnostics* diag) {
  const int n = d.order();
  if (p < 1 || p > n)
    throw std::invalid_argument("classical_mds: dimension must be in [1, n]");
  const GramMatrix g = tau(d);
  const EigenDecomposition e = eig_sym(g.values());

  int clamped = 0;
  Matrix x(n, p, 0.0);
  for (int k = 0; k < p; ++k) {
    double lam = e.values[k];
    if (lam < 0.0) {
      lam = 0.0;
      ++clamped;
    }
    const double scale = std::sqrt(lam);
    for (int i = 0; i < n; ++i) x(i, k) = scale * e.vectors(i, k);
  }
  if (diag) diag->clamped = clamped;
  return PointConfiguration(std::move(x));
}

PointConfiguration principal_coords(const PointConfiguration& x) {
  const int n = x.count(), p = x.dim();
  std::vector<double> mean(p, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < p; ++k) mean[k] += x(i, k);
  for (double& m : mean) m /= n;

  // Centered column Gram matrix; its eigenvectors are the principal
  // directions, eigenvalues the (unnormalized) variances.
  Matrix cov(p, p, 0.0);
  for (int a = 0; a < p; ++a)
    for (int b = a; b < p; ++b) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        s += (x(i, a) - mean[a]) * (x(i, b) - mean[b]);
      cov(a, b) = cov(b, a) = s;
    }

  const EigenDecomposition e = eig_sym(cov);
  Matrix out = matmul(x.coords(), e.vectors);

  // Reproducible output signs: largest-magnitude entry of each coordinate
  // column positive.
  for (int k = 0; k < p; ++k) {
    int arg = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(out(i, k)) > std::abs(out(arg, k))) arg = i;
    if (out(arg, k) < 0.0)
      for (int i = 0; i < n; ++i) out(i, k) = -out(i, k);
  }
  return PointConfiguration(std::move(out));
}

}  // namespace edmc
