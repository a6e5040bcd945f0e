#include "edmc/operators.hpp"

#include <stdexcept>
#include <vector>

#include "edmc/eigensolver.hpp"

namespace edmc {

SquaredDistanceMatrix edm(const PointConfiguration& x) {
  const int n = x.count(), p = x.dim();
  Matrix d(n, n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double* xi = x.coords().row(i);
    for (int j = i + 1; j < n; ++j) {
      const double* xj = x.coords().row(j);
      double s = 0.0;
      for (int k = 0; k < p; ++k) {
        const double t = xi[k] - xj[k];
        s += t * t;
      }
      d(i, j) = d(j, i) = s;
    }
  }
  return SquaredDistanceMatrix(std::move(d));
}

SquaredDistanceMatrix kappa(const GramMatrix& g) {
  const int n = g.order();
  Matrix d(n, n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = g(i, i) + g(j, j) - 2.0 * g(i, j);
      d(i, j) = d(j, i) = v;
    }
  return SquaredDistanceMatrix(std::move(d));
}

Matrix double_center(const Matrix& s) {
  const int n = s.rows();
  if (n != s.cols()) throw std::invalid_argument("double_center: not square");
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += s(i, j);
    row_mean[i] = acc / n;
    grand += acc;
  }
  grand /= static_cast<double>(n) * n;
  Matrix g(n, n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = -0.5 * (s(i, j) - row_mean[i] - row_mean[j] + grand);
      g(i, j) = g(j, i) = v;
    }
  return g;
}

GramMatrix tau(const SquaredDistanceMatrix& d) {
  if (!d.complete())
    throw std::invalid_argument("tau: matrix has missing entries");
  return GramMatrix(double_center(d.values()));
}

EdmCheck is_edm(const SquaredDistanceMatrix& d, double tol) {
  const GramMatrix g = tau(d);
  const std::vector<double> lam = eig_sym_values(g.values());
  const double lmax = lam.front();
  EdmCheck out;
  if (lmax <= 0.0) {
    // Only the zero matrix qualifies.
    out.is_edm = lam.back() >= 0.0 && lmax == 0.0;
    out.embedding_dim = 0;
    return out;
  }
  out.is_edm = lam.back() >= -tol * lmax;
  for (double v : lam)
    if (v > tol * lmax) ++out.embedding_dim;
  return out;
}

}  // namespace edmc
