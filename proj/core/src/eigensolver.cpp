#include "edmc/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace edmc {
namespace {

constexpr double kOffTolerance = 1e-12;  // relative to ||S||_F
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  const int n = a.rows();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
  return std::sqrt(2.0 * s);
}

void check_symmetric_input(const Matrix& s) {
  const int n = s.rows();
  if (n != s.cols() || n < 1)
    throw std::invalid_argument("eig_sym: matrix must be square and nonempty");
  const double scale = max_abs(s);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(s(i, j) - s(j, i)) > 1e-12 * scale)
        throw std::invalid_argument("eig_sym: matrix is not symmetric");
  for (double v : s.data())
    if (!std::isfinite(v))
      throw std::invalid_argument("eig_sym: matrix has non-finite entries");
}

// Diagonalizes a in place. When vt is non-null it accumulates the transposed
// eigenvector matrix (rows of vt are eigenvectors), kept row-major for
// contiguous rotation updates.
void jacobi(Matrix& a, Matrix* vt) {
  const int n = a.rows();
  const double norm = frobenius_norm(a);
  if (norm == 0.0) return;
  const double threshold = kOffTolerance * norm;
  // Elements this small cannot lift the off-diagonal norm above threshold.
  const double skip = threshold / (2.0 * n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) return;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= skip) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const double app = a(p, p), aqq = a(q, q);
        double* rp = a.row(p);
        double* rq = a.row(q);
        for (int k = 0; k < n; ++k) {
          const double xp = rp[k], xq = rq[k];
          rp[k] = c * xp - s * xq;
          rq[k] = s * xp + c * xq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          a(k, p) = a(p, k);
          a(k, q) = a(q, k);
        }

        if (vt) {
          double* vp = vt->row(p);
          double* vq = vt->row(q);
          for (int k = 0; k < n; ++k) {
            const double xp = vp[k], xq = vq[k];
            vp[k] = c * xp - s * xq;
            vq[k] = s * xp + c * xq;
          }
        }
      }
    }
  }
  if (off_diagonal_norm(a) > threshold)
    throw std::runtime_error("eig_sym: Jacobi sweeps did not converge");
}

std::vector<int> descending_order(const std::vector<double>& values) {
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  return idx;
}

}  // namespace

EigenDecomposition eig_sym(const Matrix& s) {
  check_symmetric_input(s);
  const int n = s.rows();
  Matrix a = s;
  Matrix vt = Matrix::identity(n);
  jacobi(a, &vt);

  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i);
  const std::vector<int> order = descending_order(diag);

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (int col = 0; col < n; ++col) {
    const int src = order[col];
    out.values[col] = diag[src];
    const double* v = vt.row(src);
    // Largest-magnitude entry forced positive for reproducible signs.
    int arg = 0;
    for (int k = 1; k < n; ++k)
      if (std::abs(v[k]) > std::abs(v[arg])) arg = k;
    const double sign = v[arg] < 0.0 ? -1.0 : 1.0;
    for (int k = 0; k < n; ++k) out.vectors(k, col) = sign * v[k];
  }
  return out;
}

std::vector<double> eig_sym_values(const Matrix& s) {
  check_symmetric_input(s);
  const int n = s.rows();
  Matrix a = s;
  jacobi(a, nullptr);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i);
  std::sort(diag.begin(), diag.end(), std::greater<double>());
  return diag;
}

}  // namespace edmc
