#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace edmc {

/// Dense row-major matrix of doubles. Entries that a format allows to be
/// absent are stored as quiet NaN.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n, 0.0);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(int i, int j) {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  double operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  double* row(int i) { return data_.data() + static_cast<size_t>(i) * cols_; }
  const double* row(int i) const {
    return data_.data() + static_cast<size_t>(i) * cols_;
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

inline bool is_missing(double v) { return std::isnan(v); }
inline double missing_value() {
  return std::numeric_limits<double>::quiet_NaN();
}

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transposed(const Matrix& a);

double frobenius_norm(const Matrix& a);
double frobenius_distance(const Matrix& a, const Matrix& b);
double max_abs(const Matrix& a);

/// Exact (bitwise) symmetry; NaN entries must be mirrored by NaN.
bool is_symmetric(const Matrix& a);
/// Exact zeros on the diagonal.
bool is_hollow(const Matrix& a);

}  // namespace edmc
