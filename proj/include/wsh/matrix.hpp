#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wsh/field.hpp"

namespace wsh {

/// Dense row-major matrix. A 0 x n or n x 0 matrix is a valid empty map.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<T>& data() const { return d_; }
  std::vector<T>& data() { return d_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : d_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> d_;
};

using FMatrix = Matrix<FieldElem>;
using FVec = std::vector<FieldElem>;

}  // namespace wsh
