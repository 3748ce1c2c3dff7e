#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jordan {

// Dense row-major matrix over an exact scalar type S. S{} must be the zero
// and S(1) the unit; is_zero(S) must be findable by ADL and report
// structural (exact) zeros only.
template <class S>
class Matrix {
public:
  using value_type = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix zero(std::size_t n) { return Matrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<S>& data() const { return data_; }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const S&>()))> {
    Matrix<decltype(f(std::declval<const S&>()))> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  bool is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i && j < cols_; ++j)
        if (!is_zero((*this)(i, j))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  Matrix& scale(const S& c) {
    for (auto& x : data_)
      if (!is_zero(x)) x = c * x;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const S& c, Matrix a) { return a.scale(c); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

// First factor varies slowest: (A kron B)(i1*d2+i2, j1*d2+j2) = A(i1,j1) B(i2,j2).
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      if (is_zero(a(i1, j1))) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          if (is_zero(b(i2, j2))) continue;
          r(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
        }
    }
  return r;
}

// Permutation taking V1 (x) V2 to V2 (x) V1: P (v1 (x) v2) = v2 (x) v1.
template <class S>
Matrix<S> flip_matrix(std::size_t d1, std::size_t d2) {
  Matrix<S> p(d1 * d2, d1 * d2);
  for (std::size_t i1 = 0; i1 < d1; ++i1)
    for (std::size_t i2 = 0; i2 < d2; ++i2) p(i2 * d1 + i1, i1 * d2 + i2) = S(1);
  return p;
}

}  // namespace jordan
