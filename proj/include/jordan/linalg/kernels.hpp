#pragma once

#include <cstddef>

#include "jordan/linalg/matrix.hpp"
#include "jordan/linalg/parallel.hpp"

namespace jordan {

// Reference product, kept for testing the parallel kernel.
template <class S>
Matrix<S> multiply_serial(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<S> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const S& bkj = b(k, j);
        if (is_zero(bkj)) continue;
        r(i, j) += aik * bkj;
      }
    }
  return r;
}

// Row-parallel product. Each row is accumulated in the same order as the
// serial kernel, so results are identical for any thread count.
template <class S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<S> r(a.rows(), b.cols());
  ParallelErrors errors;
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    try {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          const S& bkj = b(k, j);
          if (is_zero(bkj)) continue;
          r(i, j) += aik * bkj;
        }
      }
    } catch (...) {
      errors.capture(i);
    }
  }
  errors.rethrow();
  return r;
}

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  return multiply(a, b);
}

// Entrywise map, parallel over entries.
template <class S, class F>
auto map_parallel(const Matrix<S>& m, F&& f) -> Matrix<decltype(f(std::declval<const S&>()))> {
  Matrix<decltype(f(std::declval<const S&>()))> r(m.rows(), m.cols());
  ParallelErrors errors;
  const auto n = static_cast<std::ptrdiff_t>(m.rows() * m.cols());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k) / m.cols();
    const auto j = static_cast<std::size_t>(k) % m.cols();
    try {
      r(i, j) = f(m(i, j));
    } catch (...) {
      errors.capture(static_cast<std::size_t>(k));
    }
  }
  errors.rethrow();
  return r;
}

}  // namespace jordan
