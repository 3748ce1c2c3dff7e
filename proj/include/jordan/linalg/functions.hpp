#pragma once

#include <stdexcept>
#include <vector>

#include "jordan/linalg/kernels.hpp"
#include "jordan/scalar/multipoly.hpp"

namespace jordan {

// Powers N, N^2, ... up to the last nonzero one. Throws if N^dim != 0.
template <class S>
std::vector<Matrix<S>> nilpotent_powers(const Matrix<S>& n) {
  std::vector<Matrix<S>> powers;
  Matrix<S> p = n;
  for (std::size_t k = 0; k <= n.rows(); ++k) {
    if (p.is_zero_matrix()) return powers;
    powers.push_back(p);
    p = multiply(p, n);
  }
  throw std::domain_error("matrix is not nilpotent: series does not terminate");
}

// Sum over k of coeff(k) N^k for nilpotent N, starting from the identity.
template <class S, class Coeff>
Matrix<S> nilpotent_series(const Matrix<S>& n, Coeff&& coeff) {
  Matrix<S> r = Matrix<S>::identity(n.rows());
  auto powers = nilpotent_powers(n);
  for (std::size_t k = 0; k < powers.size(); ++k) {
    S c = coeff(static_cast<unsigned>(k + 1));
    if (is_zero(c)) continue;
    r += c * powers[k];
  }
  return r;
}

template <class S>
Matrix<S> nilpotent_exp(const Matrix<S>& n) {
  Rational f(1);
  return nilpotent_series(n, [&f](unsigned k) {
    f /= k;
    return S(MultiPoly(f));
  });
}

// (I + N)^sigma = sum binom(sigma, k) N^k, terminating.
template <class S>
Matrix<S> unipotent_power(const Matrix<S>& u, const MultiPoly& sigma) {
  Matrix<S> n = u - Matrix<S>::identity(u.rows());
  return nilpotent_series(n, [&sigma](unsigned k) { return S(binomial(sigma, k)); });
}

template <class S>
Matrix<S> unipotent_inverse(const Matrix<S>& u) {
  return unipotent_power(u, MultiPoly(-1));
}

template <class S>
Matrix<S> nilpotent_sqrt(const Matrix<S>& i_plus_n) {
  return unipotent_power(i_plus_n, MultiPoly(Rational(1, 2)));
}

// log(I + N) = sum (-1)^{k+1} N^k / k; returned without the identity term.
template <class S>
Matrix<S> unipotent_log(const Matrix<S>& u) {
  Matrix<S> n = u - Matrix<S>::identity(u.rows());
  Matrix<S> r(u.rows(), u.cols());
  auto powers = nilpotent_powers(n);
  for (std::size_t k = 0; k < powers.size(); ++k) {
    int kk = static_cast<int>(k + 1);
    r += S(MultiPoly(canonical(Rational(kk % 2 ? 1 : -1, kk)))) * powers[k];
  }
  return r;
}

// sinh and cosh of a nilpotent argument.
template <class S>
Matrix<S> nilpotent_sinh(const Matrix<S>& n) {
  Rational f(1);
  Matrix<S> r(n.rows(), n.cols());
  auto powers = nilpotent_powers(n);
  for (std::size_t k = 0; k < powers.size(); ++k) {
    f /= static_cast<unsigned>(k + 1);
    if (k % 2 == 0) r += S(MultiPoly(f)) * powers[k];
  }
  return r;
}

template <class S>
Matrix<S> nilpotent_cosh(const Matrix<S>& n) {
  Rational f(1);
  Matrix<S> r = Matrix<S>::identity(n.rows());
  auto powers = nilpotent_powers(n);
  for (std::size_t k = 0; k < powers.size(); ++k) {
    f /= static_cast<unsigned>(k + 1);
    if (k % 2 == 1) r += S(MultiPoly(f)) * powers[k];
  }
  return r;
}

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return multiply(a, b) - multiply(b, a);
}

template <class S>
Matrix<S> anticommutator(const Matrix<S>& a, const Matrix<S>& b) {
  return multiply(a, b) + multiply(b, a);
}

}  // namespace jordan
