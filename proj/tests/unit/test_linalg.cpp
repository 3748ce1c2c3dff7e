#include <doctest.h>

#include "jordan/linalg/functions.hpp"

using namespace jordan;

namespace {
const MultiPoly h(Symbol::h);
const MultiPoly al(Symbol::alpha);

Matrix<MultiPoly> sample(std::size_t n, int seed) {
  Matrix<MultiPoly> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i * 7 + j * 3 + seed) % 4 != 0) m(i, j) = MultiPoly(static_cast<int>(i) - static_cast<int>(j)) * h + al * static_cast<int>(seed);
  return m;
}
}  // namespace

TEST_CASE("parallel product matches serial reference") {
  for (int seed = 1; seed < 4; ++seed) {
    auto a = sample(9, seed), b = sample(9, seed + 5);
    CHECK(multiply(a, b) == multiply_serial(a, b));
  }
}

TEST_CASE("kron and flip") {
  Matrix<MultiPoly> a(2, 2), b(3, 3);
  a(0, 1) = h;
  b(2, 0) = al;
  auto p = flip_matrix<MultiPoly>(2, 3);
  auto q = flip_matrix<MultiPoly>(3, 2);
  CHECK(multiply(p, kron(a, b)) == multiply(kron(b, a), p));
  CHECK(multiply(q, p) == Matrix<MultiPoly>::identity(6));
}

TEST_CASE("unipotent functions") {
  Matrix<MultiPoly> n(3, 3);
  n(0, 1) = h;
  n(1, 2) = al;
  n(0, 2) = MultiPoly(1);
  auto u = nilpotent_exp(n);
  CHECK(unipotent_log(u) == n);
  CHECK(multiply(u, unipotent_inverse(u)) == Matrix<MultiPoly>::identity(3));
  auto s = nilpotent_sqrt(u);
  CHECK(multiply(s, s) == u);
  MultiPoly sig(Symbol::sigma);
  CHECK(unipotent_power(u, sig).map([&](const MultiPoly& p) { return p.substitute(Symbol::sigma, MultiPoly(2)); }) ==
        multiply(u, u));
  Matrix<MultiPoly> bad = Matrix<MultiPoly>::identity(2);
  CHECK_THROWS(nilpotent_exp(bad));
}
