#pragma once

// The printed twist G through h^4, evaluated with plain matrices on
// V1 (x) V2 without the word machinery.

#include <vector>

#include "jordan/sl2/reps.hpp"

namespace fixtures {

inline std::vector<jordan::PolyMatrix> printed_G(jordan::Spin j1, jordan::Spin j2) {
  using jordan::MultiPoly;
  using jordan::PolyMatrix;
  using jordan::Rational;
  auto c1 = jordan::build_classical_rep(j1), c2 = jordan::build_classical_rep(j2);
  auto i1 = PolyMatrix::identity(j1.dim()), i2 = PolyMatrix::identity(j2.dim());
  auto L1 = [&](const PolyMatrix& m) { return kron(m, i2); };
  auto L2 = [&](const PolyMatrix& m) { return kron(i1, m); };
  auto p1 = L1(c1["J+"]), p2 = L2(c2["J+"]), z1 = L1(c1["J0"]), z2 = L2(c2["J0"]);
  auto r = z1 * p2 - p1 * z2;
  auto dp = p1 + p2, d0 = z1 + z2, pp = p1 * p2;
  auto ppd0 = pp * d0;
  auto r2 = r * r, dp2 = dp * dp;
  auto q = [](long n, long d) { return MultiPoly(jordan::canonical(Rational(n, d))); };
  auto n = [](long k) { return MultiPoly(static_cast<int>(k)); };
  std::vector<PolyMatrix> g;
  g.push_back(PolyMatrix::identity(j1.dim() * j2.dim()));
  g.push_back(q(-1, 2) * r);
  g.push_back(q(1, 8) * (r2 + n(2) * ppd0));
  g.push_back(q(-1, 48) * (r2 * r + n(6) * (ppd0 * r) - n(4) * (dp2 * r)));
  auto diff = p1 * p1 - p2 * p2;
  g.push_back(q(1, 384) * (r2 * r2 - n(16) * (dp2 * r2) + n(12) * (ppd0 * r2) + n(12) * (ppd0 * ppd0) +
                           n(6) * (diff * diff * d0) + n(12) * (dp2 * (p1 * p1 + p2 * p2) * d0) -
                           n(8) * (dp * (p1 * p1 * p1 + p2 * p2 * p2) * d0) - n(10) * (dp2 * dp2 * d0)));
  return g;
}

}  // namespace fixtures
