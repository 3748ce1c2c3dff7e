#pragma once

// Printed R matrices, assembled from the operator-valued
// block displays with the operators replaced by their representation
// matrices on the second factor.

#include <vector>

#include "jordan/sl2/reps.hpp"

namespace fixtures {

using jordan::MultiPoly;
using jordan::PolyMatrix;
using jordan::Rational;
using jordan::Spin;
using jordan::Symbol;

inline const MultiPoly h{Symbol::h};
inline const MultiPoly alpha{Symbol::alpha};
inline const MultiPoly z1{Symbol::z1};
inline const MultiPoly z2{Symbol::z2};

inline MultiPoly q(long num, long den = 1) { return MultiPoly(jordan::canonical(Rational(num, den))); }

// Block matrix from a square grid of equally sized blocks; empty blocks are zero.
inline PolyMatrix blocks(const std::vector<std::vector<PolyMatrix>>& grid) {
  const std::size_t nb = grid.size();
  std::size_t d = 0;
  for (const auto& row : grid)
    for (const auto& b : row)
      if (b.rows()) d = b.rows();
  PolyMatrix m(nb * d, nb * d);
  for (std::size_t bi = 0; bi < nb; ++bi)
    for (std::size_t bj = 0; bj < nb; ++bj) {
      const PolyMatrix& b = grid[bi][bj];
      if (!b.rows()) continue;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(bi * d + i, bj * d + j) = b(i, j);
    }
  return m;
}

inline PolyMatrix entries(const std::vector<std::vector<MultiPoly>>& r) {
  PolyMatrix m(r.size(), r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) m(i, j) = r[i][j];
  return m;
}

// Operators on the second factor.
struct Ops {
  PolyMatrix I, T, Ti, J0, H, TH;
  PolyMatrix Z;  // empty block

  explicit Ops(Spin j) {
    auto c = jordan::build_classical_rep(j);
    auto r = jordan::build_h_rep(j);
    I = PolyMatrix::identity(j.dim());
    T = r["T"];
    Ti = r["Tinv"];
    J0 = c["J0"];
    H = r["H"];
    TH = T * H;
  }
  PolyMatrix pw(const PolyMatrix& m, int n) const {
    PolyMatrix r = I;
    for (int k = 0; k < n; ++k) r = r * m;
    return r;
  }
  PolyMatrix J0s(int shift) const { return J0 + MultiPoly(shift) * I; }
};

// Contraction route, operators Ttilde and classical J0.
inline PolyMatrix tR_half(Spin j) {
  Ops o(j);
  auto half = q(1, 2) * h;
  return blocks({{o.T, -half * ((o.T + o.Ti) * o.J0) + half * (o.T - o.Ti)}, {o.Z, o.Ti}});
}

inline PolyMatrix tR_one(Spin j) {
  Ops o(j);
  auto T2 = o.pw(o.T, 2), Ti2 = o.pw(o.Ti, 2);
  auto s = o.T + o.Ti;
  auto corner = q(1, 2) * h * h *
                (s * s * o.J0 * o.J0 - MultiPoly(4) * (T2 - Ti2) + MultiPoly(4) * ((Ti2 - o.I) * o.J0));
  return blocks({{T2, -h * ((T2 + o.I) * o.J0), corner},
                 {o.Z, o.I, -h * ((Ti2 + o.I) * o.J0 + MultiPoly(2) * (Ti2 - o.I))},
                 {o.Z, o.Z, Ti2}});
}

inline PolyMatrix tR_thalf(Spin j) {
  Ops o(j);
  auto T3 = o.pw(o.T, 3), Ti3 = o.pw(o.Ti, 3);
  auto Jm1 = o.J0s(-1), Jp1 = o.J0s(1), Jm3 = o.J0s(-3), Jp3 = o.J0s(3), Jp5 = o.J0s(5);
  auto A = -q(3, 2) * h * (T3 * Jp1 + o.T * Jm1);
  auto B = q(3, 2) * h * h * (T3 * Jm1 * Jp3 + MultiPoly(2) * (o.T * Jm1 * Jm1) + o.Ti * Jp1 * Jp1);
  auto C = -q(3, 4) * h * h * h *
           (T3 * Jm3 * Jp1 * Jp5 + MultiPoly(3) * (o.T * Jm3 * Jm1 * Jp1) + MultiPoly(3) * (o.Ti * Jm3 * Jp1 * Jp1) +
            Ti3 * Jp1 * Jp3 * Jp5);
  auto D = MultiPoly(-2) * h * (o.T * Jm1 + o.Ti * Jp1);
  auto E = q(3, 2) * h * h * ((o.T + MultiPoly(2) * o.Ti) * Jm3 * Jp1 + Ti3 * Jp3 * Jp3);
  auto F = -q(3, 2) * h * (o.Ti * Jm3 + Ti3 * Jp3);
  return blocks({{T3, A, B, C}, {o.Z, o.T, D, E}, {o.Z, o.Z, o.Ti, F}, {o.Z, o.Z, o.Z, Ti3}});
}

// Direct route, operators T and H.
inline PolyMatrix R_half(Spin j) {
  Ops o(j);
  return blocks({{o.T, -h * o.H + q(1, 2) * h * (o.T - o.Ti)}, {o.Z, o.Ti}});
}

inline PolyMatrix R_one(Spin j) {
  Ops o(j);
  auto T2 = o.pw(o.T, 2), Ti2 = o.pw(o.Ti, 2);
  auto corner = MultiPoly(-2) * h * h *
                (T2 - Ti2 + MultiPoly(2) * (o.TH * (Ti2 - o.I)) - o.TH * o.TH * Ti2);
  return blocks({{T2, MultiPoly(-2) * h * o.TH, corner},
                 {o.Z, o.I, MultiPoly(-2) * h * (o.TH * Ti2 - Ti2 + o.I)},
                 {o.Z, o.Z, Ti2}});
}

inline PolyMatrix R_thalf(Spin j) {
  Ops o(j);
  auto T2 = o.pw(o.T, 2), T3 = o.pw(o.T, 3), Ti3 = o.pw(o.Ti, 3);
  const auto& TH = o.TH;
  auto TH2 = TH * TH, TH3 = TH2 * TH;
  auto A = q(3, 2) * h * ((T2 - o.I - MultiPoly(2) * TH) * o.T);
  auto B = -q(3, 2) * h * h *
           (MultiPoly(3) * T3 - MultiPoly(2) * o.T - o.Ti - MultiPoly(4) * (TH * (T2 - o.I + TH) * o.Ti));
  auto C = MultiPoly(-3) * h * h * h *
           (q(15, 4) * (T3 - Ti3) - q(9, 4) * (o.T - o.Ti) - q(9, 2) * (TH * o.T) - MultiPoly(9) * (TH * o.Ti) +
            q(23, 2) * (TH * Ti3) - MultiPoly(9) * (TH2 * (Ti3 - o.Ti)) + MultiPoly(2) * (TH3 * Ti3));
  auto D = MultiPoly(-2) * h * ((T2 - o.I + MultiPoly(2) * TH) * o.Ti);
  auto E = -q(3, 2) * h * h *
           (MultiPoly(3) * (o.T + MultiPoly(2) * o.Ti - MultiPoly(3) * Ti3) -
            MultiPoly(4) * (TH * (MultiPoly(3) * (T2 - o.I) + TH) * Ti3));
  auto F = -q(3, 2) * h * ((MultiPoly(3) * (T2 - o.I) + MultiPoly(2) * TH) * Ti3);
  return blocks({{T3, A, B, C}, {o.Z, o.T, D, E}, {o.Z, o.Z, o.Ti, F}, {o.Z, o.Z, o.Z, Ti3}});
}

// Coloured (1/2,z1;1,z2).
inline PolyMatrix col_R_half_one() {
  auto u = 1 + MultiPoly(2) * alpha * z1, v = 1 - MultiPoly(2) * alpha * z1;
  auto A = entries({{1, 2 * h * u, 2 * h * h * u * u}, {0, 1, 2 * h * u}, {0, 0, 1}});
  auto B = entries({{-2 * h * (1 + alpha * z2), 2 * h * h * (1 - 2 * alpha * z1 - 4 * alpha * alpha * z1 * z2),
                     4 * h * h * h * (1 + 2 * alpha * z1 - alpha * z2 - 4 * alpha * alpha * alpha * z1 * z1 * z2)},
                    {0, -2 * h * alpha * z2, 2 * h * h * (1 + 2 * alpha * z1 - 4 * alpha * alpha * z1 * z2)},
                    {0, 0, 2 * h * (1 - alpha * z2)}});
  auto C = entries({{1, -2 * h * v, 2 * h * h * v * v}, {0, 1, -2 * h * v}, {0, 0, 1}});
  return blocks({{A, B}, {PolyMatrix(), C}});
}

// Coloured (1,z1;1/2,z2).
inline PolyMatrix col_R_one_half() {
  auto p = 1 + 2 * alpha * z2, m = 1 - 2 * alpha * z2;
  auto A = entries({{1, 2 * h * (1 + alpha * z1)}, {0, 1}});
  auto B = entries({{-2 * h * p, 2 * h * h * (1 - 2 * alpha * z2 - 4 * alpha * alpha * z1 * z2)}, {0, 2 * h * m}});
  auto C = entries({{2 * h * h * p * p, -4 * h * h * h * (1 + 2 * alpha * z2 - alpha * z1 - 4 * alpha * alpha * alpha * z1 * z2 * z2)},
                    {0, 2 * h * h * m * m}});
  auto D = entries({{1, 2 * h * alpha * z1}, {0, 1}});
  auto E = entries({{-2 * h * p, 2 * h * h * (1 + 2 * alpha * z2 - 4 * alpha * alpha * z1 * z2)}, {0, 2 * h * m}});
  auto F = entries({{1, -2 * h * (1 - alpha * z1)}, {0, 1}});
  PolyMatrix zero;
  return blocks({{A, B, C}, {zero, D, E}, {zero, zero, F}});
}

}  // namespace fixtures
