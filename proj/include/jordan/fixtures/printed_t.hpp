#pragma once

// T matrices as printed, in the Jordanian generators a, b, c, d.

#include <initializer_list>
#include <utility>

#include "jordan/linalg/matrix.hpp"
#include "jordan/nc/rewrite.hpp"

namespace tfix {

using jordan::HPoly;
using jordan::Matrix;
using jordan::MultiPoly;
using jordan::Rational;
using jordan::Symbol;

inline const MultiPoly h(Symbol::h);
inline const MultiPoly al(Symbol::alpha);
inline const MultiPoly z(Symbol::z);

inline MultiPoly r(long n, long d = 1) { return MultiPoly(jordan::canonical(Rational(n, d))); }

inline HPoly P(std::initializer_list<std::pair<const char*, MultiPoly>> terms) {
  HPoly p;
  for (const auto& [w, c] : terms) p.add(w, c);
  return p;
}

inline HPoly G(char x) { return HPoly::gen(x); }

inline Matrix<HPoly> rows(std::initializer_list<std::initializer_list<HPoly>> data) {
  Matrix<HPoly> m(data.size(), data.begin()->size());
  std::size_t i = 0;
  for (const auto& row : data) {
    std::size_t j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

// T^{1/2,z} = D^{z-1/2} (...)
inline Matrix<HPoly> T_half() {
  MultiPoly k = h * al * (z - r(1, 2));
  return rows({
      {P({{"a", 1}, {"c", k}}), P({{"b", 1}, {"a", -k}, {"d", k}, {"c", -(k * k)}})},
      {P({{"c", 1}}), P({{"d", 1}, {"c", -k}})},
  });
}

// T^{1,z} = D^{z-1} (U^z_ij)
inline Matrix<HPoly> T_one() {
  MultiPoly p3 = 1 + al * (2 * z - 3);  // 1 + alpha(2z - 3)
  MultiPoly p1 = 1 + al * (2 * z - 1);  // 1 + alpha(2z - 1)
  MultiPoly m3 = 1 - al * (2 * z - 3);
  MultiPoly m1 = 1 - al * (2 * z - 1);
  MultiPoly z1 = z - 1;
  MultiPoly s2 = 4 * z * z - 8 * z;  // 4z^2 - 8z
  MultiPoly a2 = al * al, a3 = a2 * al, a4 = a3 * al;
  MultiPoly h2 = h * h, h3 = h2 * h, h4 = h3 * h;
  MultiPoly tz1 = 2 * z - 1;
  MultiPoly w3 = 3 - 2 * al * tz1 - a2 * tz1 * tz1;  // 3 - 2alpha(2z-1) - alpha^2(2z-1)^2

  HPoly u11 = P({{"aa", 1}, {"ac", 2 * h * al * z1}, {"cc", r(1, 4) * h2 * p3 * p3}});
  HPoly u12 = P({{"ab", 2},
                 {"aa", -(h * p1)},
                 {"ad", h * p1},
                 {"bc", -(h * m3)},
                 {"ac", -(h2 * (1 + 2 * al + a2 * (s2 + 5)))},
                 {"cd", r(1, 2) * h2 * p3 * p3},
                 {"cc", -(r(1, 4) * h3 *
                          (1 + al * (6 * z - 7) + a2 * (12 * z * z - 28 * z + 15) +
                           a3 * (8 * z * z * z - 28 * z * z + 30 * z - 9)))}});
  HPoly u13 = P({{"bb", 2},
                 {"ab", -(4 * h * al * z1)},
                 {"bd", 4 * h * al * z1},
                 {"aa", -(r(1, 2) * h2 * w3)},
                 {"ad", h2 * (1 - 4 * al * z1 - a2 * (s2 + 5))},
                 {"bc", -(h2 * (1 - 4 * al * z1 + a2 * (s2 + 3)))},
                 {"dd", r(1, 2) * h2 * p3 * p3},
                 {"ac", -(h3 * (1 - al * (z - 2) - a2 * (6 * z - 5) - a3 * (4 * z * z * z - 12 * z * z + 13 * z - 4)))},
                 {"cd", -(h3 * (al * z1 + 2 * a2 * (2 * z * z - 5 * z + 3) +
                                a3 * (4 * z * z * z - 16 * z * z + 21 * z - 9)))},
                 {"cc", -(r(1, 8) * h4 *
                          (3 + 8 * al * (z - 2) - 2 * a2 * (4 * z * z - 7) -
                           8 * a3 * (4 * z * z * z - 12 * z * z + 11 * z - 3) -
                           a4 * (16 * z * z * z * z - 64 * z * z * z + 88 * z * z - 48 * z + 9)))}});
  HPoly u21 = P({{"ac", 1}, {"cc", r(1, 2) * h * p3}});
  HPoly u22 = P({{"ad", 1},
                 {"bc", 1},
                 {"ac", -(2 * h * al * z1)},
                 {"cd", h * p3},
                 {"cc", -(r(1, 2) * h2 * (1 + 4 * al * z1 + a2 * (s2 + 3)))}});
  HPoly u23 = P({{"bd", 2},
                 {"dd", h * p3},
                 {"ad", -(h * p3)},
                 {"bc", h * m1},
                 {"ac", -(r(1, 2) * h2 * (1 - 2 * al - a2 * (s2 + 3)))},
                 {"cd", -(2 * h2 * al * (z1 + al * (2 * z * z - 5 * z + 3)))},
                 {"cc", -(r(1, 4) * h3 *
                          (3 + al * (2 * z - 7) - a2 * (12 * z * z - 20 * z + 7) -
                           a3 * (8 * z * z * z - 20 * z * z + 14 * z - 3)))}});
  HPoly u31 = P({{"cc", r(1, 2)}});
  HPoly u32 = P({{"cd", 1}, {"cc", -(r(1, 2) * h * p1)}});
  HPoly u33 = P({{"dd", 1}, {"cd", -(2 * h * al * z1)}, {"cc", -(r(1, 4) * h2 * w3)}});
  return rows({{u11, u12, u13}, {u21, u22, u23}, {u31, u32, u33}});
}

// T^{1,1/2} = D^{-1/2} (U_ij)
inline Matrix<HPoly> T_one_half() {
  MultiPoly t = 1 - 2 * al;
  MultiPoly t2 = t * t;
  MultiPoly h2 = h * h, h3 = h2 * h, h4 = h3 * h;
  HPoly u11 = P({{"aa", 1}, {"ac", -(h * al)}, {"cc", r(1, 4) * h2 * t2}});
  HPoly u12 = P({{"ab", 2},
                 {"aa", -h},
                 {"ad", h},
                 {"bc", -(h * (1 + 2 * al))},
                 {"ac", -(h2 * (1 + 2 * al + 2 * al * al))},
                 {"cd", r(1, 2) * h2 * t2},
                 {"cc", -(r(1, 4) * h3 * t2)}});
  HPoly u13 = P({{"bb", 2},
                 {"ab", 2 * h * al},
                 {"bd", -(2 * h * al)},
                 {"aa", -(r(3, 2) * h2)},
                 {"ad", h2 * (1 + 2 * al - 2 * al * al)},
                 {"bc", -(h2 * (1 + 2 * al))},
                 {"dd", r(1, 2) * h2 * t2},
                 {"ac", -(r(1, 2) * h3 * (2 + 3 * al + 4 * al * al))},
                 {"cd", r(1, 2) * h3 * al * t2},
                 {"cc", -(r(3, 8) * h4 * t2)}});
  HPoly u21 = P({{"ac", 1}, {"cc", r(1, 2) * h * t}});
  HPoly u22 = P({{"ad", 1}, {"bc", 1}, {"ac", h * al}, {"cd", h * t}, {"cc", -(r(1, 2) * h2 * t)}});
  HPoly u23 = P({{"bd", 2},
                 {"dd", h * t},
                 {"ad", -(h * t)},
                 {"bc", h},
                 {"ac", -(r(1, 2) * h2 * t)},
                 {"cd", h2 * al * t},
                 {"cc", -(r(3, 4) * h3 * t)}});
  HPoly u31 = P({{"cc", r(1, 2)}});
  HPoly u32 = P({{"cd", 1}, {"cc", -(r(1, 2) * h)}});
  HPoly u33 = P({{"dd", 1}, {"cd", h * al}, {"cc", -(r(3, 4) * h2)}});
  return rows({{u11, u12, u13}, {u21, u22, u23}, {u31, u32, u33}});
}

// T_h^{j=1} in the anticommutator form; not normal-ordered.
inline Matrix<HPoly> T_one_h() {
  auto anti = [](char x, char y) { return G(x) * G(y) + G(y) * G(x); };
  MultiPoly h2 = h * h;
  HPoly D = P({{"ad", 1}, {"bc", -1}, {"ac", -h}});
  HPoly half(r(1, 2)), quarter_h2(r(1, 4) * h2);
  HPoly e02 = P({{"bb", 2}, {"cc", -(r(3, 8) * h2 * h2)}}) +
              HPoly(r(1, 2) * h2) * (HPoly(MultiPoly(2)) * D - P({{"aa", 3}}) + P({{"dd", 1}}));
  return rows({
      {P({{"aa", 1}, {"cc", quarter_h2.coefficient("")}}), anti('a', 'b') + quarter_h2 * anti('c', 'd'), e02},
      {half * anti('a', 'c'), half * (anti('a', 'd') + anti('b', 'c')), anti('b', 'd') - HPoly(r(3, 4) * h2) * anti('a', 'c')},
      {P({{"cc", r(1, 2)}}), half * anti('c', 'd'), P({{"dd", 1}, {"cc", -(r(3, 4) * h2)}})},
  });
}

}  // namespace tfix
