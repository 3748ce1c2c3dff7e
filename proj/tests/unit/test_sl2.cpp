#include <doctest.h>

#include "jordan/sl2/reps.hpp"

using namespace jordan;

namespace {
const MultiPoly h(Symbol::h);
}

TEST_CASE("classical commutation relations") {
  for (unsigned t = 0; t <= 6; ++t) {
    auto r = build_classical_rep(Spin{t});
    const auto &jp = r["J+"], &jm = r["J-"], &j0 = r["J0"];
    CHECK(commutator(j0, jp) == MultiPoly(2) * jp);
    CHECK(commutator(j0, jm) == MultiPoly(-2) * jm);
    CHECK(commutator(jp, jm) == j0);
  }
}

TEST_CASE("jordanian algebra relations") {
  for (unsigned t = 0; t <= 5; ++t) {
    auto r = build_h_rep(Spin{t});
    const auto &x = r["X"], &y = r["Y"], &hh = r["H"], &T = r["T"], &Ti = r["Tinv"];
    auto d = x.rows();
    auto id = PolyMatrix::identity(d);
    CAPTURE(t);
    CHECK(multiply(T, Ti) == id);
    // T = e^{hX}
    CHECK(nilpotent_exp(h * x) == T);
    CHECK(h * commutator(hh, x) == T - Ti);
    auto cosh2 = T + Ti;  // 2 cosh(hX)
    CHECK(MultiPoly(2) * commutator(hh, y) == -anticommutator(y, cosh2));
    CHECK(nilpotent_cosh(h * x) == MultiPoly(Rational(1, 2)) * cosh2);
    CHECK(nilpotent_sinh(h * x) == MultiPoly(Rational(1, 2)) * (T - Ti));
    CHECK(commutator(x, y) == hh);
    CHECK(check_h_algebra(Spin{t}).ok());
  }
}

TEST_CASE("spin parsing") {
  CHECK(Spin::parse("1/2") == kHalf);
  CHECK(Spin::parse("3/2").dim() == 4);
  CHECK_THROWS(Spin::parse("1/3"));
  CHECK_THROWS(Spin::parse("-1"));
  CHECK(kThreeHalves.to_string() == "3/2");
}

namespace {
PolyMatrix rows(std::vector<std::vector<MultiPoly>> r) {
  PolyMatrix m(r.size(), r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) m(i, j) = r[i][j];
  return m;
}
}  // namespace

TEST_CASE("printed jordanian generators, j = 1") {
  auto r = build_h_rep(kOne);
  auto h2 = h * h;
  CHECK(r["X"] == rows({{0, 2, 0}, {0, 0, 2}, {0, 0, 0}}));
  CHECK(r["Y"] == rows({{0, Rational(1, 2) * h2, 0}, {1, 0, Rational(-3, 2) * h2}, {0, 1, 0}}));
  CHECK(r["H"] == rows({{2, 0, -4 * h2}, {0, 0, 0}, {0, 0, -2}}));
}

TEST_CASE("printed jordanian generators, j = 3/2") {
  auto r = build_h_rep(kThreeHalves);
  auto h2 = h * h;
  CHECK(r["X"] == rows({{0, 3, 0, -6 * h2}, {0, 0, 4, 0}, {0, 0, 0, 3}, {0, 0, 0, 0}}));
  CHECK(r["Y"] == rows({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, -6 * h2}, {0, 0, 1, 0}}));
  CHECK(r["H"] == rows({{3, 0, -6 * h2, 0}, {0, 1, 0, -18 * h2}, {0, 0, -1, 0}, {0, 0, 0, -3}}));
}

TEST_CASE("spin one half stays undeformed") {
  auto c = build_classical_rep(kHalf);
  auto r = build_h_rep(kHalf);
  CHECK(r["X"] == c["J+"]);
  CHECK(r["Y"] == c["J-"]);
  CHECK(r["H"] == c["J0"]);
}

TEST_CASE("q representation limits to the classical one") {
  for (unsigned t = 0; t <= 5; ++t) {
    auto q = build_q_rep(Spin{t}, 2);
    auto c = build_classical_rep(Spin{t});
    for (const char* name : {"J+", "J-", "J0"})
      CHECK(q[name].map([](const LaurentScalar& s) { return limit_q_to_1(s).as_polynomial(); }) == c[name]);
  }
  auto q1 = build_q_rep(kOne, 3);
  CHECK(q1["J+"](0, 1) == q_integer(2, 3));
  CHECK(q1["J+"](1, 2) == q_integer(2, 3));
}

TEST_CASE("unipotent powers of Ttilde") {
  auto T = build_t_tilde(kThreeHalves);
  MultiPoly s1(Symbol::z1), s2(Symbol::z2);
  auto a = unipotent_power(T, s1), b = unipotent_power(T, s2);
  CHECK(multiply(a, b) == unipotent_power(T, s1 + s2));
  CHECK(unipotent_power(T, MultiPoly(0)) == PolyMatrix::identity(4));
  CHECK(unipotent_power(T, MultiPoly(1)) == T);
  auto th = build_t_tilde(kHalf);
  MultiPoly az = MultiPoly(Symbol::alpha) * MultiPoly(Symbol::z);
  CHECK(unipotent_power(th, az) == rows({{1, az * h}, {0, 1}}));
  auto sq = nilpotent_sqrt(T);
  CHECK(multiply(sq, sq) == T);
}
