#include <doctest.h>

#include "jordan/fixtures/printed_twist.hpp"
#include "jordan/twist/twist.hpp"

using namespace jordan;

namespace {

const MultiPoly h(Symbol::h);

}  // namespace

TEST_CASE("G matches the printed series") {
  for (Spin a : {kHalf, kOne, kThreeHalves})
    for (Spin b : {kHalf, kOne}) {
      auto s = build_G(a, b);
      auto expected = fixtures::printed_G(a, b);
      REQUIRE(s.terms.size() == 5);
      for (unsigned k = 0; k < 5; ++k) CHECK(s.terms[k] == expected[k]);
    }
}

TEST_CASE("G first terms") {
  auto s = build_G(kHalf, kOne);
  auto c1 = build_classical_rep(kHalf), c2 = build_classical_rep(kOne);
  auto r = kron(c1["J0"], c2["J+"]) - kron(c1["J+"], c2["J0"]);
  CHECK(s.terms[1] == MultiPoly(Rational(-1, 2)) * r);
  CHECK(s.sum().map([](const MultiPoly& p) { return p.substitute(Symbol::h, MultiPoly()); }) ==
        PolyMatrix::identity(6));
}

TEST_CASE("word algebra") {
  using P = TensorWordPoly;
  auto x = P::leg1('+') * P::leg2('0');
  CHECK(x.flipped() == P::leg2('+') * P::leg1('0'));
  auto g = P::one() + P::scalar(1, 1) * x;
  auto inv = series_inverse(g, 3);
  CHECK((g * inv).truncated(3) == P::one());
  CHECK_THROWS(series_inverse(x, 2));
}

TEST_CASE("g closed forms") {
  auto [gh, gih] = build_g(kHalf);
  PolyMatrix expect(2, 2);
  expect(0, 0) = MultiPoly(1);
  expect(1, 1) = MultiPoly(1);
  expect(0, 1) = h;
  CHECK(gh == expect);
  for (Spin j : {kHalf, kOne, kThreeHalves}) CHECK(check_g_closed_form(j).ok());
}

TEST_CASE("twist identities") {
  CHECK(check_cocycle(kHalf, kHalf, kHalf).ok());
  CHECK(check_cocycle(kHalf, kOne, kHalf).ok());
  CHECK(check_R_from_G(kHalf, kHalf).ok());
  CHECK(check_R_from_G(kHalf, kOne).ok());
  CHECK(check_g_from_G(kOne).ok());
  CHECK(check_g_from_G(kThreeHalves).ok());
  CHECK(check_twisted_coproduct(kHalf, kHalf).ok());
  CHECK(check_twisted_coproduct(kHalf, kOne).ok());
  CHECK_THROWS(check_cocycle(kHalf, kHalf, kHalf, 5));
}

TEST_CASE("a corrupted twist is rejected") {
  // Dropping the h^3 term must break the cocycle condition at that order.
  auto words = build_G_words();
  auto broken = words - TensorWordPoly::scalar(1, 3) * words.coefficient(3);
  auto a = classical_action(kHalf);
  auto i = PolyMatrix::identity(2);
  auto lhs = kron(i, evaluate(broken, a, a)) * evaluate(broken, a, tensor_action(a, a));
  auto rhs = kron(evaluate(broken, a, a), i) * evaluate(broken, tensor_action(a, a), a);
  CHECK_FALSE(truncate_h(lhs, 4) == truncate_h(rhs, 4));
}
