#include <doctest.h>

#include "jordan/errors.hpp"
#include "jordan/scalar/laurent.hpp"

using namespace jordan;

namespace {
const MultiPoly h(Symbol::h);
const MultiPoly al(Symbol::alpha);
}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK((h + al) * (h - al) == h * h - al * al);
  CHECK((h + 1).pow(3) == h * h * h + 3 * h * h + 3 * h + 1);
  CHECK((h * h - al * al).divide_exact(h - al) == h + al);
  CHECK_FALSE((h * h + 1).divide_exact(h + al).has_value());
  CHECK((h + al).substitute(Symbol::alpha, h) == 2 * h);
  CHECK((h * al + h).coefficient(Symbol::h, 1) == al + 1);
  CHECK(MultiPoly(Rational(3, 4)).to_string() == "3/4");
}

TEST_CASE("binomial") {
  MultiPoly s(Symbol::sigma);
  CHECK(binomial(s, 2) == Rational(1, 2) * s * (s - 1));
  CHECK(binomial(MultiPoly(-1), 3) == MultiPoly(-1));
}

TEST_CASE("rational functions") {
  RatFunc a(h + al, h - al);
  RatFunc b(h - al, h + al);
  CHECK(a * b == RatFunc(1));
  CHECK((RatFunc(h * h - al * al, h - al)).as_polynomial() == h + al);
  CHECK_THROWS(RatFunc(h, MultiPoly()));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(to_string(Rational(4)) == "4/1");
}

TEST_CASE("series exp and inverse") {
  auto e = series_exp(MultiPoly(1), 4);
  CHECK(e.coeff(0) == RatFunc(1));
  CHECK(e.coeff(3) == RatFunc(MultiPoly(Rational(1, 6))));
  CHECK_THROWS_AS(e.coeff(5), TruncationError);
  auto em1 = e - LaurentScalar(1);
  auto inv = series_invert(em1);
  CHECK(inv.min_deg() == -1);
  CHECK(inv.coeff(-1) == RatFunc(1));
  CHECK(inv.coeff(0) == RatFunc(MultiPoly(Rational(-1, 2))));
  CHECK(inv.coeff(1) == RatFunc(MultiPoly(Rational(1, 12))));
  // (e^t - 1) * (e^t - 1)^{-1} = 1 on the known range.
  auto one = em1 * inv;
  CHECK(one == LaurentScalar(1));
  CHECK(one.trunc_order() >= 2);
}

TEST_CASE("eta and limits") {
  auto eta = eta_series(4);
  CHECK(eta.coeff(-1) == RatFunc(h));
  CHECK(eta.coeff(0) == RatFunc(Rational(-1, 2) * h));
  CHECK_THROWS_AS(limit_q_to_1(eta), PoleError);
  auto x = eta * (LaurentScalar(1) - q_power(-1 - al, 4));
  CHECK(limit_q_to_1(x) == RatFunc(h * (1 + al)));
  for (int n = 0; n < 6; ++n) CHECK(limit_q_to_1(q_integer(n, 3)) == RatFunc(n));
  CHECK(limit_q_to_1(q_factorial(4, 2)) == RatFunc(24));
  CHECK(q_integer(3, 4).coeff(2) == RatFunc(MultiPoly(4)));
  auto low = eta * eta * LaurentScalar::monomial(RatFunc(1), 2, 0);
  CHECK_THROWS_AS(limit_q_to_1(low), TruncationError);
}
