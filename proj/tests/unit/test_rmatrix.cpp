#include <doctest.h>

#include "jordan/fixtures/printed_r.hpp"
#include "jordan/errors.hpp"
#include "jordan/rmatrix/rmatrix.hpp"

using namespace jordan;
using fixtures::h;

namespace {

PairLabels plain(Spin a, Spin b) { return {{a, std::nullopt}, {b, std::nullopt}}; }
PairLabels coloured(Spin a, Spin b) { return {{a, MultiPoly(Symbol::z1)}, {b, MultiPoly(Symbol::z2)}}; }

LaurentScalar qp(long num, long den, int order) { return q_power(MultiPoly(Rational(num, den)), order); }

}  // namespace

TEST_CASE("transforming matrix M") {
  const int n = 4;
  auto eta = eta_series(n);
  auto q2 = q_integer(2, n), q3 = q_integer(3, n);
  auto m1 = build_M(kOne, n);
  CHECK(m1(0, 1) == q2 * eta);
  CHECK(m1(0, 2) == q2 * eta * eta);
  CHECK(m1(1, 2) == q2 * eta);
  CHECK(is_zero(m1(1, 0)));
  auto m3 = build_M(kThreeHalves, n);
  CHECK(m3(0, 1) == q3 * eta);
  CHECK(m3(0, 2) == q_factorial(3, n) * eta * eta);
  CHECK(m3(0, 3) == q_factorial(3, n) * eta * eta * eta);
  CHECK(m3(1, 2) == q2 * q2 * eta);
  CHECK(m3(1, 3) == q_factorial(3, n) * eta * eta);
  auto mh = build_M(kHalf, n);
  CHECK(mh(0, 1) == eta);
  CHECK(mh(0, 0) == LaurentScalar(1));
}

TEST_CASE("universal R_q at spin one half") {
  const int n = 4;
  auto r = eval_universal_Rq(kHalf, kHalf, n);
  CHECK(r(0, 0) == qp(1, 2, n));
  CHECK(r(1, 1) == qp(-1, 2, n));
  CHECK(r(2, 2) == qp(-1, 2, n));
  CHECK(r(3, 3) == qp(1, 2, n));
  CHECK(r(1, 2) == qp(1, 2, n) - qp(-3, 2, n));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!(i == j || (i == 1 && j == 2))) CHECK(is_zero(r(i, j)));
  auto lim = r.map([](const LaurentScalar& s) { return limit_q_to_1(s).as_polynomial(); });
  CHECK(lim == PolyMatrix::identity(4));
}

TEST_CASE("contraction at spin one half") {
  auto r = contract_R(plain(kHalf, kHalf));
  CHECK(r.body == fixtures::entries({{1, h, -h, h * h}, {0, 1, 0, h}, {0, 0, 1, -h}, {0, 0, 0, 1}}));
  CHECK(r.body == fixtures::tR_half(kHalf));
}

TEST_CASE("factorised and full contraction agree") {
  ContractionOptions full;
  full.full_product = true;
  for (auto labels : {plain(kHalf, kOne), plain(kOne, kOne), coloured(kHalf, kOne), coloured(kOne, kHalf)})
    CHECK(contract_R(labels).body == contract_R(labels, full).body);
}

TEST_CASE("printed uncoloured matrices") {
  for (Spin j : {kHalf, kOne, kThreeHalves}) {
    CAPTURE(j.twice_j);
    CHECK(contract_R(plain(kHalf, j)).body == fixtures::tR_half(j));
    CHECK(eval_universal_Rh(plain(kHalf, j)).body == fixtures::R_half(j));
    CHECK(contract_R(plain(kOne, j)).body == fixtures::tR_one(j));
    CHECK(eval_universal_Rh(plain(kOne, j)).body == fixtures::R_one(j));
  }
  CHECK(contract_R(plain(kThreeHalves, kHalf)).body == fixtures::tR_thalf(kHalf));
  CHECK(eval_universal_Rh(plain(kThreeHalves, kOne)).body == fixtures::R_thalf(kOne));
}

TEST_CASE("printed coloured matrices") {
  CHECK(contract_R(coloured(kHalf, kOne)).body == fixtures::col_R_half_one());
  CHECK(eval_universal_Rh(coloured(kOne, kHalf)).body == fixtures::col_R_one_half());
  CHECK(twist_conjugated_R(coloured(kOne, kHalf)).body == fixtures::col_R_one_half());
}

TEST_CASE("twist contraction") {
  for (auto labels : {coloured(kHalf, kOne), coloured(kOne, kOne), coloured(kThreeHalves, kHalf)})
    CHECK(check_twist_contraction(labels).ok());
}

TEST_CASE("identities on small pairs") {
  Sector a{kHalf, MultiPoly(Symbol::z1)}, b{kOne, MultiPoly(Symbol::z2)}, c{kHalf, MultiPoly(Symbol::z3)};
  CHECK(check_YBE(a, b, c).ok());
  CHECK(check_YBE({kHalf, std::nullopt}, {kHalf, std::nullopt}, {kOne, std::nullopt}).ok());
  CHECK(check_triangularity(coloured(kHalf, kOne)).ok());
  CHECK(check_exchange_symmetry(coloured(kHalf, kOne)).ok());
  CHECK(check_exchange_symmetry(coloured(kOne, kOne)).ok());
  CHECK(check_intertwiner(coloured(kHalf, kHalf)).ok());
  CHECK(check_intertwiner(plain(kHalf, kOne)).ok());
  CHECK(check_coloured_routes(coloured(kThreeHalves, kOne)).ok());
  CHECK(check_contract_equals_direct(coloured(kOne, kThreeHalves)).ok());
}

TEST_CASE("broken inputs are caught") {
  ContractionOptions wrong;
  wrong.eta = [](int n) {
    auto qm1 = series_exp(MultiPoly(1), n + 4) - LaurentScalar(1);
    return (LaurentScalar(h) * (qm1 * qm1).inverse()).truncated(n);
  };
  CHECK_THROWS_AS(contract_R(plain(kHalf, kOne), wrong), PoleError);
  auto s = check_truncation_stability(coloured(kHalf, kOne));
  CHECK(s.ok());
  CHECK(s.detail.find("pole survives limit") != std::string::npos);
}

TEST_CASE("classical limit") {
  for (auto labels : {plain(kOne, kThreeHalves), coloured(kOne, kHalf)}) {
    auto r = eval_universal_Rh(labels).body.map([](const MultiPoly& p) { return p.substitute(Symbol::h, MultiPoly()); });
    CHECK(r == PolyMatrix::identity(r.rows()));
  }
  // alpha = 0 collapses the coloured matrix to the single-parameter one.
  auto c = eval_universal_Rh(coloured(kOne, kOne)).body.map(
      [](const MultiPoly& p) { return p.substitute(Symbol::alpha, MultiPoly()); });
  CHECK(c == eval_universal_Rh(plain(kOne, kOne)).body);
}

TEST_CASE("label parsing") {
  auto s = parse_sectors("j1=1/2,z1=sym:z1;j2=1,z2=sym:z2");
  REQUIRE(s.size() == 2);
  CHECK(s[0].j == kHalf);
  CHECK(*s[0].z == MultiPoly(Symbol::z1));
  CHECK(s[1].j == kOne);
  auto t = parse_sectors("1/2,z1;1,z2;1/2,3/4");
  REQUIRE(t.size() == 3);
  CHECK(*t[2].z == MultiPoly(Rational(3, 4)));
  CHECK(parse_sectors("3/2")[0].z == std::nullopt);
  CHECK_THROWS(parse_sectors("1/2,sym:q"));
  CHECK_THROWS(parse_sectors(""));
  CHECK(PairLabels{s[0], s[1]}.to_string() == "1/2,sym:z1;1,sym:z2");
}
