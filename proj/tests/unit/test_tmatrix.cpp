#include <doctest.h>

#include "jordan/fixtures/printed_t.hpp"
#include "jordan/errors.hpp"
#include "jordan/tmatrix/tmatrix.hpp"

using namespace jordan;

namespace {

const MultiPoly z(Symbol::z);
const MultiPoly z1(Symbol::z1);
const MultiPoly z2(Symbol::z2);
const MultiPoly half(Rational(1, 2));

void check_matrix(const Matrix<HPoly>& got, const Matrix<HPoly>& want) {
  REQUIRE(got.rows() == want.rows());
  REQUIRE(got.cols() == want.cols());
  for (std::size_t i = 0; i < got.rows(); ++i)
    for (std::size_t k = 0; k < got.cols(); ++k) {
      INFO("entry (" << i << "," << k << ")");
      INFO("got  " << got(i, k).to_string());
      INFO("want " << want(i, k).to_string());
      CHECK(got(i, k) == want(i, k));
    }
}

void check_report(const Report& r) {
  INFO(r.identity << " " << r.labels << ": " << r.detail);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("q-side T matrices") {
  constexpr int order = 6;
  const MultiPoly alpha(Symbol::alpha);
  auto t = build_Tq(kHalf, z, order);
  CHECK(t.body.rows() == 2);
  CHECK(t.body(0, 1) == q_power(alpha * (z - half), order) * QPoly::gen('b'));
  CHECK(t.prefactor.sigma == z - half);
  auto one = build_Tq(kOne, z, order);
  CHECK(one.body(2, 0) ==
        q_integer(2, order).inverse() * q_power(-2 * alpha * (z - 1), order) * QPoly::word("cc"));
  CHECK(one.prefactor.sigma == z - 1);
  CHECK_THROWS_AS(build_Tq(Spin(3), z, order), std::invalid_argument);
}

TEST_CASE("contracted T for j = 1/2") {
  auto t = contract_T(kHalf, z);
  CHECK(t.prefactor.sigma == z - half);
  check_matrix(t.body, tfix::T_half());
}

TEST_CASE("contracted T for j = 1") {
  auto t = contract_T(kOne, z);
  CHECK(t.prefactor.sigma == z - 1);
  check_matrix(t.body, tfix::T_one());
}

TEST_CASE("j = 1 at z = 1/2 and the alpha = 0 form") {
  auto t = contract_T(kOne, half);
  CHECK(t.prefactor.sigma == MultiPoly(Rational(-1, 2)));
  check_matrix(t.body, tfix::T_one_half());

  TContractionOptions single;
  single.alpha = MultiPoly(0);
  auto t0 = contract_T(kOne, half, single);
  auto sys0 = jordanian_system(MultiPoly(0));
  check_matrix(t0.body, tfix::T_one_h().map([&](const HPoly& p) { return sys0.normal_order(p); }));
}

TEST_CASE("specializations") { check_report(check_specializations()); }

TEST_CASE("RTT with j = 1/2 on both sides") {
  check_report(check_RTT({kHalf, z1}, {kHalf, z2}));
  CHECK_THROWS_AS(check_RTT({kHalf, std::nullopt}, {kHalf, z2}), std::invalid_argument);
}

TEST_CASE("RTT with mixed spins") {
  check_report(check_RTT({kHalf, z1}, {kOne, z2}));
  check_report(check_RTT({kOne, z1}, {kHalf, z2}));
}

TEST_CASE("RTT with j = 1 on both sides") { check_report(check_RTT({kOne, z1}, {kOne, z2})); }

TEST_CASE("RTT with other R sources") {
  check_report(check_RTT({kHalf, z1}, {kHalf, z2}, RSource::contracted));
  check_report(check_RTT({kHalf, z1}, {kHalf, z2}, RSource::twist));
}

TEST_CASE("T entries do not commute on their own") {
  auto t1 = contract_T(kHalf, z1), t2 = contract_T(kHalf, z2);
  auto sys = jordanian_system();
  CHECK_FALSE(sys.normal_order(t1.body(0, 0) * t2.body(0, 1)) == sys.normal_order(t2.body(0, 1) * t1.body(0, 0)));
}

TEST_CASE("group-like determinant") { check_report(check_group_like_determinant(6)); }

TEST_CASE("truncation stability") {
  check_report(check_T_truncation_stability(kHalf, z));
  auto c = contract_T_with_order(kHalf, z);
  CHECK(c.order >= 4);

  TContractionOptions wrong;
  wrong.confirm = false;
  wrong.eta = [](int order) {
    LaurentScalar qm1 = q_power(MultiPoly(1), order + 4) - LaurentScalar(1);
    return (LaurentScalar(MultiPoly(Symbol::h)) * (qm1 * qm1).inverse()).truncated(order);
  };
  CHECK_THROWS_AS(contract_T(kHalf, z, wrong), PoleError);
}
