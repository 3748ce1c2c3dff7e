#include <doctest.h>

#include "jordan/io/json.hpp"
#include "jordan/io/latex.hpp"

using namespace jordan;

namespace {

const MultiPoly h(Symbol::h);
const MultiPoly alpha(Symbol::alpha);
const MultiPoly z1(Symbol::z1);
const MultiPoly z2(Symbol::z2);

// Serialize, print, re-parse the text, and parse back.
Json reparsed(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("polynomial round trip") {
  MultiPoly p = h * h * (1 - 2 * alpha * z1) + MultiPoly(Rational(-3, 7)) * z2 + 5;
  CHECK(multipoly_from_json(reparsed(to_json(p))) == p);
  CHECK(multipoly_from_json(Json::array()) == MultiPoly());
  auto j = to_json(MultiPoly(Rational(1, 2)) * h);
  CHECK(j[0]["coeff"] == "1/2");
  CHECK(j[0]["exponents"] == Json::array({1, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(multipoly_from_json(Json::parse(R"([{"exponents":[1,0],"coeff":"1"}])")), std::invalid_argument);
  CHECK_THROWS_AS(multipoly_from_json(Json::parse(R"([{"exponents":[0,0,0,0,0,0,0],"coeff":"1/0"}])")),
                  std::invalid_argument);
  CHECK_THROWS_AS(multipoly_from_json(Json::parse(R"({"a":1})")), std::invalid_argument);
  CHECK_THROWS_AS(hpoly_from_json(Json::parse(R"([{"word":"ax","coeff":[]}])")), std::invalid_argument);
  CHECK_THROWS_AS(central_power_from_json(Json::parse(R"({"base":"E","sigma":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(polymatrix_from_json(Json::parse(R"({"rows":2,"cols":1,"entries":[[[]]]})")), std::invalid_argument);
}

TEST_CASE("R matrix round trip") {
  PairLabels labels{{kHalf, z1}, {kOne, z2}};
  auto r = contract_R(labels);
  auto back = rmatrix_from_json(reparsed(to_json(r)));
  CHECK(back.body == r.body);
  CHECK(back.labels.first == r.labels.first);
  CHECK(back.labels.second == r.labels.second);
  CHECK(back.provenance == r.provenance);
  auto plain = eval_universal_Rh({{kOne, std::nullopt}, {kHalf, std::nullopt}});
  auto back2 = rmatrix_from_json(reparsed(to_json(plain)));
  CHECK_FALSE(back2.labels.first.coloured());
  CHECK(back2.body == plain.body);
}

TEST_CASE("T matrix round trip") {
  auto t = contract_T(kOne, MultiPoly(Symbol::z));
  auto back = tmatrix_from_json(reparsed(to_json(t)));
  CHECK(back.j == t.j);
  CHECK(back.z == t.z);
  CHECK(back.prefactor.sigma == t.prefactor.sigma);
  CHECK(back.body == t.body);
}

TEST_CASE("series, representations, twist and reports round trip") {
  auto m = build_M(kOne, 4);
  auto mb = seriesmatrix_from_json(reparsed(to_json(m)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      CHECK(mb(i, k) == m(i, k));
      CHECK(mb(i, k).trunc_order() == m(i, k).trunc_order());
      CHECK(mb(i, k).min_deg() == m(i, k).min_deg());
    }
  auto rep = build_h_rep(kThreeHalves);
  auto rb = rep_from_json(reparsed(to_json(rep)));
  CHECK(rb.kind == rep.kind);
  REQUIRE(rb.generators.size() == rep.generators.size());
  for (std::size_t i = 0; i < rep.generators.size(); ++i) CHECK(rb.generators[i] == rep.generators[i]);
  auto q = build_q_rep(kOne, 3);
  auto qb = qrep_from_json(reparsed(to_json(q)));
  CHECK(qb["J+"] == q["J+"]);

  auto g = build_G(kHalf, kOne);
  auto gb = twist_from_json(reparsed(to_json(g)));
  CHECK(gb.terms == g.terms);

  ReportBuilder b("demo", "1/2;1");
  b.compare_failed(Mismatch{1, 2, "x", "y", "order 3"});
  auto r = b.finish();
  auto back = report_from_json(reparsed(to_json(r)));
  CHECK(back.identity == r.identity);
  CHECK(back.status == Status::failed);
  REQUIRE(back.first_mismatch);
  CHECK(back.first_mismatch->col == 2);
  CHECK(back.first_mismatch->where == "order 3");
  CHECK(back.detail == r.detail);
}

TEST_CASE("LaTeX layout") {
  CHECK(latex(2 * h * (1 + 2 * alpha * z1)) == "2 h (1 + 2 \\alpha z_1)");
  CHECK(latex(MultiPoly(1)) == "1");
  CHECK(latex(MultiPoly(Rational(-3, 4)) * h * h) == "-\\frac{3}{4} h^{2}");
  CHECK(latex(1 - 2 * h * alpha * z2) == "1 - 2 h \\alpha z_2");

  auto r = contract_R({{kHalf, z1}, {kOne, z2}});
  auto s = latex(r);
  CHECK(s.find("A' & B'") != std::string::npos);
  CHECK(s.find("0 & C'") != std::string::npos);
  CHECK(s.find("2 h^{2} (1 - 2 \\alpha z_1 - 4 \\alpha^{2} z_1 z_2)") != std::string::npos);

  HPoly p = HPoly::word("aa") + HPoly::word("ac", MultiPoly(-1) * h * alpha);
  CHECK(latex(p) == "a^{2} - h \\alpha ac");
}
