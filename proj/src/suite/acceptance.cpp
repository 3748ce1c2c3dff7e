#include "jordan/suite/acceptance.hpp"

#include <chrono>
#include <exception>
#include <sstream>

#include "jordan/fixtures/printed_r.hpp"
#include "jordan/fixtures/printed_t.hpp"
#include "jordan/fixtures/printed_twist.hpp"
#include "jordan/nc/power.hpp"
#include "jordan/rmatrix/rmatrix.hpp"
#include "jordan/tmatrix/tmatrix.hpp"
#include "jordan/twist/twist.hpp"

namespace jordan {

namespace {

constexpr int kOrder = 6;

const MultiPoly z(Symbol::z);
const MultiPoly z1(Symbol::z1);
const MultiPoly z2(Symbol::z2);
const MultiPoly z3(Symbol::z3);

PairLabels plain(Spin a, Spin b) { return {{a, std::nullopt}, {b, std::nullopt}}; }
PairLabels coloured(Spin a, Spin b) { return {{a, z1}, {b, z2}}; }

// Marks a report failed when it ran longer than limit_s.
Report capped(Report r, double limit_s) {
  if (r.wall_ms > limit_s * 1000) {
    r.status = Status::failed;
    r.detail += "; over the " + std::to_string(static_cast<int>(limit_s)) + " s case limit";
  }
  return r;
}

template <class F>
Report fixture_case(const std::string& identity, const std::string& labels, F&& compute, const PolyMatrix& expected) {
  ReportBuilder rb(identity, labels);
  rb.compare(compute(), expected);
  return rb.finish();
}

std::vector<Report> r_fixtures() {
  std::vector<Report> out;
  for (Spin j1 : {kHalf, kOne, kThreeHalves})
    for (Spin j2 : {kHalf, kOne, kThreeHalves}) {
      auto labels = plain(j1, j2);
      auto printed_t = j1 == kHalf ? fixtures::tR_half(j2) : j1 == kOne ? fixtures::tR_one(j2) : fixtures::tR_thalf(j2);
      auto printed_d = j1 == kHalf ? fixtures::R_half(j2) : j1 == kOne ? fixtures::R_one(j2) : fixtures::R_thalf(j2);
      out.push_back(capped(fixture_case("fixture contracted R", labels.to_string(),
                                        [&] { return contract_R(labels).body; }, printed_t),
                           10));
      out.push_back(capped(fixture_case("fixture universal R_h", labels.to_string(),
                                        [&] { return eval_universal_Rh(labels).body; }, printed_d),
                           10));
    }
  return out;
}

std::vector<Report> contraction_equals_direct() {
  std::vector<Report> out;
  for (Spin a : {kHalf, kOne, kThreeHalves, kTwo})
    for (Spin b : {kHalf, kOne, kThreeHalves, kTwo}) {
      out.push_back(check_contract_equals_direct(plain(a, b)));
      out.push_back(check_contract_equals_direct(coloured(a, b)));
    }
  return out;
}

std::vector<Report> coloured_fixtures() {
  std::vector<Report> out;
  auto ho = coloured(kHalf, kOne), oh = coloured(kOne, kHalf);
  auto a = fixtures::col_R_half_one(), b = fixtures::col_R_one_half();
  out.push_back(fixture_case("fixture coloured R, contracted", ho.to_string(), [&] { return contract_R(ho).body; }, a));
  out.push_back(fixture_case("fixture coloured R, universal", ho.to_string(), [&] { return eval_universal_Rh(ho).body; }, a));
  out.push_back(fixture_case("fixture coloured R, twist", ho.to_string(), [&] { return twist_conjugated_R(ho).body; }, a));
  out.push_back(fixture_case("fixture coloured R, contracted", oh.to_string(), [&] { return contract_R(oh).body; }, b));
  out.push_back(fixture_case("fixture coloured R, universal", oh.to_string(), [&] { return eval_universal_Rh(oh).body; }, b));
  out.push_back(fixture_case("fixture coloured R, twist", oh.to_string(), [&] { return twist_conjugated_R(oh).body; }, b));
  return out;
}

std::vector<Report> coloured_ybe() {
  std::vector<Report> out;
  for (Spin a : {kHalf, kOne})
    for (Spin b : {kHalf, kOne})
      for (Spin c : {kHalf, kOne}) out.push_back(check_YBE({a, z1}, {b, z2}, {c, z3}));
  out.push_back(check_YBE({kThreeHalves, z1}, {kHalf, z2}, {kOne, z3}));
  out.push_back(check_YBE({kHalf, z1}, {kThreeHalves, z2}, {kHalf, z3}));
  return out;
}

std::vector<Report> triangularity_exchange() {
  std::vector<Report> out;
  for (Spin a : {kHalf, kOne, kThreeHalves, kTwo})
    for (Spin b : {kHalf, kOne, kThreeHalves, kTwo})
      for (const auto& labels : {plain(a, b), coloured(a, b)}) {
        out.push_back(check_triangularity(labels));
        out.push_back(check_exchange_symmetry(labels));
      }
  return out;
}

std::vector<Report> twist_suite() {
  std::vector<Report> out;
  for (Spin a : {kHalf, kOne})
    for (Spin b : {kHalf, kOne}) {
      ReportBuilder rb("G printed series", a.to_string() + ";" + b.to_string());
      auto g = build_G(a, b);
      auto printed = fixtures::printed_G(a, b);
      for (std::size_t k = 0; k < printed.size(); ++k) {
        if (k >= g.terms.size()) {
          rb.compare_failed(Mismatch{0, 0, "missing", "present", "h^" + std::to_string(k)});
          continue;
        }
        rb.compare(g.terms[k], printed[k], "h^" + std::to_string(k));
      }
      out.push_back(rb.finish());
      out.push_back(check_R_from_G(a, b));
      out.push_back(check_twisted_coproduct(a, b));
      for (Spin c : {kHalf, kOne}) out.push_back(check_cocycle(a, b, c));
    }
  for (Spin j : {kHalf, kOne}) {
    out.push_back(check_g_from_G(j));
    out.push_back(check_g_closed_form(j));
  }
  return out;
}

std::vector<Report> algebra_suites() {
  std::vector<Report> out;
  for (unsigned t = 0; t <= 5; ++t) out.push_back(check_h_algebra(Spin{t}));
  out.push_back(check_hat_to_tilde(kOrder));
  out.push_back(check_tilde_limit(kOrder));
  out.push_back(check_determinant_relations(kOrder));
  out.push_back(check_rho_automorphism());
  out.push_back(check_coproduct_morphism());
  out.push_back(check_local_confluence(jordanian_system()));
  out.push_back(check_local_confluence(hat_system(kOrder)));
  out.push_back(check_local_confluence(tilde_system(kOrder)));
  return out;
}

template <class F>
Report t_case(const std::string& identity, const std::string& labels, F&& compute, const Matrix<HPoly>& expected,
              const MultiPoly& sigma) {
  ReportBuilder rb(identity, labels);
  TMatrix t = compute();
  rb.compare(t.body, expected);
  rb.compare_value(t.prefactor.sigma, sigma, "prefactor exponent");
  return rb.finish();
}

std::vector<Report> t_fixtures() {
  std::vector<Report> out;
  const MultiPoly half(canonical(Rational(1, 2)));
  out.push_back(t_case("fixture T", "1/2,sym:z", [] { return contract_T(kHalf, z); }, tfix::T_half(), z - half));
  out.push_back(t_case("fixture T", "1,sym:z", [] { return contract_T(kOne, z); }, tfix::T_one(), z - 1));
  out.push_back(t_case("fixture T at z = 1/2", "1,1/2", [&] { return contract_T(kOne, half); }, tfix::T_one_half(), -half));
  auto sys0 = jordanian_system(MultiPoly(0));
  auto printed = tfix::T_one_h().map([&](const HPoly& p) { return sys0.normal_order(p); });
  TContractionOptions single;
  single.alpha = MultiPoly(0);
  out.push_back(t_case("fixture T at alpha = 0", "1,1/2", [&] { return contract_T(kOne, half, single); }, printed, -half));
  out.push_back(check_specializations());
  return out;
}

std::vector<Report> coloured_rtt() {
  std::vector<Report> out;
  for (Spin a : {kHalf, kOne})
    for (Spin b : {kHalf, kOne}) out.push_back(check_RTT({a, z1}, {b, z2}));
  return out;
}

std::vector<Report> limit_robustness() {
  std::vector<Report> out;
  for (Spin a : {kHalf, kOne})
    for (Spin b : {kHalf, kOne, kThreeHalves}) {
      out.push_back(check_truncation_stability(plain(a, b)));
      out.push_back(check_truncation_stability(coloured(a, b)));
    }
  out.push_back(check_T_truncation_stability(kHalf, z));
  out.push_back(check_T_truncation_stability(kOne, z));
  return out;
}

}  // namespace

bool CriterionResult::all_verified() const {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return !reports.empty();
}

std::string CriterionResult::summary() const {
  std::ostringstream os;
  os << (pass() ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " (" << reports.size() << " checks, ";
  os.setf(std::ios::fixed);
  os.precision(1);
  os << seconds << " s / " << limit_s << " s)";
  if (!error.empty()) {
    os << "  error: " << error;
  } else if (!within_limit()) {
    os << "  over time limit";
  } else {
    for (const auto& r : reports)
      if (!r.ok()) {
        os << "  first failure: " << r.identity << " [" << r.labels << "] " << r.detail;
        break;
      }
  }
  return os.str();
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = {
      {1, "printed R matrices, contracted and universal, j in {1/2, 1, 3/2}", 180, r_fixtures},
      {2, "contraction equals direct evaluation over {1/2,1,3/2,2}^2", 300, contraction_equals_direct},
      {3, "printed coloured R matrices (1/2,z1;1,z2) and (1,z1;1/2,z2)", 30, coloured_fixtures},
      {4, "coloured Yang-Baxter equation with symbolic colours", 300, coloured_ybe},
      {5, "triangularity and exchange symmetry", 60, triangularity_exchange},
      {6, "twist suite through h^4", 120, twist_suite},
      {7, "algebra relations, presentations and local confluence", 120, algebra_suites},
      {8, "printed T matrices and their specializations", 120, t_fixtures},
      {9, "coloured RTT relation", 600, coloured_rtt},
      {10, "limit robustness at N+2 and the wrong-eta pole", 300, limit_robustness},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c) {
  CriterionResult res;
  res.id = c.id;
  res.title = c.title;
  res.limit_s = c.limit_s;
  auto start = std::chrono::steady_clock::now();
  try {
    res.reports = c.run();
  } catch (const std::exception& e) {
    res.error = e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace jordan
