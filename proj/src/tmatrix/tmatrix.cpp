#include "jordan/tmatrix/tmatrix.hpp"

#include <stdexcept>

#include "jordan/errors.hpp"
#include "jordan/linalg/functions.hpp"
#include "jordan/linalg/parallel.hpp"

namespace jordan {

namespace {

constexpr int kMaxRetries = 12;

QPoly hw(const char* w, LaurentScalar c = LaurentScalar(1)) { return QPoly::word(w, std::move(c)); }

// lambda^x = q^{alpha x}
LaurentScalar lam(const MultiPoly& alpha, const MultiPoly& x, int order) { return q_power(alpha * x, order); }

LaurentScalar qp(const Rational& x, int order) { return q_power(MultiPoly(x), order); }

LaurentScalar eta_for(const TContractionOptions& opts, int order) {
  return opts.eta ? opts.eta(order) : eta_series(order);
}

}  // namespace

QTMatrix build_Tq(Spin j, const MultiPoly& z, int order, const MultiPoly& alpha) {
  QTMatrix t;
  t.j = j;
  t.z = z;
  const Rational half(1, 2);
  const MultiPoly zh = z - MultiPoly(half);
  if (j == kHalf) {
    t.prefactor = {zh};
    t.body = Matrix<QPoly>(2, 2);
    t.body(0, 0) = hw("a");
    t.body(0, 1) = hw("b", lam(alpha, zh, order));
    t.body(1, 0) = hw("c", lam(alpha, -zh, order));
    t.body(1, 1) = hw("d");
    return t;
  }
  if (j == kOne) {
    t.prefactor = {z - MultiPoly(1)};
    const LaurentScalar two = q_integer(2, order);
    const LaurentScalar rq = qp(half, order);
    const MultiPoly z1 = z - MultiPoly(1);
    t.body = Matrix<QPoly>(3, 3);
    t.body(0, 0) = hw("aa");
    t.body(0, 1) = hw("ab", two * rq * lam(alpha, zh, order));
    t.body(0, 2) = hw("bb", two * lam(alpha, 2 * z1, order));
    t.body(1, 0) = hw("ac", rq * lam(alpha, -zh, order));
    t.body(1, 1) = hw("ad") + hw("bc", qp(Rational(1), order) * lam(alpha, MultiPoly(-1), order));
    t.body(1, 2) = hw("bd", two * rq * lam(alpha, z - MultiPoly(Rational(3, 2)), order));
    t.body(2, 0) = hw("cc", two.inverse() * lam(alpha, -2 * z1, order));
    t.body(2, 1) = hw("cd", rq * lam(alpha, MultiPoly(Rational(3, 2)) - z, order));
    t.body(2, 2) = hw("dd");
    return t;
  }
  throw std::invalid_argument("universal-T evaluation out of scope for j = " + j.to_string());
}

namespace {

TMatrix contract_at(Spin j, const MultiPoly& z, int order, const TContractionOptions& opts) {
  QTMatrix tq = build_Tq(j, z, order, opts.alpha);
  SeriesMatrix m = build_M(j, order, eta_for(opts, order));
  SeriesMatrix minv = unipotent_inverse(m);
  QSystem tilde = tilde_system(order, opts.alpha);
  LaurentScalar eta = eta_series(order);
  const std::size_t d = j.dim();
  TMatrix out;
  out.j = j;
  out.z = z;
  out.prefactor = tq.prefactor;
  out.body = Matrix<HPoly>(d, d);
  ParallelErrors errors;
  const auto n = static_cast<std::ptrdiff_t>(d * d);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto r = static_cast<std::size_t>(k) / d, c = static_cast<std::size_t>(k) % d;
    try {
      QPoly e;
      for (std::size_t p = 0; p < d; ++p) {
        if (is_zero(minv(r, p))) continue;
        for (std::size_t s = 0; s < d; ++s)
          if (!is_zero(m(s, c))) e += (minv(r, p) * m(s, c)) * tq.body(p, s);
      }
      out.body(r, c) = limit_ncpoly(substitute_hat_to_tilde(e, tilde, eta));
    } catch (...) {
      errors.capture(static_cast<std::size_t>(k));
    }
  }
  errors.rethrow();
  return out;
}

}  // namespace

TContraction contract_T_with_order(Spin j, const MultiPoly& z, const TContractionOptions& opts) {
  if (!(j == kHalf || j == kOne))
    throw std::invalid_argument("universal-T evaluation out of scope for j = " + j.to_string());
  int n = opts.trunc.value_or(4 * static_cast<int>(j.twice_j));
  for (int tries = 0;; ++tries, n += 2) {
    try {
      TMatrix t = contract_at(j, z, n, opts);
      if (opts.confirm && !(contract_at(j, z, n + 2, opts).body == t.body))
        throw TruncationError("insufficient truncation: T changed between orders " + std::to_string(n) + " and " +
                              std::to_string(n + 2));
      return {std::move(t), n};
    } catch (const TruncationError&) {
      if (tries >= kMaxRetries) throw;
    }
  }
}

TMatrix contract_T(Spin j, const MultiPoly& z, const TContractionOptions& opts) {
  return contract_T_with_order(j, z, opts).t;
}

Report check_RTT(const Sector& s1, const Sector& s2, RSource source) {
  PairLabels labels{s1, s2};
  ReportBuilder rb("RTT", labels.to_string());
  if (!s1.coloured() || !s2.coloured()) throw std::invalid_argument("RTT needs a colour on both sectors");
  const PolyMatrix r = build_R(labels, source).body;
  const TMatrix t1 = contract_T(s1.j, *s1.z);
  const TMatrix t2 = contract_T(s2.j, *s2.z);
  const HSystem sys = jordanian_system();
  const PowerCommutation& phi = jordanian_power_commutation();
  const std::size_t d1 = s1.j.dim(), d2 = s2.j.dim(), n = d1 * d2;

  // (T (x) 1)(1 (x) T) = D^{s1+s2} phi_{s2}(U1_ik) U2_jl and
  // (1 (x) T)(T (x) 1) = D^{s1+s2} phi_{s1}(U2_jl) U1_ik, so the common
  // prefactor drops out.
  Matrix<HPoly> phi1(d1, d1), phi2(d2, d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t k = 0; k < d1; ++k) phi1(i, k) = phi.apply(t1.body(i, k), t2.prefactor.sigma, sys);
  for (std::size_t j = 0; j < d2; ++j)
    for (std::size_t l = 0; l < d2; ++l) phi2(j, l) = phi.apply(t2.body(j, l), t1.prefactor.sigma, sys);

  Matrix<HPoly> a(n, n), b(n, n);
  ParallelErrors errors;
  const auto nn = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < nn; ++k) {
    const auto row = static_cast<std::size_t>(k) / n, col = static_cast<std::size_t>(k) % n;
    const std::size_t i = row / d2, j = row % d2, kk = col / d2, l = col % d2;
    try {
      a(row, col) = sys.normal_order(phi1(i, kk) * t2.body(j, l));
      b(row, col) = sys.normal_order(phi2(j, l) * t1.body(i, kk));
    } catch (...) {
      errors.capture(static_cast<std::size_t>(k));
    }
  }
  errors.rethrow();

  Matrix<HPoly> lhs(n, n), rhs(n, n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < nn; ++k) {
    const auto row = static_cast<std::size_t>(k) / n, col = static_cast<std::size_t>(k) % n;
    HPoly x, y;
    for (std::size_t m = 0; m < n; ++m) {
      if (!is_zero(r(row, m))) x += r(row, m) * a(m, col);
      if (!is_zero(r(m, col))) y += r(m, col) * b(row, m);
    }
    lhs(row, col) = std::move(x);
    rhs(row, col) = std::move(y);
  }
  rb.compare(lhs, rhs, "R T1 T2 vs T2 T1 R");
  rb.note("R source " + std::string(source == RSource::direct ? "direct" : source == RSource::contracted ? "contracted"
                                                                                                        : "twist"));
  rb.note(std::string(kColouredConvention));
  return rb.finish();
}

Report check_specializations() {
  ReportBuilder rb("T-specializations", "j = 1/2, 1");
  const MultiPoly z(Symbol::z);
  const MultiPoly half(Rational(1, 2));
  for (Spin j : {kHalf, kOne}) {
    TMatrix sym = contract_T(j, z);
    TMatrix at_half = contract_T(j, half);
    auto subst = sym.body.map([&](const HPoly& p) {
      return p.map_coeffs([&](const MultiPoly& c) { return c.substitute(Symbol::z, half); });
    });
    rb.compare(subst, at_half.body, "z -> 1/2 after contraction, j = " + j.to_string());
    rb.compare_value(sym.prefactor.sigma.substitute(Symbol::z, half), at_half.prefactor.sigma,
                     "prefactor at z = 1/2, j = " + j.to_string());

    TContractionOptions single;
    single.alpha = MultiPoly(0);
    TMatrix a0 = contract_T(j, z, single);
    auto drop_alpha = sym.body.map([](const HPoly& p) {
      return p.map_coeffs([](const MultiPoly& c) { return c.substitute(Symbol::alpha, MultiPoly(0)); });
    });
    rb.compare(drop_alpha, a0.body, "alpha -> 0 commutes with contraction, j = " + j.to_string());
  }
  TMatrix fund = contract_T(kHalf, half);
  Matrix<HPoly> gens(2, 2);
  gens(0, 0) = HPoly::gen('a'), gens(0, 1) = HPoly::gen('b'), gens(1, 0) = HPoly::gen('c'), gens(1, 1) = HPoly::gen('d');
  rb.compare(fund.body, gens, "T^{1/2,1/2} = [[a,b],[c,d]]");
  rb.compare_value(fund.prefactor.sigma, MultiPoly(0), "T^{1/2,1/2} prefactor");
  return rb.finish();
}

Report check_group_like_determinant(int order) {
  ReportBuilder rb("group-like-determinant", "order " + std::to_string(order));
  rb.absorb(check_group_like(order));
  rb.absorb(check_determinant_relations(order));
  return rb.finish();
}

Report check_T_truncation_stability(Spin j, const MultiPoly& z) {
  ReportBuilder rb("T-truncation-stability", "j=" + j.to_string() + ",z=" + colour_to_string(z));
  TContractionOptions no_confirm;
  no_confirm.confirm = false;
  auto base = contract_T_with_order(j, z, no_confirm);
  TContractionOptions next = no_confirm;
  next.trunc = base.order + 2;
  rb.compare(base.t.body, contract_T(j, z, next).body, "orders " + std::to_string(base.order) + " and " +
                                                             std::to_string(base.order + 2));
  TContractionOptions wrong = no_confirm;
  wrong.trunc = base.order;
  wrong.eta = [](int order) {
    LaurentScalar qm1 = q_power(MultiPoly(1), order + 4) - LaurentScalar(1);
    return (LaurentScalar(MultiPoly(Symbol::h)) * (qm1 * qm1).inverse()).truncated(order);
  };
  try {
    contract_T(j, z, wrong);
    rb.compare_failed(Mismatch{0, 0, "finite limit", "pole survives limit", "wrong eta = h/(q-1)^2"});
  } catch (const PoleError& e) {
    rb.note(std::string("wrong eta rejected: ") + e.what());
  }
  return rb.finish();
}

}  // namespace jordan
