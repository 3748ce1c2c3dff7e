#include "jordan/rmatrix/rmatrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

constexpr int kMaxRetries = 12;

const MultiPoly kH(Symbol::h);
const MultiPoly kAlpha(Symbol::alpha);

PolyMatrix limit_matrix(const SeriesMatrix& m) {
  return map_parallel(m, [](const LaurentScalar& s) { return limit_q_to_1(s).as_polynomial(); });
}

MultiPoly colour_of(const Sector& s) { return s.z.value_or(MultiPoly()); }

LaurentScalar eta_at(const ContractionOptions& opts, int order) {
  return opts.eta ? opts.eta(order) : eta_series(order);
}

struct Conjugator {
  SeriesMatrix m, minv;
};

Conjugator conjugator(Spin j, int order, const ContractionOptions& opts) {
  Conjugator c;
  c.m = build_M(j, order, eta_at(opts, order));
  c.minv = unipotent_inverse(c.m);
  return c;
}

// Runs attempt(N) from the starting order, raising N by two whenever the
// limit needs more coefficients, then confirms the result at N+2.
template <class Attempt>
ContractionResult adaptive(int start, const ContractionOptions& opts, Attempt&& attempt) {
  int n = opts.trunc.value_or(start);
  for (int tries = 0;; ++tries, n += 2) {
    try {
      PolyMatrix r = attempt(n);
      if (opts.confirm && !(attempt(n + 2) == r))
        throw TruncationError("insufficient truncation: result changed between orders " + std::to_string(n) +
                              " and " + std::to_string(n + 2));
      return {std::move(r), n};
    } catch (const TruncationError&) {
      if (tries >= kMaxRetries) throw;
    }
  }
}

SeriesMatrix diag_q_powers(Spin j, const MultiPoly& half_weight_coeff, int order) {
  // diag(q^{c m}) with m the weight of each basis vector.
  SeriesMatrix d(j.dim(), j.dim());
  for (std::size_t i = 0; i < j.dim(); ++i)
    d(i, i) = q_power(half_weight_coeff * j.weight(i), order);
  return d;
}

// The two legs of the q-exponential in R_q: q^{J0/2} J+ and q^{-J0/2} J-.
std::pair<SeriesMatrix, SeriesMatrix> rq_legs(Spin j1, Spin j2, int order) {
  auto a = multiply(diag_q_powers(j1, MultiPoly(1), order), build_q_rep(j1, order)["J+"]);
  auto b = multiply(diag_q_powers(j2, MultiPoly(-1), order), build_q_rep(j2, order)["J-"]);
  return {a, b};
}

// (1 - q^-2)^n / {n}_{q^-2}!
LaurentScalar rq_coefficient(unsigned n, int order) {
  LaurentScalar base = LaurentScalar(1) - q_power(MultiPoly(-2), order);
  LaurentScalar c(1);
  for (unsigned k = 0; k < n; ++k) c = c * base;
  return c * q_brace_factorial(static_cast<int>(n), -2, order).inverse();
}

// Factorised form: R_q = sum_{i1,n} c_n (E_{i1} A^n) (x) (q^{2 m1 J0/2} B^n), so
// each term conjugates factor by factor.
PolyMatrix contract_rq_factorised(Spin j1, Spin j2, int order, const ContractionOptions& opts) {
  auto c1 = conjugator(j1, order, opts);
  auto c2 = conjugator(j2, order, opts);
  auto [a, b] = rq_legs(j1, j2, order);
  const std::size_t d1 = j1.dim(), d2 = j2.dim();
  SeriesMatrix total(d1 * d2, d1 * d2);
  SeriesMatrix an = SeriesMatrix::identity(d1), bn = SeriesMatrix::identity(d2);
  const unsigned nmax = static_cast<unsigned>(std::min(d1, d2));
  for (unsigned n = 0; n < nmax; ++n) {
    if (n > 0) an = multiply(an, a), bn = multiply(bn, b);
    LaurentScalar cn = rq_coefficient(n, order);
    for (std::size_t i1 = 0; i1 < d1; ++i1) {
      SeriesMatrix row(d1, d1);
      bool any = false;
      for (std::size_t k = 0; k < d1; ++k)
        if (!is_zero(an(i1, k))) row(i1, k) = an(i1, k), any = true;
      if (!any) continue;
      // q^{(1/2) J0 (x) J0} restricted to row weight m1 acts as q^{m1 J0} on factor 2.
      SeriesMatrix right = multiply(diag_q_powers(j2, MultiPoly(2) * j1.weight(i1), order), bn);
      SeriesMatrix left = multiply(c1.minv, multiply(row, c1.m));
      right = multiply(c2.minv, multiply(right, c2.m));
      total += cn * kron(left, right);
    }
  }
  return limit_matrix(total);
}

PolyMatrix contract_full(Spin j1, Spin j2, const SeriesMatrix& a, int order, const ContractionOptions& opts) {
  auto c1 = conjugator(j1, order, opts);
  auto c2 = conjugator(j2, order, opts);
  return limit_matrix(multiply(kron(c1.minv, c2.minv), multiply(a, kron(c1.m, c2.m))));
}

// Twice the largest power of eta that can occur.
int pair_start(Spin j1, Spin j2) { return std::max(2, 2 * static_cast<int>(j1.twice_j + j2.twice_j)); }

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::contracted: return "contracted";
    case Provenance::direct_universal: return "direct-universal";
    case Provenance::twist_conjugated: return "twist-conjugated";
  }
  return "?";
}

SeriesMatrix build_M(Spin j, int order) { return build_M(j, order, eta_series(order)); }

SeriesMatrix build_M(Spin j, int order, const LaurentScalar& eta) {
  const std::size_t d = j.dim();
  SeriesMatrix x = eta * build_q_rep(j, order)["J+"];
  SeriesMatrix m = SeriesMatrix::identity(d);
  SeriesMatrix p = SeriesMatrix::identity(d);
  for (unsigned n = 1; n < d; ++n) {
    p = multiply(p, x);
    m += q_factorial(static_cast<int>(n), order).inverse() * p;
  }
  return m;
}

SeriesMatrix eval_universal_Rq(Spin j1, Spin j2, int order) {
  auto [a, b] = rq_legs(j1, j2, order);
  const std::size_t d1 = j1.dim(), d2 = j2.dim();
  SeriesMatrix x = (LaurentScalar(1) - q_power(MultiPoly(-2), order)) * kron(a, b);
  SeriesMatrix e = SeriesMatrix::identity(d1 * d2);
  SeriesMatrix p = SeriesMatrix::identity(d1 * d2);
  for (unsigned n = 1; n < std::min(d1, d2); ++n) {
    p = multiply(p, x);
    e += q_brace_factorial(static_cast<int>(n), -2, order).inverse() * p;
  }
  SeriesMatrix diag(d1 * d2, d1 * d2);
  for (std::size_t i1 = 0; i1 < d1; ++i1)
    for (std::size_t i2 = 0; i2 < d2; ++i2)
      diag(i1 * d2 + i2, i1 * d2 + i2) = q_power(MultiPoly(Rational(2 * j1.weight(i1) * j2.weight(i2))), order);
  return multiply(diag, e);
}

std::pair<SeriesMatrix, SeriesMatrix> twist_hat_inverse_factors(Spin j1, const MultiPoly& z1, Spin j2,
                                                                const MultiPoly& z2, int order) {
  // lambda^{-(J0 (x) Z - Z (x) J0)/2} = q^{-alpha z2 m1} q^{alpha z1 m2} since J0 = 2m.
  return {diag_q_powers(j1, -(kAlpha * z2), order), diag_q_powers(j2, kAlpha * z1, order)};
}

SeriesMatrix twist_hat_inverse(Spin j1, const MultiPoly& z1, Spin j2, const MultiPoly& z2, int order) {
  auto [f1, f2] = twist_hat_inverse_factors(j1, z1, j2, z2, order);
  return kron(f1, f2);
}

ContractionResult contract_pair(Spin j1, Spin j2, const std::function<SeriesMatrix(int)>& build,
                                const ContractionOptions& opts) {
  return adaptive(pair_start(j1, j2), opts, [&](int n) { return contract_full(j1, j2, build(n), n, opts); });
}

ContractionResult contract_single(Spin j, const std::function<SeriesMatrix(int)>& build,
                                  const ContractionOptions& opts) {
  return adaptive(std::max(2, 2 * static_cast<int>(j.twice_j)), opts, [&](int n) {
    auto c = conjugator(j, n, opts);
    return limit_matrix(multiply(c.minv, multiply(build(n), c.m)));
  });
}

PolyMatrix contract_twist_hat(const PairLabels& labels, const ContractionOptions& opts) {
  const Spin j1 = labels.first.j, j2 = labels.second.j;
  const MultiPoly z1 = colour_of(labels.first), z2 = colour_of(labels.second);
  if (opts.full_product)
    return contract_pair(j1, j2, [&](int n) { return twist_hat_inverse(j1, z1, j2, z2, n); }, opts).body;
  auto f1 = contract_single(j1, [&](int n) { return twist_hat_inverse_factors(j1, z1, j2, z2, n).first; }, opts);
  auto f2 = contract_single(j2, [&](int n) { return twist_hat_inverse_factors(j1, z1, j2, z2, n).second; }, opts);
  return kron(f1.body, f2.body);
}

RMatrix contract_R(const PairLabels& labels, const ContractionOptions& opts) {
  const Spin j1 = labels.first.j, j2 = labels.second.j;
  RMatrix r{{}, labels, Provenance::contracted};
  if (opts.full_product) {
    r.body = contract_pair(j1, j2, [&](int n) {
               SeriesMatrix rq = eval_universal_Rq(j1, j2, n);
               if (!labels.coloured()) return rq;
               auto f = twist_hat_inverse(j1, colour_of(labels.first), j2, colour_of(labels.second), n);
               return multiply(f, multiply(rq, f));
             }, opts).body;
    return r;
  }
  r.body = adaptive(pair_start(j1, j2), opts, [&](int n) { return contract_rq_factorised(j1, j2, n, opts); }).body;
  if (labels.coloured()) {
    PolyMatrix f = contract_twist_hat(labels, opts);
    r.body = multiply(f, multiply(r.body, f));
  }
  return r;
}

PolyMatrix twist_inverse(const PairLabels& labels) {
  auto t1 = build_t_tilde(labels.first.j);
  auto t2 = build_t_tilde(labels.second.j);
  return kron(unipotent_power(t1, -(kAlpha * colour_of(labels.second))),
              unipotent_power(t2, kAlpha * colour_of(labels.first)));
}

RMatrix eval_universal_Rh(const PairLabels& labels) {
  auto r1 = build_h_rep(labels.first.j);
  auto r2 = build_h_rep(labels.second.j);
  const auto &x1 = r1["X"], &t1 = r1["T"], &x2 = r2["X"], &t2 = r2["T"];
  const auto th1 = multiply(t1, r1["H"]), th2 = multiply(t2, r2["H"]);
  RMatrix r{{}, labels, Provenance::direct_universal};
  if (!labels.coloured()) {
    r.body = multiply(nilpotent_exp(-kH * kron(x1, th2)), nilpotent_exp(kH * kron(th1, x2)));
    return r;
  }
  const MultiPoly z1 = colour_of(labels.first), z2 = colour_of(labels.second);
  const auto i1 = PolyMatrix::identity(x1.rows()), i2 = PolyMatrix::identity(x2.rows());
  // Z takes the value z1 on the first factor and z2 on the second.
  auto e1 = nilpotent_exp(MultiPoly(-2) * kH * kAlpha * (z2 * kron(x1, i2) - z1 * kron(i1, x2)));
  auto e2 = nilpotent_exp(-kH * (kron(x1, th2) + kAlpha * z1 * kron(x1, multiply(t2, t2) - i2)));
  auto e3 = nilpotent_exp(kH * (kron(th1, x2) - kAlpha * z2 * kron(multiply(t1, t1) - i1, x2)));
  r.body = multiply(e1, multiply(e2, e3));
  return r;
}

RMatrix twist_conjugated_R(const PairLabels& labels) {
  PairLabels plain{{labels.first.j, std::nullopt}, {labels.second.j, std::nullopt}};
  RMatrix r = eval_universal_Rh(plain);
  r.labels = labels;
  r.provenance = Provenance::twist_conjugated;
  if (labels.coloured()) {
    PolyMatrix f = twist_inverse(labels);
    r.body = multiply(f, multiply(r.body, f));
  }
  return r;
}

RMatrix build_R(const PairLabels& labels, RSource source) {
  switch (source) {
    case RSource::contracted: return contract_R(labels);
    case RSource::direct: return eval_universal_Rh(labels);
    case RSource::twist: return twist_conjugated_R(labels);
  }
  throw std::invalid_argument("unknown R source");
}

RSource parse_r_source(std::string_view text) {
  if (text == "contracted" || text == "contract") return RSource::contracted;
  if (text == "direct" || text == "universal") return RSource::direct;
  if (text == "twist") return RSource::twist;
  throw std::invalid_argument("unknown R source: " + std::string(text));
}

PolyMatrix coproduct(const PairLabels& labels, std::string_view generator) {
  auto r1 = build_h_rep(labels.first.j);
  auto r2 = build_h_rep(labels.second.j);
  const std::size_t d1 = r1["X"].rows(), d2 = r2["X"].rows();
  const auto i1 = PolyMatrix::identity(d1), i2 = PolyMatrix::identity(d2);
  const MultiPoly z1 = colour_of(labels.first), z2 = colour_of(labels.second);
  const auto &t1 = r1["T"], &ti1 = r1["Tinv"], &t2 = r2["T"], &ti2 = r2["Tinv"];
  if (generator == "X") return kron(r1["X"], i2) + kron(i1, r2["X"]);
  if (generator == "Z") return (z1 + z2) * PolyMatrix::identity(d1 * d2);
  if (generator == "H")
    return kron(r1["H"], t2) + kron(ti1, r2["H"]) +
           kAlpha * (z1 * kron(ti1, t2 - ti2) - z2 * kron(t1 - ti1, t2));
  if (generator == "Y")
    return kron(r1["Y"], t2) + kron(ti1, r2["Y"]) +
           kAlpha * kH * (z2 * kron(r1["H"], t2) - z1 * kron(ti1, r2["H"])) -
           MultiPoly(Rational(1, 2)) * kAlpha * kAlpha * kH *
               (z1 * z1 * kron(ti1, t2 - ti2) + z2 * z2 * kron(t1 - ti1, t2));
  throw std::invalid_argument("unknown generator: " + std::string(generator));
}

PolyMatrix negate_h(const PolyMatrix& m) {
  return m.map([](const MultiPoly& p) { return p.substitute(Symbol::h, -kH); });
}

Report check_contract_equals_direct(const PairLabels& labels, const ContractionOptions& opts) {
  ReportBuilder rb("contract_equals_direct", labels.to_string());
  RMatrix c = contract_R(labels, opts);
  RMatrix d = eval_universal_Rh(labels);
  rb.compare(c.body, d.body);
  if (labels.coloured()) rb.note(std::string(kColouredConvention));
  return rb.finish();
}

Report check_twist_contraction(const PairLabels& labels) {
  ReportBuilder rb("twist_contraction", labels.to_string());
  PolyMatrix contracted = contract_twist_hat(labels);
  PolyMatrix powers = twist_inverse(labels);
  auto x1 = build_h_rep(labels.first.j)["X"], x2 = build_h_rep(labels.second.j)["X"];
  auto i1 = PolyMatrix::identity(x1.rows()), i2 = PolyMatrix::identity(x2.rows());
  // F^-1 = exp[-alpha h (X (x) Z - Z (x) X)]
  PolyMatrix direct = nilpotent_exp(-kAlpha * kH *
                                    (colour_of(labels.second) * kron(x1, i2) - colour_of(labels.first) * kron(i1, x2)));
  rb.compare(contracted, powers, "contracted vs unipotent powers");
  rb.compare(powers, direct, "unipotent powers vs exponential");
  return rb.finish();
}

Report check_coloured_routes(const PairLabels& labels) {
  ReportBuilder rb("coloured_routes", labels.to_string());
  rb.compare(twist_conjugated_R(labels).body, eval_universal_Rh(labels).body);
  rb.note(std::string(kColouredConvention));
  return rb.finish();
}

Report check_YBE(const Sector& s1, const Sector& s2, const Sector& s3, RSource source) {
  ReportBuilder rb("ybe", PairLabels{s1, s2}.to_string() + ";" + s3.to_string());
  const std::size_t d1 = s1.j.dim(), d2 = s2.j.dim(), d3 = s3.j.dim();
  const auto i1 = PolyMatrix::identity(d1), i2 = PolyMatrix::identity(d2), i3 = PolyMatrix::identity(d3);
  PolyMatrix r12 = kron(build_R({s1, s2}, source).body, i3);
  PolyMatrix r23 = kron(i1, build_R({s2, s3}, source).body);
  PolyMatrix r13 = multiply(kron(i1, flip_matrix<MultiPoly>(d3, d2)),
                            multiply(kron(build_R({s1, s3}, source).body, i2), kron(i1, flip_matrix<MultiPoly>(d2, d3))));
  rb.compare(multiply(r12, multiply(r13, r23)), multiply(r23, multiply(r13, r12)));
  return rb.finish();
}

namespace {

// P R' P with R' on V2 (x) V1 carrying the swapped labels.
PolyMatrix flipped(const PolyMatrix& swapped, std::size_t d1, std::size_t d2) {
  return multiply(flip_matrix<MultiPoly>(d2, d1), multiply(swapped, flip_matrix<MultiPoly>(d1, d2)));
}

}  // namespace

Report check_triangularity(const PairLabels& labels, RSource source) {
  ReportBuilder rb("triangularity", labels.to_string());
  const std::size_t d1 = labels.first.j.dim(), d2 = labels.second.j.dim();
  PolyMatrix r = build_R(labels, source).body;
  PolyMatrix r21 = flipped(build_R(labels.swapped(), source).body, d1, d2);
  rb.compare(multiply(r, r21), PolyMatrix::identity(d1 * d2));
  return rb.finish();
}

Report check_exchange_symmetry(const PairLabels& labels, RSource source) {
  ReportBuilder rb("exchange_symmetry", labels.to_string());
  const std::size_t d1 = labels.first.j.dim(), d2 = labels.second.j.dim();
  PolyMatrix r = build_R(labels, source).body;
  PolyMatrix other = flipped(negate_h(build_R(labels.swapped(), source).body), d1, d2);
  rb.compare(r, other);
  return rb.finish();
}

Report check_intertwiner(const PairLabels& labels, RSource source) {
  ReportBuilder rb("intertwiner", labels.to_string());
  const std::size_t d1 = labels.first.j.dim(), d2 = labels.second.j.dim();
  PolyMatrix r = build_R(labels, source).body;
  for (const char* g : {"X", "Y", "H", "Z"}) {
    PolyMatrix delta = coproduct(labels, g);
    PolyMatrix delta_op = flipped(coproduct(labels.swapped(), g), d1, d2);
    rb.compare(multiply(delta_op, r), multiply(r, delta), std::string("generator ") + g);
  }
  return rb.finish();
}

Report check_truncation_stability(const PairLabels& labels) {
  ReportBuilder rb("truncation_stability", labels.to_string());
  ContractionOptions once;
  once.confirm = false;
  const Spin j1 = labels.first.j, j2 = labels.second.j;
  auto first = adaptive(pair_start(j1, j2), once, [&](int n) { return contract_rq_factorised(j1, j2, n, once); });
  ContractionOptions later = once;
  later.trunc = first.order + 2;
  auto second = adaptive(pair_start(j1, j2), later, [&](int n) { return contract_rq_factorised(j1, j2, n, later); });
  rb.compare(first.body, second.body, "orders " + std::to_string(first.order) + " and " + std::to_string(second.order));
  if (labels.coloured()) {
    PolyMatrix f1 = contract_twist_hat(labels, once);
    once.trunc = 2 * static_cast<int>(std::max(j1.twice_j, j2.twice_j)) + 4;
    rb.compare(f1, contract_twist_hat(labels, once), "twist factor");
  }
  // A wrong eta must leave a pole behind.
  ContractionOptions wrong = once;
  wrong.trunc.reset();
  wrong.eta = [](int n) {
    LaurentScalar qm1 = series_exp(MultiPoly(1), n + 4) - LaurentScalar(1);
    return (LaurentScalar(kH) * (qm1 * qm1).inverse()).truncated(n);
  };
  try {
    adaptive(pair_start(j1, j2), wrong, [&](int n) { return contract_rq_factorised(j1, j2, n, wrong); });
    rb.compare_failed({0, 0, "finite limit", "pole survives limit", "wrong eta"});
  } catch (const PoleError& e) {
    rb.note(std::string("wrong eta rejected: ") + e.what());
  }
  return rb.finish();
}

}  // namespace jordan
