#include "jordan/twist/twist.hpp"

#include <algorithm>
#include <stdexcept>

#include "jordan/rmatrix/rmatrix.hpp"

namespace jordan {

namespace {

const MultiPoly kH(Symbol::h);

void check_order(unsigned order) {
  if (order > kTwistOrder) throw std::invalid_argument("twist series is known through h^4 only");
}

std::string antipode_word(const std::string& w, Rational& sign) {
  // S0 is an antihomomorphism with S0(J) = -J.
  if (w.size() % 2) sign = -sign;
  return {w.rbegin(), w.rend()};
}

// mu (id (x) S0) or mu (S0 (x) id) applied to a word polynomial, evaluated in one representation.
PolyMatrix contract_legs(const TensorWordPoly& p, const Sl2Action& a, bool antipode_on_right) {
  PolyMatrix r(a.dim(), a.dim());
  for (const auto& [w, c] : p.terms()) {
    Rational sign = c;
    std::string left = w.left, right = w.right;
    if (antipode_on_right) right = antipode_word(right, sign);
    else left = antipode_word(left, sign);
    r += (MultiPoly(sign) * kH.pow(w.h_power)) * a.word(left + right);
  }
  return r;
}

}  // namespace

TensorWordPoly TensorWordPoly::one() { return scalar(Rational(1)); }

TensorWordPoly TensorWordPoly::scalar(const Rational& c, unsigned h_power) {
  TensorWordPoly p;
  p.add({h_power, "", ""}, c);
  return p;
}

TensorWordPoly TensorWordPoly::leg1(char letter) {
  TensorWordPoly p;
  p.add({0, std::string(1, letter), ""}, Rational(1));
  return p;
}

TensorWordPoly TensorWordPoly::leg2(char letter) {
  TensorWordPoly p;
  p.add({0, "", std::string(1, letter)}, Rational(1));
  return p;
}

void TensorWordPoly::add(const TensorWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned TensorWordPoly::max_h_power() const {
  unsigned m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.h_power);
  return m;
}

TensorWordPoly TensorWordPoly::truncated(unsigned max_h) const {
  TensorWordPoly r;
  for (const auto& [w, c] : terms_)
    if (w.h_power <= max_h) r.terms_.emplace(w, c);
  return r;
}

TensorWordPoly TensorWordPoly::flipped() const {
  TensorWordPoly r;
  for (const auto& [w, c] : terms_) r.add({w.h_power, w.right, w.left}, c);
  return r;
}

TensorWordPoly TensorWordPoly::coefficient(unsigned k) const {
  TensorWordPoly r;
  for (const auto& [w, c] : terms_)
    if (w.h_power == k) r.add({0, w.left, w.right}, c);
  return r;
}

TensorWordPoly& TensorWordPoly::operator+=(const TensorWordPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

TensorWordPoly& TensorWordPoly::operator-=(const TensorWordPoly& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

TensorWordPoly operator*(const TensorWordPoly& a, const TensorWordPoly& b) {
  TensorWordPoly r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_)
      r.add({wa.h_power + wb.h_power, wa.left + wb.left, wa.right + wb.right}, ca * cb);
  return r;
}

TensorWordPoly operator*(const Rational& c, TensorWordPoly a) {
  if (c == 0) return {};
  for (auto& [w, v] : a.terms_) v *= c;
  return a;
}

TensorWordPoly build_G_words() {
  using P = TensorWordPoly;
  const P r = P::leg1('0') * P::leg2('+') - P::leg1('+') * P::leg2('0');
  const P dp = P::leg1('+') + P::leg2('+');  // Delta_0(J+)
  const P d0 = P::leg1('0') + P::leg2('0');  // Delta_0(J0)
  const P pp = P::leg1('+') * P::leg2('+');
  const P pp_d0 = pp * d0;
  const P dp2 = dp * dp;
  const P r2 = r * r;
  const P p1sq = P::leg1('+') * P::leg1('+'), p2sq = P::leg2('+') * P::leg2('+');
  const P p1cu = p1sq * P::leg1('+'), p2cu = p2sq * P::leg2('+');

  P g1 = Rational(-1, 2) * r;
  P g2 = Rational(1, 8) * (r2 + Rational(2) * pp_d0);
  P g3 = Rational(-1, 48) * (r2 * r + Rational(6) * (pp_d0 * r) - Rational(4) * (dp2 * r));
  P diff = p1sq - p2sq;
  P g4 = Rational(1, 384) *
         (r2 * r2 - Rational(16) * (dp2 * r2) + Rational(12) * (pp_d0 * r2) + Rational(12) * (pp_d0 * pp_d0) +
          Rational(6) * (diff * diff * d0) + Rational(12) * (dp2 * (p1sq + p2sq) * d0) -
          Rational(8) * (dp * (p1cu + p2cu) * d0) - Rational(10) * (dp2 * dp2 * d0));
  P g = P::one();
  g += P::scalar(1, 1) * g1;
  g += P::scalar(1, 2) * g2;
  g += P::scalar(1, 3) * g3;
  g += P::scalar(1, 4) * g4;
  return g;
}

TensorWordPoly series_inverse(const TensorWordPoly& g, unsigned max_h) {
  TensorWordPoly x = g - TensorWordPoly::one();
  if (!x.coefficient(0).is_zero()) throw std::invalid_argument("series inverse needs g = 1 + O(h)");
  TensorWordPoly r = TensorWordPoly::one(), power = TensorWordPoly::one();
  for (unsigned n = 1; n <= max_h; ++n) {
    power = (Rational(-1) * (power * x)).truncated(max_h);
    r += power;
  }
  return r;
}

PolyMatrix Sl2Action::word(const std::string& w) const {
  PolyMatrix r = PolyMatrix::identity(dim());
  for (char c : w) {
    switch (c) {
      case '+': r = multiply(r, jp); break;
      case '0': r = multiply(r, j0); break;
      case '-': r = multiply(r, jm); break;
      default: throw std::invalid_argument("unknown letter in word");
    }
  }
  return r;
}

Sl2Action classical_action(Spin j) {
  auto c = build_classical_rep(j);
  return {c["J+"], c["J0"], c["J-"]};
}

Sl2Action tensor_action(const Sl2Action& a, const Sl2Action& b) {
  auto ia = PolyMatrix::identity(a.dim()), ib = PolyMatrix::identity(b.dim());
  auto d = [&](const PolyMatrix& x, const PolyMatrix& y) { return kron(x, ib) + kron(ia, y); };
  return {d(a.jp, b.jp), d(a.j0, b.j0), d(a.jm, b.jm)};
}

PolyMatrix evaluate(const TensorWordPoly& p, const Sl2Action& a, const Sl2Action& b) {
  std::map<std::string, PolyMatrix> left_cache, right_cache;
  auto cached = [](std::map<std::string, PolyMatrix>& cache, const Sl2Action& act, const std::string& w) -> const PolyMatrix& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, act.word(w)).first;
    return it->second;
  };
  PolyMatrix r(a.dim() * b.dim(), a.dim() * b.dim());
  for (const auto& [w, c] : p.terms())
    r += (MultiPoly(c) * kH.pow(w.h_power)) * kron(cached(left_cache, a, w.left), cached(right_cache, b, w.right));
  return r;
}

PolyMatrix TwistSeries::sum() const {
  PolyMatrix r = terms.front();
  for (unsigned k = 1; k < terms.size(); ++k) r += kH.pow(k) * terms[k];
  return r;
}

TwistSeries build_G(Spin j1, Spin j2) {
  auto words = build_G_words();
  auto a = classical_action(j1), b = classical_action(j2);
  TwistSeries s{j1, j2, {}};
  for (unsigned k = 0; k <= kTwistOrder; ++k) s.terms.push_back(evaluate(words.coefficient(k), a, b));
  return s;
}

std::pair<PolyMatrix, PolyMatrix> build_g(Spin j) {
  auto jp = build_classical_rep(j)["J+"];
  auto id = PolyMatrix::identity(j.dim());
  auto hjp = kH * jp;
  auto sq = id + multiply(hjp, hjp);
  auto g = id + multiply(hjp, nilpotent_sqrt(sq)) + multiply(hjp, hjp);
  auto ginv = id - multiply(hjp, unipotent_power(sq, MultiPoly(Rational(-1, 2))));
  return {g, ginv};
}

PolyMatrix truncate_h(const PolyMatrix& m, unsigned max_h) {
  return m.map([max_h](const MultiPoly& p) { return p.truncated(Symbol::h, max_h); });
}

namespace {

// Compares two h-series order by order through max_h, recording the first failing order.
void compare_orders(ReportBuilder& rb, const PolyMatrix& lhs, const PolyMatrix& rhs, unsigned max_h,
                    const std::string& what = {}) {
  for (unsigned k = 0; k <= max_h; ++k) {
    auto coeff = [k](const MultiPoly& p) { return p.coefficient(Symbol::h, k); };
    std::string where = (what.empty() ? "" : what + ", ") + "order h^" + std::to_string(k);
    if (!rb.compare(lhs.map(coeff), rhs.map(coeff), where)) return;
  }
}

std::string spins(std::initializer_list<Spin> js) {
  std::string s;
  for (Spin j : js) s += (s.empty() ? "" : ";") + j.to_string();
  return s;
}

}  // namespace

Report check_cocycle(Spin j1, Spin j2, Spin j3, unsigned order) {
  check_order(order);
  ReportBuilder rb("cocycle", spins({j1, j2, j3}));
  auto words = build_G_words().truncated(order);
  auto a = classical_action(j1), b = classical_action(j2), c = classical_action(j3);
  auto i1 = PolyMatrix::identity(a.dim()), i3 = PolyMatrix::identity(c.dim());
  PolyMatrix one_g = kron(i1, evaluate(words, b, c));
  PolyMatrix id_delta = evaluate(words, a, tensor_action(b, c));
  PolyMatrix g_one = kron(evaluate(words, a, b), i3);
  PolyMatrix delta_id = evaluate(words, tensor_action(a, b), c);
  compare_orders(rb, truncate_h(multiply(one_g, id_delta), order), truncate_h(multiply(g_one, delta_id), order), order);
  return rb.finish();
}

Report check_R_from_G(Spin j1, Spin j2, unsigned order) {
  check_order(order);
  ReportBuilder rb("r_from_g", spins({j1, j2}));
  auto words = build_G_words().truncated(order);
  auto a = classical_action(j1), b = classical_action(j2);
  PolyMatrix lhs = truncate_h(multiply(evaluate(words.flipped(), a, b), evaluate(series_inverse(words, order), a, b)), order);
  // R_h = exp(-h X (x) TH) exp(h TH (x) X) in the image of the nonlinear map.
  auto r1 = build_h_rep(j1), r2 = build_h_rep(j2);
  PolyMatrix rh = multiply(nilpotent_exp(-kH * kron(r1["X"], multiply(r2["T"], r2["H"]))),
                           nilpotent_exp(kH * kron(multiply(r1["T"], r1["H"]), r2["X"])));
  compare_orders(rb, lhs, truncate_h(rh, order), order);
  return rb.finish();
}

Report check_g_from_G(Spin j, unsigned order) {
  check_order(order);
  ReportBuilder rb("g_from_g", j.to_string());
  auto words = build_G_words().truncated(order);
  auto a = classical_action(j);
  auto [g, ginv] = build_g(j);
  compare_orders(rb, truncate_h(contract_legs(words, a, true), order), truncate_h(g, order), order, "g");
  return rb.finish();
}

Report check_g_closed_form(Spin j, unsigned order) {
  check_order(order);
  ReportBuilder rb("g_closed_form", j.to_string());
  auto [g, ginv] = build_g(j);
  auto id = PolyMatrix::identity(j.dim());
  rb.compare(multiply(g, ginv), id, "g g^-1");
  auto t = build_t_tilde(j);
  rb.compare(MultiPoly(2) * g, id + multiply(t, t), "2g = 1 + Ttilde^2");
  auto inv_words = series_inverse(build_G_words().truncated(order), order);
  compare_orders(rb, truncate_h(contract_legs(inv_words, classical_action(j), false), order), truncate_h(ginv, order),
                 order, "g^-1");
  return rb.finish();
}

Report check_twisted_coproduct(Spin j1, Spin j2, unsigned order) {
  check_order(order);
  ReportBuilder rb("twisted_coproduct", spins({j1, j2}));
  auto words = build_G_words().truncated(order);
  auto a = classical_action(j1), b = classical_action(j2);
  PolyMatrix g = evaluate(words, a, b);
  PolyMatrix ginv = evaluate(series_inverse(words, order), a, b);
  // Delta_0 applied to the image of the nonlinear map: the map evaluated on the tensor product.
  auto t = tensor_action(a, b);
  auto delta0 = jordanian_from_classical(t.jp, t.jm, t.j0);
  PairLabels labels{{j1, std::nullopt}, {j2, std::nullopt}};
  struct Case {
    const char* name;
    const PolyMatrix& classical;
  };
  const Case cases[] = {{"X", delta0.X}, {"Y", delta0.Y}, {"H", delta0.H}};
  for (const auto& c : cases)
    compare_orders(rb, truncate_h(coproduct(labels, c.name), order), truncate_h(multiply(g, multiply(c.classical, ginv)), order), order,
                   std::string("generator ") + c.name);
  return rb.finish();
}

}  // namespace jordan
