#include "jordan/nc/rewrite.hpp"

#include <iterator>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "jordan/errors.hpp"

namespace jordan {

std::string_view to_string(Alphabet a) {
  switch (a) {
    case Alphabet::jordanian: return "jordanian";
    case Alphabet::hat: return "hat";
    case Alphabet::tilde: return "tilde";
  }
  return "?";
}

Alphabet parse_alphabet(std::string_view text) {
  if (text == "jordanian") return Alphabet::jordanian;
  if (text == "hat") return Alphabet::hat;
  if (text == "tilde") return Alphabet::tilde;
  throw std::invalid_argument("unknown alphabet: " + std::string(text));
}

std::string coeff_to_string(const MultiPoly& c) { return c.to_string(); }
std::string coeff_to_string(const LaurentScalar& c) { return c.to_string(); }

namespace {

MultiPoly invert_coeff(const MultiPoly& c) {
  if (c.is_zero() || !c.is_constant()) throw std::invalid_argument("relation coefficient is not an invertible constant");
  return MultiPoly(Rational(1) / c.constant_term());
}

LaurentScalar invert_coeff(const LaurentScalar& c) { return c.inverse(); }

std::size_t default_budget(const Word& w) {
  return RewriteSystem<MultiPoly>::kBudgetFactor * (w.size() * w.size() + 1);
}

std::vector<std::size_t> descents(const Word& w) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) r.push_back(i);
  return r;
}

}  // namespace

template <class C>
struct RewriteSystem<C>::Cache {
  std::shared_mutex mu;
  std::unordered_map<Word, NCPoly<C>> normal;
};

template <class C>
RewriteSystem<C>::RewriteSystem(Alphabet alphabet, Rules rules)
    : alphabet_(alphabet), rules_(std::move(rules)), cache_(std::make_shared<Cache>()) {
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < y; ++x) {
      const auto& r = rules_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
      std::string pair{letter(y), letter(x)};
      if (!r) throw std::invalid_argument("rewrite system has no rule for " + pair);
      if (!r->is_normal_ordered())
        throw std::invalid_argument("replacement for " + pair + " is not normal-ordered: " + r->to_string());
    }
}

template <class C>
RewriteSystem<C> RewriteSystem<C>::from_relations(Alphabet alphabet, const std::vector<Relation<C>>& relations) {
  Rules rules;
  auto has_rule = [&](const Word& w) { return rules[letter_index(w[0])][letter_index(w[1])].has_value(); };
  for (const auto& rel : relations) {
    std::optional<Word> target;
    for (const auto& [w, c] : rel.poly.terms()) {
      if (w.size() != 2) throw std::invalid_argument("relation " + rel.name + " is not quadratic");
      if (w[0] <= w[1] || has_rule(w)) continue;
      if (target) throw std::invalid_argument("relation " + rel.name + " has two unresolved descending words");
      target = w;
    }
    if (!target) throw std::invalid_argument("relation " + rel.name + " has no new descending word");
    C kappa = rel.poly.coefficient(*target);
    NCPoly<C> rhs;
    C scale = -invert_coeff(kappa);
    for (const auto& [w, c] : rel.poly.terms()) {
      if (w == *target) continue;
      if (w[0] > w[1])
        rhs += (scale * c) * *rules[letter_index(w[0])][letter_index(w[1])];
      else
        rhs.add(w, scale * c);
    }
    rules[letter_index((*target)[0])][letter_index((*target)[1])] = std::move(rhs);
  }
  return RewriteSystem(alphabet, std::move(rules));
}

template <class C>
NCPoly<C> RewriteSystem<C>::reduce(NCPoly<C> p, const Strategy* pick, std::size_t budget) const {
  // Pending terms are processed largest word first so that terms which
  // later coincide are merged before being rewritten again.
  std::map<Word, C> pending;
  NCPoly<C> done;
  for (const auto& [w, c] : p.terms()) {
    if (is_normal_word(w))
      done.add(w, c);
    else
      pending.emplace(w, c);
  }
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = it->first;
    C c = std::move(it->second);
    pending.erase(it);
    if (++steps > budget)
      throw BudgetError("reduction budget exceeded after " + std::to_string(budget) + " steps (" +
                        std::string(to_string(alphabet_)) + " system)");
    auto ds = descents(w);
    std::size_t i = pick ? ds.at((*pick)(w, ds)) : ds.front();
    for (const auto& [v, rc] : rule(w[i], w[i + 1]).terms()) {
      Word n = w.substr(0, i) + v + w.substr(i + 2);
      C nc = c * rc;
      if (is_normal_word(n)) {
        done.add(n, nc);
        continue;
      }
      if (is_zero(nc)) continue;
      auto [slot, inserted] = pending.try_emplace(n, nc);
      if (!inserted) {
        slot->second += nc;
        if (is_zero(slot->second)) pending.erase(slot);
      }
    }
  }
  return done;
}

template <class C>
struct RewriteSystem<C>::Steps {
  std::size_t used = 0;
  std::size_t budget = 0;
  std::size_t depth = 0;

  void tick(Alphabet a) {
    if (++used > budget || depth > kMaxDepth)
      throw BudgetError("reduction budget exceeded after " + std::to_string(used) + " steps (" +
                        std::string(to_string(a)) + " system)");
  }
};

template <class C>
std::optional<NCPoly<C>> RewriteSystem<C>::cached(const Word& w) const {
  std::shared_lock lock(cache_->mu);
  auto it = cache_->normal.find(w);
  if (it == cache_->normal.end()) return std::nullopt;
  return it->second;
}

template <class C>
void RewriteSystem<C>::store(const Word& w, const NCPoly<C>& p) const {
  std::unique_lock lock(cache_->mu);
  cache_->normal.emplace(w, p);
}

template <class C>
NCPoly<C> RewriteSystem<C>::insert(char x, const Word& s, Steps& steps) const {
  // s is normal; returns the normal form of x s.
  if (s.empty() || x <= s[0]) return NCPoly<C>::word(x + s);
  Word key = x + s;
  if (auto hit = cached(key)) return *hit;
  steps.tick(alphabet_);
  ++steps.depth;
  const Word rest = s.substr(1);
  NCPoly<C> out;
  for (const auto& [v, rc] : rule(x, s[0]).terms()) {
    NCPoly<C> acc = NCPoly<C>::word(rest);
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      NCPoly<C> next;
      for (const auto& [t, c] : acc.terms()) next += c * insert(*it, t, steps);
      acc = std::move(next);
    }
    out += rc * acc;
  }
  --steps.depth;
  store(key, out);
  return out;
}

template <class C>
NCPoly<C> RewriteSystem<C>::normal_word(const Word& w, Steps& steps) const {
  if (is_normal_word(w)) return NCPoly<C>::word(w);
  if (auto hit = cached(w)) return *hit;
  NCPoly<C> out;
  const NCPoly<C> tail = normal_word(w.substr(1), steps);
  for (const auto& [t, c] : tail.terms()) out += c * insert(w[0], t, steps);
  store(w, out);
  return out;
}

template <class C>
NCPoly<C> RewriteSystem<C>::normal_order(const NCPoly<C>& p, std::size_t budget) const {
  NCPoly<C> r;
  for (const auto& [w, c] : p.terms()) {
    if (is_normal_word(w)) {
      r.add(w, c);
      continue;
    }
    Steps steps;
    steps.budget = budget ? budget : default_budget(w);
    r += c * normal_word(w, steps);
  }
  return r;
}

template <class C>
NCPoly<C> RewriteSystem<C>::reduce_with(const NCPoly<C>& p, const Strategy& pick, std::size_t budget) const {
  if (!budget)
    for (const auto& [w, c] : p.terms()) budget += default_budget(w);
  return reduce(p, &pick, budget);
}

template class RewriteSystem<MultiPoly>;
template class RewriteSystem<LaurentScalar>;

// ---------------------------------------------------------------------------
// The three presentations.

namespace {

const MultiPoly kH(Symbol::h);

template <class C>
NCPoly<C> g(char x) {
  return NCPoly<C>::gen(x);
}

template <class C>
NCPoly<C> w2(const char* w) {
  return NCPoly<C>::word(w);
}

}  // namespace

HPoly jordanian_determinant(const MultiPoly& alpha) {
  return w2<MultiPoly>("ad") - w2<MultiPoly>("bc") - HPoly(kH * (1 + alpha)) * w2<MultiPoly>("ac");
}

std::vector<Relation<MultiPoly>> jordanian_relations(const MultiPoly& alpha) {
  using P = HPoly;
  auto a = g<MultiPoly>('a'), b = g<MultiPoly>('b'), c = g<MultiPoly>('c'), d = g<MultiPoly>('d');
  P D = jordanian_determinant(alpha);
  P hp(kH * (1 + alpha)), hm(kH * (1 - alpha));
  // [c,d] comes before [a,d], which refers to dc.
  return {
      {"[a,b] = h(1+alpha)(a^2 - D)", commutator(a, b) - hp * (a * a - D)},
      {"[a,c] = -h(1-alpha)c^2", commutator(a, c) + hm * c * c},
      {"[b,d] = -h(1-alpha)(d^2 - D)", commutator(b, d) + hm * (d * d - D)},
      {"[c,d] = h(1+alpha)c^2", commutator(c, d) - hp * c * c},
      {"[a,d] = h(1+alpha)ac - h(1-alpha)dc", commutator(a, d) - hp * a * c + hm * d * c},
      {"[b,c] = -h(1+alpha)ac - h(1-alpha)cd", commutator(b, c) + hp * a * c + hm * c * d},
  };
}

HSystem jordanian_system(const MultiPoly& alpha) {
  return HSystem::from_relations(Alphabet::jordanian, jordanian_relations(alpha));
}

namespace {

LaurentScalar qp(const MultiPoly& e, int order) { return q_power(e, order); }

}  // namespace

QPoly hat_determinant(int order, const MultiPoly& alpha) {
  return w2<LaurentScalar>("ad") - QPoly(qp(-1 - alpha, order)) * w2<LaurentScalar>("bc");
}

std::vector<Relation<LaurentScalar>> hat_relations(int order, const MultiPoly& alpha) {
  using P = QPoly;
  auto a = g<LaurentScalar>('a'), b = g<LaurentScalar>('b'), c = g<LaurentScalar>('c'), d = g<LaurentScalar>('d');
  P lam(qp(alpha, order)), laminv(qp(-alpha, order));
  P qinv_laminv(qp(-1 - alpha, order)), qinv_lam(qp(-1 + alpha, order));
  P qdiff(qp(MultiPoly(-1), order) - qp(MultiPoly(1), order));
  return {
      {"ab = q^-1 lambda^-1 ba", a * b - qinv_laminv * b * a},
      {"ac = q^-1 lambda ca", a * c - qinv_lam * c * a},
      {"bd = q^-1 lambda db", b * d - qinv_lam * d * b},
      {"cd = q^-1 lambda^-1 dc", c * d - qinv_laminv * d * c},
      {"[a,d] = (q^-1 - q) lambda^-1 bc", commutator(a, d) - qdiff * laminv * b * c},
      {"lambda^-1 bc = lambda cb", laminv * b * c - lam * c * b},
  };
}

QSystem hat_system(int order, const MultiPoly& alpha) {
  return QSystem::from_relations(Alphabet::hat, hat_relations(order, alpha));
}

namespace {

struct TildeCoeffs {
  LaurentScalar p, r, eta, one;  // p = q^{-1-alpha}, r = q^{-1+alpha}
};

TildeCoeffs tilde_coeffs(int order, const MultiPoly& alpha) {
  return {qp(-1 - alpha, order), qp(-1 + alpha, order), eta_series(order), LaurentScalar(1)};
}

}  // namespace

QPoly tilde_determinant(int order, const MultiPoly& alpha) {
  auto k = tilde_coeffs(order, alpha);
  return w2<LaurentScalar>("ad") - QPoly(k.p) * w2<LaurentScalar>("bc") -
         QPoly(k.eta * (k.one - k.p)) * w2<LaurentScalar>("ac");
}

std::vector<Relation<LaurentScalar>> tilde_relations(int order, const MultiPoly& alpha) {
  using P = QPoly;
  auto k = tilde_coeffs(order, alpha);
  auto a = g<LaurentScalar>('a'), b = g<LaurentScalar>('b'), c = g<LaurentScalar>('c'), d = g<LaurentScalar>('d');
  P D = tilde_determinant(order, alpha);
  P p(k.p), r(k.r);
  P ep(k.eta * (k.one - k.p)), er(k.eta * (k.one - k.r));
  P e_q1ma(k.eta * (qp(1 - alpha, order) - k.one));
  P qdiff_qma((qp(MultiPoly(-1), order) - qp(MultiPoly(1), order)) * qp(-alpha, order));
  P qma(qp(-alpha, order)), qa(qp(alpha, order));
  P e_q_qma(k.eta * (qp(MultiPoly(1), order) - qp(-alpha, order)));
  P e_q_qa(k.eta * (qp(MultiPoly(1), order) - qp(alpha, order)));
  // dc is solved before [a,d] needs it.
  return {
      {"ab - q^{-1-alpha} ba = eta(1 - q^{-1-alpha})(a^2 - D)", a * b - p * b * a - ep * (a * a - D)},
      {"ac - q^{-1+alpha} ca = -eta(1 - q^{-1+alpha}) c^2", a * c - r * c * a + er * c * c},
      {"bd - q^{-1+alpha} db = -eta(1 - q^{-1+alpha})(d^2 - D)", b * d - r * d * b + er * (d * d - D)},
      {"cd - q^{-1-alpha} dc = eta(1 - q^{-1-alpha}) c^2", c * d - p * d * c - ep * c * c},
      {"[a,d] = eta(1 - q^{-1-alpha}) ac - eta(q^{1-alpha} - 1) dc + (q^-1 - q) q^-alpha bc",
       commutator(a, d) - ep * a * c + e_q1ma * d * c - qdiff_qma * b * c},
      {"q^-alpha bc - q^alpha cb = -eta(q - q^-alpha) ac - eta(q - q^alpha) cd",
       qma * b * c - qa * c * b + e_q_qma * a * c + e_q_qa * c * d},
  };
}

QSystem tilde_system(int order, const MultiPoly& alpha) {
  return QSystem::from_relations(Alphabet::tilde, tilde_relations(order, alpha));
}

QPoly substitute_hat_to_tilde(const QPoly& p, const QSystem& tilde, const LaurentScalar& eta) {
  auto a = g<LaurentScalar>('a'), b = g<LaurentScalar>('b'), c = g<LaurentScalar>('c'), d = g<LaurentScalar>('d');
  QPoly e(eta), e2(eta * eta);
  std::array<QPoly, 4> images = {a + e * c, b - e * (a - d) - e2 * c, c, d - e * c};
  return tilde.normal_order(p.substitute_letters(images));
}

HPoly limit_ncpoly(const QPoly& p) {
  return p.map_coeffs([](const LaurentScalar& s) { return limit_q_to_1(s).as_polynomial(); });
}

HPoly rho(const HPoly& p) {
  HPoly r;
  for (const auto& [w, c] : p.terms()) {
    Word v = w;
    for (char& x : v)
      if (x == 'a')
        x = 'd';
      else if (x == 'd')
        x = 'a';
    r.add(v, c.substitute(Symbol::alpha, -MultiPoly(Symbol::alpha)));
  }
  return r;
}

}  // namespace jordan
