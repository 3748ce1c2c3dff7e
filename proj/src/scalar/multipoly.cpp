#include "jordan/scalar/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jordan {

namespace {

bool term_order(const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.mono > b.mono; }

// Sorts by descending monomial, merges duplicates and drops zeros.
void canonicalize(std::vector<MultiPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_order);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      terms[i].coeff += terms[j].coeff;
      ++j;
    }
    if (sgn(terms[i].coeff) != 0) {
      if (out != i) terms[out] = std::move(terms[i]);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

MultiPoly::MultiPoly(int c) {
  if (c != 0) terms_.push_back({Monomial{}, Rational(c)});
}

MultiPoly::MultiPoly(const Rational& c) {
  if (sgn(c) == 0) return;
  terms_.push_back({Monomial{}, c});
  terms_.back().coeff.canonicalize();
}

MultiPoly::MultiPoly(Symbol s) { terms_.push_back({Monomial::of(s), Rational(1)}); }

MultiPoly::MultiPoly(Monomial m, Rational c) {
  c.canonicalize();
  if (sgn(c) != 0) terms_.push_back({m, std::move(c)});
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

unsigned MultiPoly::degree_in(Symbol s) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(s));
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

MultiPoly MultiPoly::coefficient(Symbol s, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exponent(s) != k) continue;
    Monomial m = t.mono;
    m.set(s, 0);
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::truncated(Symbol s, unsigned max_degree) const {
  MultiPoly p;
  for (const auto& t : terms_)
    if (t.mono.exponent(s) <= max_degree) p.terms_.push_back(t);
  return p;
}

MultiPoly MultiPoly::substitute(Symbol s, const MultiPoly& value) const {
  unsigned deg = degree_in(s);
  if (deg == 0) return *this;
  std::vector<MultiPoly> powers{MultiPoly(1)};
  for (unsigned k = 1; k <= deg; ++k) powers.push_back(powers.back() * value);
  MultiPoly result;
  std::vector<Term> untouched;
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(s);
    if (e == 0) {
      untouched.push_back(t);
      continue;
    }
    Monomial m = t.mono;
    m.set(s, 0);
    result += MultiPoly(m, t.coeff) * powers[e];
  }
  result += from_terms(std::move(untouched));
  return result;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(1), base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void MultiPoly::add_scaled(const MultiPoly& o, const Rational& scale) {
  if (o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->mono > j->mono)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->mono > i->mono) {
      out.push_back({j->mono, j->coeff * scale});
      ++j;
    } else {
      Rational c = i->coeff + j->coeff * scale;
      if (sgn(c) != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (terms_.empty()) return *this = o;
  static const Rational kOne(1);
  add_scaled(o, kOne);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  static const Rational kMinusOne(-1);
  add_scaled(o, kMinusOne);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  const MultiPoly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const MultiPoly& large = a.terms_.size() <= b.terms_.size() ? b : a;
  MultiPoly r;
  if (small.terms_.size() == 1) {
    // Multiplication by a monomial preserves the term order.
    const auto& s = small.terms_[0];
    r.terms_.reserve(large.terms_.size());
    for (const auto& t : large.terms_) r.terms_.push_back({t.mono * s.mono, t.coeff * s.coeff});
    return r;
  }
  std::vector<MultiPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back({x.mono * y.mono, x.coeff * y.coeff});
  canonicalize(out);
  r.terms_ = std::move(out);
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("zero denominator");
  if (is_zero()) return MultiPoly{};
  const Term& lead = d.terms_.front();
  if (d.terms_.size() == 1) {
    MultiPoly q;
    Rational inv = 1 / lead.coeff;
    for (const auto& t : terms_) {
      if (!lead.mono.divides(t.mono)) return std::nullopt;
      q.terms_.push_back({lead.mono.quotient_of(t.mono), t.coeff * inv});
    }
    return q;
  }
  // Lex-order division: if d | *this every remainder leading term is
  // divisible by lt(d), so failure to divide proves non-divisibility.
  MultiPoly rem = *this;
  std::vector<Term> quot;
  std::size_t guard = 0;
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_.front();
    if (!lead.mono.divides(lt.mono)) return std::nullopt;
    Term qt{lead.mono.quotient_of(lt.mono), lt.coeff / lead.coeff};
    rem.add_scaled(MultiPoly(qt.mono, 1) * d, -qt.coeff);
    quot.push_back(std::move(qt));
    if (++guard > 1000000) throw std::runtime_error("division did not terminate");
  }
  return from_terms(std::move(quot));
}

Monomial MultiPoly::monomial_gcd() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = g.gcd(t.mono);
  return g;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = c == 1;
    if (!unit || t.mono.is_one()) os << c.get_str();
    bool need_star = !unit;
    for (auto s : kAllSymbols) {
      unsigned e = t.mono.exponent(s);
      if (e == 0) continue;
      if (need_star) os << "*";
      os << symbol_name(s);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly binomial(const MultiPoly& sigma, unsigned k) {
  MultiPoly r(1);
  for (unsigned i = 0; i < k; ++i) r *= (sigma - MultiPoly(static_cast<int>(i))) * Rational(1, i + 1);
  return r;
}

}  // namespace jordan
