#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "jordan/scalar/laurent.hpp"
#include "jordan/scalar/multipoly.hpp"

namespace jordan {

// Which copy of the four generators a polynomial is written in. All three
// use the order a < b < c < d and store letters as 'a'..'d'.
enum class Alphabet { jordanian, hat, tilde };

std::string_view to_string(Alphabet a);
Alphabet parse_alphabet(std::string_view text);

// A word in the generators, one char per letter.
using Word = std::string;

inline int letter_index(char x) { return x - 'a'; }
inline char letter(int i) { return static_cast<char>('a' + i); }
inline bool is_normal_word(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

// Weak zero test on coefficients: a truncated series counts as zero when no
// known coefficient survives. Structural zeros (dropped from NCPoly) use
// is_zero() instead.
inline bool vanishes(const MultiPoly& c) { return c.is_zero(); }
inline bool vanishes(const LaurentScalar& c) { return c.is_zero(); }

template <class C>
class NCPoly {
public:
  using Terms = std::map<Word, C>;

  NCPoly() = default;
  NCPoly(C c) { add(Word{}, c); }  // NOLINT(google-explicit-constructor)
  NCPoly(int c) : NCPoly(C(c)) {}  // NOLINT(google-explicit-constructor)

  static NCPoly word(Word w, C c = C(1)) {
    NCPoly p;
    p.add(std::move(w), c);
    return p;
  }
  static NCPoly gen(char x) { return word(Word(1, x)); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const Word& w, const C& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  C coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C() : it->second;
  }

  bool is_normal_ordered() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_normal_word(t.first); });
  }

  // Every coefficient vanishes (weakly, for truncated series).
  bool vanishes() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return jordan::vanishes(t.second); });
  }

  NCPoly operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  // Concatenation product; the result is not normal-ordered.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) r.add(u + v, cu * cv);
    return r;
  }
  friend NCPoly operator*(const C& s, const NCPoly& a) {
    NCPoly r;
    if (is_zero(s)) return r;
    for (const auto& [w, c] : a.terms_) r.add(w, s * c);
    return r;
  }

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return (a - b).vanishes(); }

  template <class F>
  auto map_coeffs(F&& f) const -> NCPoly<decltype(f(std::declval<const C&>()))> {
    NCPoly<decltype(f(std::declval<const C&>()))> r;
    for (const auto& [w, c] : terms_) r.add(w, f(c));
    return r;
  }

  // The algebra map sending letter x to images[x]; not normal-ordered.
  NCPoly substitute_letters(const std::array<NCPoly, 4>& images) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
      NCPoly t(c);
      for (char x : w) t = t * images[static_cast<std::size_t>(letter_index(x))];
      r += t;
    }
    return r;
  }

  NCPoly pow(unsigned n) const {
    NCPoly r(1);
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

  std::string to_string() const;

private:
  Terms terms_;
};

template <class C>
bool is_zero(const NCPoly<C>& p) {
  return p.empty();
}

std::string coeff_to_string(const MultiPoly& c);
std::string coeff_to_string(const LaurentScalar& c);

template <class C>
std::string NCPoly<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + coeff_to_string(c) + ")";
    if (!w.empty()) s += "*" + w;
  }
  return s;
}

using HPoly = NCPoly<MultiPoly>;
using QPoly = NCPoly<LaurentScalar>;

// Elements of A (x) A: pairs of words with a common coefficient.
template <class C>
class TensorPoly {
public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, C>;

  TensorPoly() = default;
  static TensorPoly pure(const NCPoly<C>& x, const NCPoly<C>& y) {
    TensorPoly r;
    for (const auto& [u, cu] : x.terms())
      for (const auto& [v, cv] : y.terms()) r.add({u, v}, cu * cv);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const Key& k, const C& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  bool vanishes() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return jordan::vanishes(t.second); });
  }

  TensorPoly& operator+=(const TensorPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  TensorPoly& operator-=(const TensorPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  // (x (x) y)(x' (x) y') = xx' (x) yy'
  friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly r;
    for (const auto& [k1, c1] : a.terms_)
      for (const auto& [k2, c2] : b.terms_) r.add({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
    return r;
  }
  friend TensorPoly operator*(const C& s, const TensorPoly& a) {
    TensorPoly r;
    for (const auto& [k, c] : a.terms_) r.add(k, s * c);
    return r;
  }
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return (a - b).vanishes(); }

  // Swap of the legs.
  TensorPoly flipped() const {
    TensorPoly r;
    for (const auto& [k, c] : terms_) r.add({k.second, k.first}, c);
    return r;
  }

  template <class F>
  TensorPoly map_legs(F&& f) const {
    TensorPoly r;
    for (const auto& [k, c] : terms_) r += f(k.first, k.second, c);
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + coeff_to_string(c) + ")*" + (k.first.empty() ? "1" : k.first) + "(x)" +
           (k.second.empty() ? "1" : k.second);
    }
    return s;
  }

private:
  Terms terms_;
};

// Matrix coproduct Delta(T_ij) = sum_k T_ik (x) T_kj on words, extended
// multiplicatively and linearly. Letters a, b, c, d are T_00, T_01, T_10, T_11.
template <class C>
TensorPoly<C> coproduct(const NCPoly<C>& p) {
  auto delta_letter = [](char x) {
    int i = letter_index(x) / 2, j = letter_index(x) % 2;
    TensorPoly<C> r;
    for (int k = 0; k < 2; ++k) r.add({Word(1, letter(2 * i + k)), Word(1, letter(2 * k + j))}, C(1));
    return r;
  };
  TensorPoly<C> r;
  for (const auto& [w, c] : p.terms()) {
    TensorPoly<C> t;
    t.add({Word{}, Word{}}, c);
    for (char x : w) t = t * delta_letter(x);
    r += t;
  }
  return r;
}

}  // namespace jordan
