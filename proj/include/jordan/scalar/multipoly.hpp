#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordan/scalar/monomial.hpp"
#include "jordan/scalar/rational.hpp"

namespace jordan {

// Sparse multivariate polynomial over Q in the fixed symbol set. Terms are
// kept sorted by descending monomial (lex, h first) with no zero coefficients.
class MultiPoly {
public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() = default;
  MultiPoly(int c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(Symbol s);  // NOLINT(google-explicit-constructor)
  MultiPoly(Monomial m, Rational c);

  // Takes unsorted terms, possibly with repeated monomials or zeros.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  Rational constant_term() const;
  const Term& leading_term() const { return terms_.front(); }

  unsigned degree_in(Symbol s) const;
  unsigned total_degree() const;
  // Coefficient of s^k, as a polynomial free of s.
  MultiPoly coefficient(Symbol s, unsigned k) const;
  // Drops every term whose s-degree exceeds max_degree.
  MultiPoly truncated(Symbol s, unsigned max_degree) const;

  MultiPoly substitute(Symbol s, const MultiPoly& value) const;
  MultiPoly pow(unsigned n) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(MultiPoly a, int c) { return a *= Rational(c); }
  friend MultiPoly operator*(int c, MultiPoly a) { return a *= Rational(c); }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  // Exact division. Returns nullopt if d does not divide *this.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
  // Content gcd of the monomials.
  Monomial monomial_gcd() const;

  std::string to_string() const;

private:
  void add_scaled(const MultiPoly& o, const Rational& scale);

  std::vector<Term> terms_;
};

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

// Generalized binomial coefficient binom(sigma, k) as a polynomial in the
// symbols of sigma.
MultiPoly binomial(const MultiPoly& sigma, unsigned k);

}  // namespace jordan
