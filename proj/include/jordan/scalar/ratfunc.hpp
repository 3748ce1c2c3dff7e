#pragma once

#include <string>

#include "jordan/scalar/multipoly.hpp"

namespace jordan {

// Quotient of two polynomials. Normal form: the denominator is monic in its
// lex-leading term, constant denominators are folded into the numerator and
// exact polynomial quotients are reduced to a denominator of 1. No
// multivariate gcd is taken, so equality is decided by cross-multiplication.
class RatFunc {
public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Symbol s) : num_(s), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(MultiPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }

  // Throws if the value is not a polynomial.
  const MultiPoly& as_polynomial() const;

  RatFunc inverse() const;
  RatFunc substitute(Symbol s, const MultiPoly& value) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;

private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }

}  // namespace jordan
