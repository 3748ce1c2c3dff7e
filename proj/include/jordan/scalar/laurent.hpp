#pragma once

#include <string>
#include <vector>

#include "jordan/scalar/ratfunc.hpp"

namespace jordan {

// Truncated Laurent series in t = log q with RatFunc coefficients. The series
// is known exactly through degree trunc_order(); everything above is unknown.
// Exact values (finite sums, e.g. q-free constants) carry trunc_order() ==
// kExact. A zero series still records how far it is known to vanish.
class LaurentScalar {
public:
  static constexpr int kExact = 1 << 28;

  LaurentScalar() = default;                   // exact zero
  LaurentScalar(int c) : LaurentScalar(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentScalar(RatFunc c);                    // NOLINT(google-explicit-constructor)
  LaurentScalar(MultiPoly c) : LaurentScalar(RatFunc(std::move(c))) {}  // NOLINT(google-explicit-constructor)

  static LaurentScalar monomial(RatFunc c, int degree, int trunc = kExact);
  static LaurentScalar from_coeffs(int min_deg, std::vector<RatFunc> coeffs, int trunc);
  static LaurentScalar zero(int trunc) { return from_coeffs(0, {}, trunc); }

  // Valuation of the stored part; trunc_order()+1 for a zero series.
  int min_deg() const { return coeffs_.empty() ? saturating_add(trunc_, 1) : min_deg_; }
  int trunc_order() const { return trunc_; }
  bool is_exact() const { return trunc_ >= kExact; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact_zero() const { return coeffs_.empty() && is_exact(); }
  // Degree of the last stored coefficient (min_deg()-1 for zero).
  int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }

  // Coefficient of t^k. Throws TruncationError if k > trunc_order().
  RatFunc coeff(int k) const;

  LaurentScalar truncated(int n) const;
  LaurentScalar substitute(Symbol s, const MultiPoly& value) const;

  // Multiplicative inverse. Inverting an exact multi-term series needs an
  // explicit target order.
  LaurentScalar inverse(int order_if_exact = kExact) const;

  LaurentScalar operator-() const;
  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o) { return *this = *this * o; }

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);

  // Agreement on all commonly known coefficients.
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b);

  std::string to_string() const;

  static int saturating_add(int a, int b);

private:
  void normalize();

  int min_deg_ = 0;
  std::vector<RatFunc> coeffs_;
  int trunc_ = kExact;
};

inline bool is_zero(const LaurentScalar& s) { return s.is_exact_zero(); }

// q^c = e^{c t} through t^order.
LaurentScalar series_exp(const MultiPoly& c, int order);

// Alias of the above, reads better at call sites building q-powers.
inline LaurentScalar q_power(const MultiPoly& c, int order) { return series_exp(c, order); }

// 1/s; the series must have a nonzero leading coefficient.
LaurentScalar series_invert(const LaurentScalar& s);

// eta = h / (q - 1), known through t^order.
LaurentScalar eta_series(int order);

// Symmetric q-integer [n]_q = (q^n - q^-n)/(q - q^-1) through t^order.
LaurentScalar q_integer(int n, int order);
LaurentScalar q_factorial(int n, int order);

// {n}_Q = (1 - Q^n)/(1 - Q) with Q = q^base_power.
LaurentScalar q_brace(int n, int base_power, int order);
LaurentScalar q_brace_factorial(int n, int base_power, int order);

// The coefficient of t^0 after checking no pole survives.
RatFunc limit_q_to_1(const LaurentScalar& s);

}  // namespace jordan
