#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jordan {

// Arbitrary precision rational; gmp keeps it canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

// mpq_class(n, d) does not reduce; every fraction built from a pair goes
// through here.
inline Rational canonical(Rational r) {
  r.canonicalize();
  return r;
}

// Always "p/q", including q = 1.
std::string to_string(const Rational& r);

// Accepts "p/q" or "p". Throws std::invalid_argument on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace jordan
