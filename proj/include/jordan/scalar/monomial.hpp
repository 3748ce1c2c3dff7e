#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>

#include "jordan/scalar/symbol.hpp"

namespace jordan {

// Exponent vector over the fixed symbol set, packed one byte per symbol with
// h in the most significant byte so that integer comparison is lex order.
// Exponents are kept below 128 so sums never carry between bytes.
class Monomial {
public:
  static constexpr unsigned kMaxExponent = 127;

  constexpr Monomial() = default;

  static Monomial of(Symbol s, unsigned exponent = 1) {
    Monomial m;
    m.set(s, exponent);
    return m;
  }

  static Monomial from_exponents(const std::array<unsigned, kSymbolCount>& e) {
    Monomial m;
    for (std::size_t i = 0; i < kSymbolCount; ++i) m.set(kAllSymbols[i], e[i]);
    return m;
  }

  unsigned exponent(Symbol s) const {
    return static_cast<unsigned>((bits_ >> shift(s)) & 0xffu);
  }

  void set(Symbol s, unsigned exponent) {
    if (exponent > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    bits_ &= ~(std::uint64_t{0xff} << shift(s));
    bits_ |= std::uint64_t{exponent} << shift(s);
  }

  std::array<unsigned, kSymbolCount> exponents() const {
    std::array<unsigned, kSymbolCount> e{};
    for (std::size_t i = 0; i < kSymbolCount; ++i) e[i] = exponent(kAllSymbols[i]);
    return e;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (auto s : kAllSymbols) d += exponent(s);
    return d;
  }

  bool is_one() const { return bits_ == 0; }

  Monomial operator*(Monomial o) const {
    Monomial r;
    r.bits_ = bits_ + o.bits_;
    if (r.bits_ & kHighBits) throw std::overflow_error("monomial exponent overflow");
    return r;
  }

  bool divides(Monomial o) const {
    return (((o.bits_ | kHighBits) - bits_) & kHighBits) == kHighBits;
  }

  // Precondition: divides(o).
  Monomial quotient_of(Monomial o) const {
    Monomial r;
    r.bits_ = o.bits_ - bits_;
    return r;
  }

  Monomial gcd(Monomial o) const {
    Monomial r;
    for (auto s : kAllSymbols) r.set(s, std::min(exponent(s), o.exponent(s)));
    return r;
  }

  std::uint64_t bits() const { return bits_; }

  friend constexpr auto operator<=>(Monomial a, Monomial b) = default;

private:
  static constexpr std::uint64_t kHighBits = 0x8080808080808080ull;
  static constexpr unsigned shift(Symbol s) { return 8u * (7u - static_cast<unsigned>(s)); }

  std::uint64_t bits_ = 0;
};

}  // namespace jordan
