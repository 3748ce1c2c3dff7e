#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include "jordan/scalar/rational.hpp"

namespace jordan {

// Spin j stored as 2j.
struct Spin {
  unsigned twice_j = 0;

  static constexpr Spin from_twice(unsigned t) { return Spin{t}; }
  static Spin parse(std::string_view text);  // "1/2", "1", "3/2", "0.5" rejected

  std::size_t dim() const { return twice_j + 1; }
  Rational value() const { return canonical(Rational(twice_j, 2)); }
  // Weight m of basis index i (row 0 <-> m = j).
  Rational weight(std::size_t i) const {
    return canonical(Rational(static_cast<long>(twice_j) - 2 * static_cast<long>(i), 2));
  }
  // 2m, the J0 eigenvalue of basis index i.
  long twice_weight(std::size_t i) const { return static_cast<long>(twice_j) - 2 * static_cast<long>(i); }

  std::string to_string() const;

  friend constexpr auto operator<=>(Spin, Spin) = default;
};

inline constexpr Spin kHalf{1};
inline constexpr Spin kOne{2};
inline constexpr Spin kThreeHalves{3};
inline constexpr Spin kTwo{4};
inline constexpr Spin kFiveHalves{5};

}  // namespace jordan
