#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jordan/scalar/multipoly.hpp"
#include "jordan/sl2/spin.hpp"

namespace jordan {

// One tensor factor: a spin and, for coloured objects, the value of the
// central generator Z on it.
struct Sector {
  Spin j;
  std::optional<MultiPoly> z;

  bool coloured() const { return z.has_value(); }
  std::string to_string() const;
  friend bool operator==(const Sector&, const Sector&) = default;
};

struct PairLabels {
  Sector first;
  Sector second;

  bool coloured() const { return first.coloured() || second.coloured(); }
  PairLabels swapped() const { return {second, first}; }
  std::string to_string() const;
};

// Parses "j1=1/2,z1=sym:z1;j2=1,z2=sym:z2" or the short form
// "1/2,z1;1,z2;1/2,z3". A colour is sym:<name>, a bare symbol name or a
// rational; missing colours leave the sector uncoloured.
std::vector<Sector> parse_sectors(std::string_view text);
MultiPoly parse_colour(std::string_view text);
std::string colour_to_string(const MultiPoly& z);

}  // namespace jordan
