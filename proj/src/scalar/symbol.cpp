#include "jordan/scalar/symbol.hpp"

namespace jordan {

namespace {
constexpr std::array<std::string_view, kSymbolCount> kNames = {"h", "alpha", "z", "z1", "z2", "z3", "sigma"};
constexpr std::array<std::string_view, kSymbolCount> kLatex = {"h", "\\alpha", "z", "z_1", "z_2", "z_3", "\\sigma"};
}  // namespace

std::string_view symbol_name(Symbol s) { return kNames[index_of(s)]; }
std::string_view symbol_latex(Symbol s) { return kLatex[index_of(s)]; }

std::optional<Symbol> parse_symbol(std::string_view name) {
  for (std::size_t i = 0; i < kSymbolCount; ++i)
    if (kNames[i] == name) return kAllSymbols[i];
  if (name == "a" || name == "\\alpha") return Symbol::alpha;
  return std::nullopt;
}

}  // namespace jordan
