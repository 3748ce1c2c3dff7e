#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace jordan {

// The closed symbol set. Order matters: it fixes the lex order of monomials
// and the layout of serialized exponent vectors.
enum class Symbol : std::uint8_t { h = 0, alpha, z, z1, z2, z3, sigma };

inline constexpr std::size_t kSymbolCount = 7;

inline constexpr std::array<Symbol, kSymbolCount> kAllSymbols = {
    Symbol::h, Symbol::alpha, Symbol::z, Symbol::z1, Symbol::z2, Symbol::z3, Symbol::sigma};

inline constexpr std::size_t index_of(Symbol s) { return static_cast<std::size_t>(s); }

std::string_view symbol_name(Symbol s);
std::string_view symbol_latex(Symbol s);
std::optional<Symbol> parse_symbol(std::string_view name);

}  // namespace jordan
