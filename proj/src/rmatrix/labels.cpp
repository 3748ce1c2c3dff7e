#include "jordan/rmatrix/labels.hpp"

#include <stdexcept>

namespace jordan {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

}  // namespace

namespace {
bool is_colour_symbol(Symbol s) { return s == Symbol::z || s == Symbol::z1 || s == Symbol::z2 || s == Symbol::z3; }
}  // namespace

MultiPoly parse_colour(std::string_view text) {
  text = trim(text);
  if (text.starts_with("sym:")) {
    auto s = parse_symbol(text.substr(4));
    if (!s || !is_colour_symbol(*s)) throw std::invalid_argument("unknown colour symbol: " + std::string(text.substr(4)));
    return MultiPoly(*s);
  }
  if (auto s = parse_symbol(text)) {
    if (!is_colour_symbol(*s)) throw std::invalid_argument("not a colour symbol: " + std::string(text));
    return MultiPoly(*s);
  }
  try {
    return MultiPoly(parse_rational(text));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("invalid colour: " + std::string(text));
  }
}

std::string colour_to_string(const MultiPoly& z) {
  if (z.is_constant()) return to_string(z.constant_term());
  if (z.size() == 1 && z.leading_term().coeff == 1 && z.leading_term().mono.total_degree() == 1)
    for (Symbol s : kAllSymbols)
      if (z.leading_term().mono.exponent(s) == 1) return "sym:" + std::string(symbol_name(s));
  return z.to_string();
}

std::vector<Sector> parse_sectors(std::string_view text) {
  std::vector<Sector> out;
  for (auto part : split(text, ';')) {
    if (part.empty()) throw std::invalid_argument("empty label sector");
    Sector sec;
    bool have_j = false;
    std::size_t pos = 0;
    for (auto item : split(part, ',')) {
      if (item.empty()) throw std::invalid_argument("empty label item in: " + std::string(part));
      auto eq = item.find('=');
      std::string_view key, value = item;
      if (eq != std::string_view::npos) {
        key = trim(item.substr(0, eq));
        value = trim(item.substr(eq + 1));
      }
      bool is_spin = key.empty() ? pos == 0 : key.front() == 'j';
      bool is_colour = key.empty() ? pos == 1 : key.front() == 'z';
      if (is_spin) {
        sec.j = Spin::parse(value);
        have_j = true;
      } else if (is_colour) {
        sec.z = parse_colour(value);
      } else {
        throw std::invalid_argument("unknown label item: " + std::string(item));
      }
      ++pos;
    }
    if (!have_j) throw std::invalid_argument("label sector without spin: " + std::string(part));
    out.push_back(std::move(sec));
  }
  return out;
}

std::string Sector::to_string() const {
  std::string s = j.to_string();
  if (z) s += "," + colour_to_string(*z);
  return s;
}

std::string PairLabels::to_string() const { return first.to_string() + ";" + second.to_string(); }

}  // namespace jordan
