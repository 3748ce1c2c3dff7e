#include "jordan/io/latex.hpp"

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>
#include <sstream>

namespace jordan {

namespace {

std::string rational_latex(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string power(std::string_view base, unsigned e) {
  std::string s(base);
  if (e > 1) s += "^{" + std::to_string(e) + "}";
  return s;
}

std::string mono_latex(const Monomial& m) {
  std::string s;
  for (auto sym : kAllSymbols)
    if (unsigned e = m.exponent(sym)) s += power(symbol_latex(sym), e) + " ";
  if (!s.empty()) s.pop_back();
  return s;
}

// c * mono with sign handling; first == leading term of the sum.
void term(std::ostringstream& os, const Rational& c, const std::string& mono, bool first) {
  Rational a = abs(c);
  if (sgn(c) < 0) os << (first ? "-" : " - ");
  else if (!first) os << " + ";
  if (a != 1 || mono.empty()) os << rational_latex(a);
  if (!mono.empty()) os << (a != 1 ? " " : "") << mono;
}

std::string join(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& x : parts)
    if (!x.empty()) s += (s.empty() ? "" : " ") + x;
  return s;
}

// Ascending order: constant first.
std::string plain(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    term(os, it->coeff, mono_latex(it->mono), first);
    first = false;
  }
  return os.str();
}

// One h^k group as a sign and an unsigned body.
std::pair<bool, std::string> group_latex(unsigned k, const MultiPoly& g) {
  const std::string hk = k ? power("h", k) : "";
  if (g.size() == 1) {
    const auto& t = g.leading_term();
    Rational a = abs(t.coeff);
    std::string m = mono_latex(t.mono);
    bool bare = hk.empty() && m.empty();
    return {sgn(t.coeff) < 0, join({a != 1 || bare ? rational_latex(a) : "", hk, m})};
  }
  Rational factor = g.constant_term();
  bool integral = factor != 0;
  for (const auto& t : g.terms())
    if (integral && Rational(t.coeff / factor).get_den() != 1) integral = false;
  if (!integral) {
    bool all_negative = true;
    for (const auto& t : g.terms()) all_negative = all_negative && sgn(t.coeff) < 0;
    factor = all_negative ? -1 : 1;
  }
  MultiPoly unit = g;
  unit *= Rational(1) / factor;
  Rational a = abs(factor);
  std::string inner = plain(unit);
  if (a != 1 || !hk.empty()) inner = "(" + inner + ")";
  return {sgn(factor) < 0, join({a != 1 ? rational_latex(a) : "", hk, inner})};
}

std::vector<std::pair<bool, std::string>> groups_latex(const MultiPoly& p) {
  std::map<unsigned, MultiPoly> groups;
  for (const auto& t : p.terms()) {
    Monomial rest = t.mono;
    unsigned k = rest.exponent(Symbol::h);
    rest.set(Symbol::h, 0);
    groups[k] += MultiPoly(rest, t.coeff);
  }
  std::vector<std::pair<bool, std::string>> out;
  for (const auto& [k, g] : groups) out.push_back(group_latex(k, g));
  return out;
}

template <class S, class F>
std::string array_latex(const Matrix<S>& m, F&& entry) {
  std::ostringstream os;
  os << "\\left(\\begin{array}{" << std::string(m.cols(), 'c') << "}\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (std::size_t k = 0; k < m.cols(); ++k) os << (k ? " & " : "") << entry(m(i, k));
    os << (i + 1 < m.rows() ? " \\\\\n" : "\n");
  }
  os << "\\end{array}\\right)";
  return os.str();
}

std::string sector_latex(const Sector& s) {
  std::string j = s.j.twice_j % 2 ? "\\frac{" + std::to_string(s.j.twice_j) + "}{2}" : std::to_string(s.j.twice_j / 2);
  return s.z ? j + "," + latex(*s.z) : j;
}

}  // namespace

std::string latex(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [neg, body] : groups_latex(p))
    s += (s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ")) + body;
  return s;
}

std::string latex(const HPoly& p) {
  if (p.terms().empty()) return "0";
  std::string s;
  for (const auto& [w, c] : p.terms()) {
    std::string word;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t k = i;
      while (k < w.size() && w[k] == w[i]) ++k;
      word += power(std::string(1, w[i]), static_cast<unsigned>(k - i));
      i = k;
    }
    auto groups = groups_latex(c);
    bool neg = false;
    std::string coeff;
    if (groups.size() == 1) {
      neg = groups[0].first;
      coeff = groups[0].second == "1" && !word.empty() ? "" : groups[0].second;
    } else {
      coeff = "(" + latex(c) + ")";
    }
    s += (s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ")) + join({coeff, word});
  }
  return s;
}

std::string latex(const PolyMatrix& m) {
  return array_latex(m, [](const MultiPoly& p) { return latex(p); });
}

std::string latex(const Matrix<HPoly>& m) {
  return array_latex(m, [](const HPoly& p) { return latex(p); });
}

std::string latex(const RMatrix& r) {
  const std::size_t d1 = r.labels.first.j.dim(), d2 = r.labels.second.j.dim();
  std::ostringstream head, defs;
  const std::string prime = r.labels.coloured() ? "'" : "";
  head << "R^{" << sector_latex(r.labels.first) << ";" << sector_latex(r.labels.second) << "} = \\left(\\begin{array}{"
       << std::string(d1, 'c') << "}\n";
  char name = 'A';
  for (std::size_t bi = 0; bi < d1; ++bi) {
    head << "  ";
    for (std::size_t bk = 0; bk < d1; ++bk) {
      PolyMatrix block(d2, d2);
      bool zero = true;
      for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t k = 0; k < d2; ++k) {
          block(i, k) = r.body(bi * d2 + i, bk * d2 + k);
          zero = zero && block(i, k).is_zero();
        }
      head << (bk ? " & " : "");
      if (zero) {
        head << "0";
        continue;
      }
      std::string label = std::string(1, name++) + prime;
      head << label;
      defs << label << " = " << latex(block) << "\n";
    }
    head << (bi + 1 < d1 ? " \\\\\n" : "\n");
  }
  head << "\\end{array}\\right)\n";
  return head.str() + defs.str();
}

std::string latex(const TMatrix& t) {
  return "T^{" + sector_latex({t.j, t.z}) + "} = D^{" + latex(t.prefactor.sigma) + "} " + latex(t.body) + "\n";
}

std::string latex(const RepMatrices<MultiPoly>& r) {
  std::string s;
  for (const auto& [name, m] : r.generators) s += name + " = " + latex(m) + "\n";
  return s;
}

std::string latex(const TwistSeries& g) {
  std::string s;
  for (std::size_t k = 0; k < g.terms.size(); ++k) s += "G_{" + std::to_string(k) + "} = " + latex(g.terms[k]) + "\n";
  return s;
}

}  // namespace jordan
