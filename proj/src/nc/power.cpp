#include "jordan/nc/power.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jordan {

namespace {

using Square = std::array<std::array<MultiPoly, 4>, 4>;

MultiPoly det4(const Square& m) {
  std::array<int, 4> p{0, 1, 2, 3};
  MultiPoly r;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    MultiPoly t(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < 4 && !t.is_zero(); ++i) t *= m[i][static_cast<std::size_t>(p[i])];
    r += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return r;
}

// The word a^n x d^n sorted, where x D^n first shows up.
Word pivot(char x, unsigned n) {
  Word w = std::string(n, 'a') + x + std::string(n, 'd');
  std::sort(w.begin(), w.end());
  return w;
}

const std::string kLetters = "abcd";

}  // namespace

HPoly PowerCommutation::image(char x, const MultiPoly& sigma) const {
  return images[static_cast<std::size_t>(letter_index(x))].map_coeffs(
      [&](const MultiPoly& c) { return c.substitute(Symbol::sigma, sigma); });
}

HPoly PowerCommutation::apply(const HPoly& p, const MultiPoly& sigma, const HSystem& sys) const {
  std::array<HPoly, 4> im;
  for (std::size_t i = 0; i < 4; ++i) im[i] = image(letter(static_cast<int>(i)), sigma);
  return sys.normal_order(p.substitute_letters(im));
}

std::array<HPoly, 4> integer_power_images(const HSystem& sys, const HPoly& D, unsigned n) {
  HPoly dn(1);
  for (unsigned k = 0; k < n; ++k) dn = sys.normal_order(dn * D);
  std::array<HPoly, 4> cols;
  for (std::size_t g = 0; g < 4; ++g) cols[g] = sys.normal_order(dn * HPoly::gen(kLetters[g]));
  Square m;
  for (std::size_t w = 0; w < 4; ++w)
    for (std::size_t g = 0; g < 4; ++g) m[w][g] = cols[g].coefficient(pivot(kLetters[w], n));
  MultiPoly det = det4(m);
  if (det.is_zero()) throw std::runtime_error("power commutation: singular pivot system");
  std::array<HPoly, 4> out;
  for (std::size_t x = 0; x < 4; ++x) {
    HPoly lhs = sys.normal_order(HPoly::gen(kLetters[x]) * dn);
    HPoly y;
    for (std::size_t g = 0; g < 4; ++g) {
      Square mg = m;
      for (std::size_t w = 0; w < 4; ++w) mg[w][g] = lhs.coefficient(pivot(kLetters[w], n));
      auto q = det4(mg).divide_exact(det);
      if (!q) throw std::runtime_error("power commutation: non-polynomial solution");
      y.add(Word(1, kLetters[g]), *q);
    }
    HPoly rhs;
    for (std::size_t g = 0; g < 4; ++g) rhs += y.coefficient(Word(1, kLetters[g])) * cols[g];
    if (!(lhs == rhs))
      throw std::runtime_error(std::string("power commutation: ") + kLetters[x] + " D^" + std::to_string(n) +
                               " is not D^" + std::to_string(n) + " times a linear form");
    out[x] = std::move(y);
  }
  return out;
}

PowerFit fit_power_commutation(const HSystem& sys, const HPoly& D) {
  ReportBuilder rb("power-commutation", std::string(to_string(sys.alphabet())));
  constexpr unsigned kFit = 4;
  std::array<std::array<HPoly, 4>, kFit> samples;
  for (unsigned n = 1; n <= kFit; ++n) samples[n - 1] = integer_power_images(sys, D, n);
  const MultiPoly sigma(Symbol::sigma);
  PowerFit fit;
  for (std::size_t x = 0; x < 4; ++x) {
    HPoly p;
    for (unsigned n = 1; n <= kFit; ++n) {
      MultiPoly basis(1);
      for (unsigned m = 1; m <= kFit; ++m) {
        if (m == n) continue;
        Rational inv(1, static_cast<int>(n) - static_cast<int>(m));
        inv.canonicalize();
        basis *= (sigma - MultiPoly(static_cast<int>(m))) * inv;
      }
      p += HPoly(basis) * samples[n - 1][x];
    }
    fit.rules.images[x] = p;
  }
  auto check = integer_power_images(sys, D, kFit + 1);
  for (std::size_t x = 0; x < 4; ++x) {
    rb.compare_value(fit.rules.image(kLetters[x], MultiPoly(static_cast<int>(kFit + 1))), check[x],
                     std::string("sigma=5, x=") + kLetters[x]);
    rb.compare_value(fit.rules.image(kLetters[x], MultiPoly(0)), HPoly::gen(kLetters[x]),
                     std::string("sigma=0, x=") + kLetters[x]);
  }
  rb.note("fit at sigma = 1..4, verified at sigma = 5");
  fit.report = rb.finish();
  return fit;
}

const PowerCommutation& jordanian_power_commutation() {
  static const PowerCommutation rules = [] {
    auto fit = fit_power_commutation(jordanian_system(), jordanian_determinant());
    if (!fit.report.ok()) throw std::runtime_error("power commutation fit failed: " + fit.report.detail);
    return fit.rules;
  }();
  return rules;
}

HPoly commute_past_power(char x, const MultiPoly& sigma) { return jordanian_power_commutation().image(x, sigma); }

QPoly hat_commute_past_power(char x, const MultiPoly& sigma, int order, const MultiPoly& alpha) {
  switch (x) {
    case 'b': return q_power(2 * alpha * sigma, order) * QPoly::gen('b');
    case 'c': return q_power(-2 * alpha * sigma, order) * QPoly::gen('c');
    default: return QPoly::gen(x);
  }
}

Report check_hat_power_commutation(int order, unsigned max_n) {
  ReportBuilder rb("power-commutation", "hat, order " + std::to_string(order));
  auto sys = hat_system(order);
  QPoly D = hat_determinant(order);
  QPoly dn(1);
  for (unsigned n = 1; n <= max_n; ++n) {
    dn = sys.normal_order(dn * D);
    for (char x : kLetters) {
      auto lhs = sys.normal_order(QPoly::gen(x) * dn);
      auto rhs = sys.normal_order(dn * hat_commute_past_power(x, MultiPoly(static_cast<int>(n)), order));
      rb.compare_value(lhs, rhs, std::string(1, x) + " D^" + std::to_string(n));
    }
  }
  return rb.finish();
}

}  // namespace jordan
