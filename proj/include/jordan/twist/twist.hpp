#pragma once

#include <map>
#include <string>
#include <vector>

#include "jordan/report.hpp"
#include "jordan/sl2/reps.hpp"

namespace jordan {

// Letters of a word in U(sl(2)): '+' = J+, '0' = J0, '-' = J-.
struct TensorWord {
  unsigned h_power = 0;
  std::string left;
  std::string right;
  friend auto operator<=>(const TensorWord&, const TensorWord&) = default;
};

// Element of U(sl(2)) (x) U(sl(2)) [[h]] as a combination of word pairs.
class TensorWordPoly {
public:
  static TensorWordPoly one();
  static TensorWordPoly leg1(char letter);
  static TensorWordPoly leg2(char letter);
  static TensorWordPoly scalar(const Rational& c, unsigned h_power = 0);

  const std::map<TensorWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned max_h_power() const;

  TensorWordPoly truncated(unsigned max_h) const;
  TensorWordPoly flipped() const;               // sigma: a (x) b -> b (x) a
  TensorWordPoly coefficient(unsigned k) const;  // the h^k part, with h power 0

  TensorWordPoly& operator+=(const TensorWordPoly& o);
  TensorWordPoly& operator-=(const TensorWordPoly& o);
  friend TensorWordPoly operator+(TensorWordPoly a, const TensorWordPoly& b) { return a += b; }
  friend TensorWordPoly operator-(TensorWordPoly a, const TensorWordPoly& b) { return a -= b; }
  friend TensorWordPoly operator*(const TensorWordPoly& a, const TensorWordPoly& b);
  friend TensorWordPoly operator*(const Rational& c, TensorWordPoly a);
  friend bool operator==(const TensorWordPoly&, const TensorWordPoly&) = default;

private:
  void add(const TensorWord& w, const Rational& c);
  std::map<TensorWord, Rational> terms_;
};

// The twist G through h^4 as printed, in word form.
TensorWordPoly build_G_words();
// 1 / (1 + x) mod h^{max_h+1} for x = g - 1 with no h^0 part.
TensorWordPoly series_inverse(const TensorWordPoly& g, unsigned max_h);

// Generators of a (possibly reducible) classical sl(2) representation.
struct Sl2Action {
  PolyMatrix jp, j0, jm;
  std::size_t dim() const { return j0.rows(); }
  PolyMatrix word(const std::string& w) const;
};

Sl2Action classical_action(Spin j);
// Delta_0 applied to the generators: J (x) 1 + 1 (x) J.
Sl2Action tensor_action(const Sl2Action& a, const Sl2Action& b);

// Evaluates a word polynomial on V_A (x) V_B, h kept as a symbol.
PolyMatrix evaluate(const TensorWordPoly& p, const Sl2Action& a, const Sl2Action& b);

struct TwistSeries {
  Spin j1, j2;
  std::vector<PolyMatrix> terms;  // terms[k] multiplies h^k
  PolyMatrix sum() const;
};

inline constexpr unsigned kTwistOrder = 4;

TwistSeries build_G(Spin j1, Spin j2);

// g = 1 + h J+ (1 + h^2 J+^2)^{1/2} + h^2 J+^2 and g^-1 = 1 - h J+ (1 + h^2 J+^2)^{-1/2}.
std::pair<PolyMatrix, PolyMatrix> build_g(Spin j);

// Drops every power of h above max_h.
PolyMatrix truncate_h(const PolyMatrix& m, unsigned max_h);

Report check_cocycle(Spin j1, Spin j2, Spin j3, unsigned order = 4);
Report check_R_from_G(Spin j1, Spin j2, unsigned order = 4);
Report check_g_from_G(Spin j, unsigned order = 4);
Report check_twisted_coproduct(Spin j1, Spin j2, unsigned order = 4);
// g g^-1 = 1 exactly, g = (1 + Ttilde^2)/2, and g^-1 = mu (S0 (x) id) G^-1 through the order.
Report check_g_closed_form(Spin j, unsigned order = 4);

}  // namespace jordan
