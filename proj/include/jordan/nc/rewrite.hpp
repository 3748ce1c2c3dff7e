#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordan/nc/ncpoly.hpp"
#include "jordan/report.hpp"

namespace jordan {

// A named defining relation, stored as a polynomial that must vanish.
template <class C>
struct Relation {
  std::string name;
  NCPoly<C> poly;
};

// Rewrites every descending pair yx (y > x) into a normal-ordered
// replacement. Immutable after construction; normal forms of single words
// are cached behind a lock so concurrent use is safe.
template <class C>
class RewriteSystem {
public:
  using Rules = std::array<std::array<std::optional<NCPoly<C>>, 4>, 4>;  // rules[y][x], y > x

  RewriteSystem(Alphabet alphabet, Rules rules);

  // Solves the relations in the given order for their descending pair. Each
  // relation must contain exactly one descending word without a rule so far,
  // with an invertible coefficient.
  static RewriteSystem from_relations(Alphabet alphabet, const std::vector<Relation<C>>& relations);

  Alphabet alphabet() const { return alphabet_; }
  const NCPoly<C>& rule(char y, char x) const {
    return *rules_[static_cast<std::size_t>(letter_index(y))][static_cast<std::size_t>(letter_index(x))];
  }

  // budget == 0 picks the default: kBudgetFactor * sum over words of (len^2 + 1).
  NCPoly<C> normal_order(const NCPoly<C>& p, std::size_t budget = 0) const;

  // Rewrites one term at the descent chosen by pick(word, descents); used to
  // compare reduction strategies.
  using Strategy = std::function<std::size_t(const Word&, const std::vector<std::size_t>&)>;
  NCPoly<C> reduce_with(const NCPoly<C>& p, const Strategy& pick, std::size_t budget = 0) const;

  static constexpr std::size_t kBudgetFactor = 4096;

private:
  struct Cache;
  struct Steps;
  static constexpr std::size_t kMaxDepth = 20000;

  std::optional<NCPoly<C>> cached(const Word& w) const;
  void store(const Word& w, const NCPoly<C>& p) const;
  NCPoly<C> insert(char x, const Word& s, Steps& steps) const;
  NCPoly<C> normal_word(const Word& w, Steps& steps) const;
  NCPoly<C> reduce(NCPoly<C> p, const Strategy* pick, std::size_t budget) const;

  Alphabet alphabet_;
  Rules rules_;
  std::shared_ptr<Cache> cache_;
};

using HSystem = RewriteSystem<MultiPoly>;
using QSystem = RewriteSystem<LaurentScalar>;

// D = ad - bc - h(1 + alpha) ac
HPoly jordanian_determinant(const MultiPoly& alpha = MultiPoly(Symbol::alpha));
// The commutation relations of Fun_{h,alpha}(GL(2)) in the printed commutator form.
std::vector<Relation<MultiPoly>> jordanian_relations(const MultiPoly& alpha = MultiPoly(Symbol::alpha));
HSystem jordanian_system(const MultiPoly& alpha = MultiPoly(Symbol::alpha));

// Fun_{q,lambda}(GL(2)) with lambda = q^alpha, coefficients through t^order.
QPoly hat_determinant(int order, const MultiPoly& alpha = MultiPoly(Symbol::alpha));
std::vector<Relation<LaurentScalar>> hat_relations(int order, const MultiPoly& alpha = MultiPoly(Symbol::alpha));
QSystem hat_system(int order, const MultiPoly& alpha = MultiPoly(Symbol::alpha));

// The transformed generators a~ ... d~.
QPoly tilde_determinant(int order, const MultiPoly& alpha = MultiPoly(Symbol::alpha));
std::vector<Relation<LaurentScalar>> tilde_relations(int order, const MultiPoly& alpha = MultiPoly(Symbol::alpha));
QSystem tilde_system(int order, const MultiPoly& alpha = MultiPoly(Symbol::alpha));

// a^ = a~ + eta c~, b^ = b~ - eta (a~ - d~) - eta^2 c~, c^ = c~, d^ = d~ - eta c~,
// followed by tilde normal ordering.
QPoly substitute_hat_to_tilde(const QPoly& p, const QSystem& tilde, const LaurentScalar& eta);

// Coefficient-wise q -> 1 limit onto the Jordanian alphabet. Throws
// PoleError or TruncationError from the scalar limit.
HPoly limit_ncpoly(const QPoly& p);

// rho: a <-> d, b, c fixed, alpha -> -alpha.
HPoly rho(const HPoly& p);

template <class C>
TensorPoly<C> normal_order(const TensorPoly<C>& p, const RewriteSystem<C>& sys) {
  TensorPoly<C> r;
  for (const auto& [k, c] : p.terms()) {
    auto left = sys.normal_order(NCPoly<C>::word(k.first, c));
    auto right = sys.normal_order(NCPoly<C>::word(k.second));
    r += TensorPoly<C>::pure(left, right);
  }
  return r;
}

// Commutator-style helpers.
template <class C>
NCPoly<C> commutator(const NCPoly<C>& x, const NCPoly<C>& y) {
  return x * y - y * x;
}

// Local confluence: every word of length 3 reduced leftmost-first and
// rightmost-first, then `random_words` random words of length 3..max_len
// reduced with a random strategy against the cached normal form.
template <class C>
Report check_local_confluence(const RewriteSystem<C>& sys, std::size_t max_len = 6, std::size_t random_words = 500,
                              std::uint32_t seed = 20240601);

// Substituting the hat->tilde map into every hat relation leaves zero after
// tilde normal ordering, and D^ maps to D~.
Report check_hat_to_tilde(int order);
// Each tilde rule and D~ limit to the Jordanian rule and D.
Report check_tilde_limit(int order);
// The determinant commutation relations on all three sides.
Report check_determinant_relations(int order);
// rho maps every Jordanian relation into the ideal.
Report check_rho_automorphism();
// Delta respects every relation; sigma (rho (x) rho) Delta rho = Delta on generators.
Report check_coproduct_morphism();
// Delta(D^) = D^ (x) D^ and Delta(D) = D (x) D.
Report check_group_like(int order);

}  // namespace jordan
