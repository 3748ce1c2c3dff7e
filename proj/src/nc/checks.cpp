#include <optional>
#include <random>

#include "jordan/errors.hpp"
#include "jordan/linalg/parallel.hpp"
#include "jordan/nc/rewrite.hpp"

namespace jordan {

namespace {

template <class C>
NCPoly<C> gen(char x) {
  return NCPoly<C>::gen(x);
}

// Lowest truncation order among the coefficients; kExact if all exact.
int known_through(const QPoly& p) {
  int k = LaurentScalar::kExact;
  for (const auto& [w, c] : p.terms()) k = std::min(k, c.trunc_order());
  return k;
}

template <class C>
bool require_zero(ReportBuilder& rb, const NCPoly<C>& p, const std::string& where) {
  return rb.compare_value(p, NCPoly<C>(), where);
}

bool require_zero_q(ReportBuilder& rb, const QPoly& p, const std::string& where) {
  if (known_through(p) < 0) {
    rb.compare_failed(Mismatch{0, 0, p.to_string(), "0", where + ": insufficient truncation"});
    return false;
  }
  return require_zero(rb, p, where);
}

}  // namespace

template <class C>
Report check_local_confluence(const RewriteSystem<C>& sys, std::size_t max_len, std::size_t random_words,
                              std::uint32_t seed) {
  if (max_len < 3) throw std::invalid_argument("confluence check needs max_len >= 3");
  ReportBuilder rb("local-confluence", std::string(to_string(sys.alphabet())));
  using Strategy = typename RewriteSystem<C>::Strategy;
  Strategy leftmost = [](const Word&, const std::vector<std::size_t>&) { return std::size_t{0}; };
  Strategy rightmost = [](const Word&, const std::vector<std::size_t>& ds) { return ds.size() - 1; };
  for (int i = 0; i < 64; ++i) {
    Word w{letter(i / 16), letter(i / 4 % 4), letter(i % 4)};
    auto p = NCPoly<C>::word(w);
    auto l = sys.reduce_with(p, leftmost);
    auto r = sys.reduce_with(p, rightmost);
    rb.compare_value(l, r, "word " + w);
    rb.compare_value(l, sys.normal_order(p), "word " + w + " (cached)");
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> len(3, max_len);
  std::uniform_int_distribution<int> let(0, 3);
  std::vector<Word> words(random_words);
  std::vector<std::uint32_t> seeds(random_words);
  for (std::size_t n = 0; n < random_words; ++n) {
    for (std::size_t k = len(rng); k > 0; --k) words[n].push_back(letter(let(rng)));
    seeds[n] = static_cast<std::uint32_t>(rng());
  }
  std::vector<std::optional<std::pair<NCPoly<C>, NCPoly<C>>>> bad(random_words);
  ParallelErrors errors;
  const auto count = static_cast<std::ptrdiff_t>(random_words);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t n = 0; n < count; ++n) {
    const auto i = static_cast<std::size_t>(n);
    try {
      std::mt19937 pick_rng(seeds[i]);
      Strategy random_pick = [&pick_rng](const Word&, const std::vector<std::size_t>& ds) {
        return std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(pick_rng);
      };
      auto p = NCPoly<C>::word(words[i]);
      auto l = sys.reduce_with(p, random_pick);
      auto r = sys.normal_order(p);
      if (!(l == r)) bad[i] = std::make_pair(std::move(l), std::move(r));
    } catch (...) {
      errors.capture(i);
    }
  }
  errors.rethrow();
  for (std::size_t n = 0; n < random_words; ++n) {
    if (bad[n]) rb.compare_value(bad[n]->first, bad[n]->second, "random word " + words[n]);
    else rb.passed();
  }
  rb.note("64 words of length 3, " + std::to_string(random_words) + " random words up to length " +
          std::to_string(max_len));
  return rb.finish();
}

template Report check_local_confluence(const RewriteSystem<MultiPoly>&, std::size_t, std::size_t, std::uint32_t);
template Report check_local_confluence(const RewriteSystem<LaurentScalar>&, std::size_t, std::size_t, std::uint32_t);

Report check_hat_to_tilde(int order) {
  ReportBuilder rb("hat-to-tilde", "order " + std::to_string(order));
  auto tilde = tilde_system(order);
  auto eta = eta_series(order);
  for (const auto& rel : hat_relations(order)) require_zero_q(rb, substitute_hat_to_tilde(rel.poly, tilde, eta), rel.name);
  auto dhat = substitute_hat_to_tilde(hat_determinant(order), tilde, eta);
  rb.compare_value(dhat, tilde.normal_order(tilde_determinant(order)), "determinant");
  return rb.finish();
}

Report check_tilde_limit(int order) {
  ReportBuilder rb("tilde-limit", "order " + std::to_string(order));
  auto tilde = tilde_system(order);
  auto jord = jordanian_system();
  const char* pairs[] = {"ba", "ca", "da", "cb", "db", "dc"};
  for (const char* p : pairs)
    rb.compare_value(limit_ncpoly(tilde.rule(p[0], p[1])), jord.rule(p[0], p[1]), std::string("rule ") + p);
  auto trel = tilde_relations(order);
  auto jrel = jordanian_relations();
  for (std::size_t i = 0; i < trel.size(); ++i) rb.compare_value(limit_ncpoly(trel[i].poly), jrel[i].poly, jrel[i].name);
  rb.compare_value(limit_ncpoly(tilde_determinant(order)), jordanian_determinant(), "determinant");
  return rb.finish();
}

Report check_determinant_relations(int order) {
  ReportBuilder rb("determinant-relations", "order " + std::to_string(order));
  {
    auto sys = jordanian_system();
    auto a = gen<MultiPoly>('a'), b = gen<MultiPoly>('b'), c = gen<MultiPoly>('c'), d = gen<MultiPoly>('d');
    HPoly D = jordanian_determinant();
    HPoly k(MultiPoly(2) * MultiPoly(Symbol::h) * MultiPoly(Symbol::alpha));
    require_zero(rb, sys.normal_order(commutator(a, D) - k * c * D), "[a,D] = 2h alpha cD");
    require_zero(rb, sys.normal_order(commutator(b, D) - k * (D * d - a * D)), "[b,D] = 2h alpha (Dd - aD)");
    require_zero(rb, sys.normal_order(commutator(c, D)), "[c,D] = 0");
    require_zero(rb, sys.normal_order(commutator(d, D) + k * c * D), "[d,D] = -2h alpha cD");
  }
  const MultiPoly alpha(Symbol::alpha);
  {
    auto sys = hat_system(order);
    auto a = gen<LaurentScalar>('a'), b = gen<LaurentScalar>('b'), c = gen<LaurentScalar>('c'),
         d = gen<LaurentScalar>('d');
    QPoly D = hat_determinant(order);
    QPoly l2(q_power(2 * alpha, order)), lm2(q_power(-2 * alpha, order));
    require_zero_q(rb, sys.normal_order(commutator(a, D)), "[a^,D^] = 0");
    require_zero_q(rb, sys.normal_order(b * D - l2 * D * b), "b^D^ = lambda^2 D^b^");
    require_zero_q(rb, sys.normal_order(c * D - lm2 * D * c), "c^D^ = lambda^-2 D^c^");
    require_zero_q(rb, sys.normal_order(commutator(d, D)), "[d^,D^] = 0");
  }
  {
    auto sys = tilde_system(order);
    auto a = gen<LaurentScalar>('a'), b = gen<LaurentScalar>('b'), c = gen<LaurentScalar>('c'),
         d = gen<LaurentScalar>('d');
    QPoly D = tilde_determinant(order);
    QPoly q2a(q_power(2 * alpha, order)), qm2a(q_power(-2 * alpha, order));
    QPoly k(eta_series(order) * (q_power(2 * alpha, order) - LaurentScalar(1)));
    require_zero_q(rb, sys.normal_order(commutator(a, D) - k * c * D), "[a~,D~] = eta(q^2alpha - 1) c~D~");
    require_zero_q(rb, sys.normal_order(b * D - q2a * D * b - k * (D * d - a * D)),
                   "b~D~ - q^2alpha D~b~ = eta(q^2alpha - 1)(D~d~ - a~D~)");
    require_zero_q(rb, sys.normal_order(c * D - qm2a * D * c), "c~D~ - q^-2alpha D~c~ = 0");
    require_zero_q(rb, sys.normal_order(commutator(d, D) + k * c * D), "[d~,D~] = -eta(q^2alpha - 1) c~D~");
  }
  return rb.finish();
}

Report check_rho_automorphism() {
  ReportBuilder rb("rho-automorphism", "jordanian");
  auto sys = jordanian_system();
  for (const auto& rel : jordanian_relations()) require_zero(rb, sys.normal_order(rho(rel.poly)), "rho(" + rel.name + ")");
  // rho is an involution.
  for (const auto& rel : jordanian_relations()) rb.compare_value(rho(rho(rel.poly)), rel.poly, "rho^2 " + rel.name);
  return rb.finish();
}

Report check_coproduct_morphism() {
  ReportBuilder rb("coproduct-morphism", "jordanian");
  auto sys = jordanian_system();
  for (const auto& rel : jordanian_relations())
    rb.compare_value(normal_order(coproduct(rel.poly), sys), TensorPoly<MultiPoly>(), "Delta(" + rel.name + ")");
  auto rho_legs = [](const Word& u, const Word& v, const MultiPoly& c) {
    return TensorPoly<MultiPoly>::pure(rho(HPoly::word(u, c)), rho(HPoly::word(v)));
  };
  for (char x : std::string("abcd")) {
    auto lhs = coproduct(rho(gen<MultiPoly>(x))).map_legs(rho_legs).flipped();
    rb.compare_value(lhs, coproduct(gen<MultiPoly>(x)), std::string("sigma(rho x rho)Delta(rho(") + x + "))");
  }
  return rb.finish();
}

Report check_group_like(int order) {
  ReportBuilder rb("group-like-determinant", "order " + std::to_string(order));
  {
    auto sys = hat_system(order);
    QPoly D = hat_determinant(order);
    auto lhs = normal_order(coproduct(D), sys);
    auto rhs = normal_order(TensorPoly<LaurentScalar>::pure(D, D), sys);
    rb.compare_value(lhs, rhs, "Delta(D^) = D^ (x) D^");
  }
  {
    auto sys = jordanian_system();
    HPoly D = jordanian_determinant();
    rb.compare_value(normal_order(coproduct(D), sys), normal_order(TensorPoly<MultiPoly>::pure(D, D), sys),
                     "Delta(D) = D (x) D");
  }
  return rb.finish();
}

}  // namespace jordan
