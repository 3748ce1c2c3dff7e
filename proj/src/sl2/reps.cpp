#include "jordan/sl2/reps.hpp"

#include <stdexcept>

namespace jordan {

Spin Spin::parse(std::string_view text) {
  Rational r = parse_rational(text);
  Rational twice = 2 * r;
  if (sgn(twice) < 0 || twice.get_den() != 1) throw std::invalid_argument("invalid spin: " + std::string(text));
  return Spin{static_cast<unsigned>(twice.get_num().get_ui())};
}

std::string Spin::to_string() const {
  return twice_j % 2 ? std::to_string(twice_j) + "/2" : std::to_string(twice_j / 2);
}

std::string_view to_string(RepKind k) {
  switch (k) {
    case RepKind::classical: return "classical";
    case RepKind::q_deformed: return "q";
    case RepKind::jordanian: return "jordanian";
  }
  return "?";
}

RepKind parse_rep_kind(std::string_view text) {
  if (text == "classical") return RepKind::classical;
  if (text == "q" || text == "q-deformed") return RepKind::q_deformed;
  if (text == "jordanian" || text == "h") return RepKind::jordanian;
  throw std::invalid_argument("unknown representation kind: " + std::string(text));
}

RepMatrices<MultiPoly> build_classical_rep(Spin j) {
  const std::size_t d = j.dim();
  PolyMatrix jp(d, d), jm(d, d), j0(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    j0(i, i) = MultiPoly(static_cast<int>(j.twice_weight(i)));
    // J+|j m> = (j-m)(j+m+1)|j m+1>, and m+1 sits one row up.
    if (i > 0) jp(i - 1, i) = MultiPoly(static_cast<int>(i * (j.twice_j - i + 1)));
    if (i + 1 < d) jm(i + 1, i) = MultiPoly(1);
  }
  return {RepKind::classical, j, {{"J+", jp}, {"J-", jm}, {"J0", j0}}};
}

RepMatrices<LaurentScalar> build_q_rep(Spin j, int order) {
  const std::size_t d = j.dim();
  SeriesMatrix jp(d, d), jm(d, d), j0(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    j0(i, i) = LaurentScalar(static_cast<int>(j.twice_weight(i)));
    if (i > 0)
      jp(i - 1, i) = q_integer(static_cast<int>(i), order) * q_integer(static_cast<int>(j.twice_j - i + 1), order);
    if (i + 1 < d) jm(i + 1, i) = LaurentScalar(1);
  }
  return {RepKind::q_deformed, j, {{"J+", jp}, {"J-", jm}, {"J0", j0}}};
}

namespace {

MultiPoly divide_by_h(const MultiPoly& p) {
  auto q = p.divide_exact(MultiPoly(Symbol::h));
  if (!q) throw std::logic_error("expected an entry divisible by h");
  return *q;
}

}  // namespace

JordanianGenerators jordanian_from_classical(const PolyMatrix& jp, const PolyMatrix& jm, const PolyMatrix& j0) {
  const std::size_t d = jp.rows();
  const PolyMatrix id = PolyMatrix::identity(d);
  const MultiPoly h(Symbol::h);
  PolyMatrix hjp = h * jp;
  PolyMatrix root = nilpotent_sqrt(id + multiply(hjp, hjp));
  JordanianGenerators g;
  g.T = hjp + root;
  g.Tinv = unipotent_inverse(g.T);
  g.X = unipotent_log(g.T).map(divide_by_h);
  g.H = multiply(root, j0);
  g.Y = jm - MultiPoly(Rational(1, 4)) * (h * h) * multiply(jp, multiply(j0, j0) - id);
  return g;
}

RepMatrices<MultiPoly> build_h_rep(Spin j) {
  auto c = build_classical_rep(j);
  auto g = jordanian_from_classical(c["J+"], c["J-"], c["J0"]);
  return {RepKind::jordanian, j, {{"X", g.X}, {"Y", g.Y}, {"H", g.H}, {"T", g.T}, {"Tinv", g.Tinv}}};
}

PolyMatrix build_t_tilde(Spin j) { return build_h_rep(j)["T"]; }

Report check_h_algebra(Spin j) {
  ReportBuilder rb("h-algebra", j.to_string());
  auto r = build_h_rep(j);
  const auto &x = r["X"], &y = r["Y"], &hh = r["H"], &t = r["T"], &ti = r["Tinv"];
  const MultiPoly h(Symbol::h);
  rb.compare(multiply(t, ti), PolyMatrix::identity(x.rows()), "T Tinv");
  rb.compare(nilpotent_exp(h * x), t, "T = exp(hX)");
  rb.compare(h * commutator(hh, x), t - ti, "h[H,X] = T - Tinv");
  rb.compare(MultiPoly(2) * commutator(hh, y), -anticommutator(y, t + ti), "2[H,Y] = -{Y, T + Tinv}");
  rb.compare(commutator(x, y), hh, "[X,Y] = H");
  return rb.finish();
}

}  // namespace jordan
