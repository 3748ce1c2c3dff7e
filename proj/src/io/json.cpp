#include "jordan/io/json.hpp"

#include <stdexcept>
#include <string>

namespace jordan {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' is not a string");
  return v.get<std::string>();
}

std::size_t count(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) malformed(std::string("field '") + key + "' is not a count");
  return v.get<std::size_t>();
}

template <class S, class F>
Json matrix_json(const Matrix<S>& m, F&& entry) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(entry(m(i, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <class S, class F>
Matrix<S> matrix_from(const Json& j, F&& entry) {
  const std::size_t r = count(j, "rows"), c = count(j, "cols");
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != r) malformed("entries do not match rows");
  Matrix<S> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!e[i].is_array() || e[i].size() != c) malformed("row " + std::to_string(i) + " does not match cols");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = entry(e[i][k]);
  }
  return m;
}

Provenance parse_provenance(const std::string& s) {
  for (auto p : {Provenance::contracted, Provenance::direct_universal, Provenance::twist_conjugated})
    if (to_string(p) == s) return p;
  malformed("unknown provenance '" + s + "'");
}

Status parse_status(const std::string& s) {
  for (auto st : {Status::verified, Status::failed, Status::skipped})
    if (to_string(st) == s) return st;
  malformed("unknown status '" + s + "'");
}

}  // namespace

Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    auto e = t.mono.exponents();
    out.push_back(Json{{"exponents", e}, {"coeff", to_string(t.coeff)}});
  }
  return out;
}

MultiPoly multipoly_from_json(const Json& j) {
  if (!j.is_array()) malformed("polynomial is not a list of terms");
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : j) {
    const Json& e = field(t, "exponents");
    if (!e.is_array() || e.size() != kSymbolCount) malformed("exponent vector has the wrong length");
    std::array<unsigned, kSymbolCount> exps{};
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (!e[i].is_number_unsigned()) malformed("exponent is not a non-negative integer");
      exps[i] = e[i].get<unsigned>();
    }
    terms.push_back({Monomial::from_exponents(exps), parse_rational(text(t, "coeff"))});
  }
  return MultiPoly::from_terms(std::move(terms));
}

Json to_json(const PolyMatrix& m) {
  return matrix_json(m, [](const MultiPoly& p) { return to_json(p); });
}

PolyMatrix polymatrix_from_json(const Json& j) { return matrix_from<MultiPoly>(j, multipoly_from_json); }

Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RatFunc ratfunc_from_json(const Json& j) {
  MultiPoly den = multipoly_from_json(field(j, "den"));
  if (den.is_zero()) malformed("zero denominator");
  return RatFunc(multipoly_from_json(field(j, "num")), std::move(den));
}

Json to_json(const LaurentScalar& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"min_deg", s.coeffs().empty() ? 0 : s.min_deg()},
              {"trunc", s.is_exact() ? Json(nullptr) : Json(s.trunc_order())},
              {"coeffs", std::move(coeffs)}};
}

LaurentScalar laurent_from_json(const Json& j) {
  const Json& m = field(j, "min_deg");
  const Json& t = field(j, "trunc");
  const Json& c = field(j, "coeffs");
  if (!m.is_number_integer() || !(t.is_null() || t.is_number_integer()) || !c.is_array())
    malformed("series needs integer min_deg, integer or null trunc and a coefficient list");
  std::vector<RatFunc> coeffs;
  for (const auto& x : c) coeffs.push_back(ratfunc_from_json(x));
  return LaurentScalar::from_coeffs(m.get<int>(), std::move(coeffs), t.is_null() ? LaurentScalar::kExact : t.get<int>());
}

Json to_json(const SeriesMatrix& m) {
  return matrix_json(m, [](const LaurentScalar& s) { return to_json(s); });
}

SeriesMatrix seriesmatrix_from_json(const Json& j) { return matrix_from<LaurentScalar>(j, laurent_from_json); }

Json to_json(const HPoly& p) {
  Json out = Json::array();
  for (const auto& [w, c] : p.terms()) out.push_back(Json{{"word", w}, {"coeff", to_json(c)}});
  return out;
}

HPoly hpoly_from_json(const Json& j) {
  if (!j.is_array()) malformed("noncommutative polynomial is not a list of terms");
  HPoly p;
  for (const auto& t : j) {
    std::string w = text(t, "word");
    for (char x : w)
      if (x < 'a' || x > 'd') malformed("word '" + w + "' has a letter outside a..d");
    p.add(w, multipoly_from_json(field(t, "coeff")));
  }
  return p;
}

Json to_json(const Matrix<HPoly>& m) {
  return matrix_json(m, [](const HPoly& p) { return to_json(p); });
}

Matrix<HPoly> hmatrix_from_json(const Json& j) { return matrix_from<HPoly>(j, hpoly_from_json); }

Json to_json(const CentralPower& p) { return Json{{"base", "D"}, {"sigma", to_json(p.sigma)}}; }

CentralPower central_power_from_json(const Json& j) {
  if (text(j, "base") != "D") malformed("central power base must be D");
  return {multipoly_from_json(field(j, "sigma"))};
}

Json to_json(const Sector& s) {
  return Json{{"j", s.j.to_string()}, {"z", s.z ? to_json(*s.z) : Json(nullptr)}};
}

Sector sector_from_json(const Json& j) {
  Sector s;
  s.j = Spin::parse(text(j, "j"));
  const Json& z = field(j, "z");
  if (!z.is_null()) s.z = multipoly_from_json(z);
  return s;
}

Json to_json(const RMatrix& r) {
  return Json{{"object", "R"},
              {"labels", Json::array({to_json(r.labels.first), to_json(r.labels.second)})},
              {"provenance", std::string(to_string(r.provenance))},
              {"body", to_json(r.body)}};
}

RMatrix rmatrix_from_json(const Json& j) {
  if (text(j, "object") != "R") malformed("not an R matrix");
  const Json& l = field(j, "labels");
  if (!l.is_array() || l.size() != 2) malformed("R labels must be a pair");
  RMatrix r;
  r.labels = {sector_from_json(l[0]), sector_from_json(l[1])};
  r.provenance = parse_provenance(text(j, "provenance"));
  r.body = polymatrix_from_json(field(j, "body"));
  return r;
}

Json to_json(const TMatrix& t) {
  return Json{{"object", "T"},
              {"j", t.j.to_string()},
              {"z", to_json(t.z)},
              {"prefactor", to_json(t.prefactor)},
              {"body", to_json(t.body)}};
}

TMatrix tmatrix_from_json(const Json& j) {
  if (text(j, "object") != "T") malformed("not a T matrix");
  TMatrix t;
  t.j = Spin::parse(text(j, "j"));
  t.z = multipoly_from_json(field(j, "z"));
  t.prefactor = central_power_from_json(field(j, "prefactor"));
  t.body = hmatrix_from_json(field(j, "body"));
  return t;
}

Json to_json(const RepMatrices<MultiPoly>& r) {
  Json gens = Json::object();
  for (const auto& [name, m] : r.generators) gens[name] = to_json(m);
  return Json{{"object", "rep"}, {"kind", std::string(to_string(r.kind))}, {"j", r.j.to_string()}, {"generators", gens}};
}

Json to_json(const RepMatrices<LaurentScalar>& r) {
  Json gens = Json::object();
  for (const auto& [name, m] : r.generators) gens[name] = to_json(m);
  return Json{{"object", "rep"}, {"kind", std::string(to_string(r.kind))}, {"j", r.j.to_string()}, {"generators", gens}};
}

namespace {

template <class S, class F>
RepMatrices<S> rep_from(const Json& j, F&& entries) {
  if (text(j, "object") != "rep") malformed("not a representation");
  RepMatrices<S> r;
  r.kind = parse_rep_kind(text(j, "kind"));
  r.j = Spin::parse(text(j, "j"));
  const Json& g = field(j, "generators");
  if (!g.is_object()) malformed("generators must be an object");
  for (const auto& [name, m] : g.items()) r.generators.emplace_back(name, entries(m));
  return r;
}

}  // namespace

RepMatrices<MultiPoly> rep_from_json(const Json& j) { return rep_from<MultiPoly>(j, polymatrix_from_json); }

RepMatrices<LaurentScalar> qrep_from_json(const Json& j) { return rep_from<LaurentScalar>(j, seriesmatrix_from_json); }

Json to_json(const TwistSeries& g) {
  Json terms = Json::array();
  for (const auto& m : g.terms) terms.push_back(to_json(m));
  return Json{{"object", "twist"}, {"j1", g.j1.to_string()}, {"j2", g.j2.to_string()}, {"h_terms", terms}};
}

TwistSeries twist_from_json(const Json& j) {
  if (text(j, "object") != "twist") malformed("not a twist");
  TwistSeries g;
  g.j1 = Spin::parse(text(j, "j1"));
  g.j2 = Spin::parse(text(j, "j2"));
  const Json& terms = field(j, "h_terms");
  if (!terms.is_array()) malformed("h_terms must be a list");
  for (const auto& m : terms) g.terms.push_back(polymatrix_from_json(m));
  return g;
}

Json to_json(const Report& r) {
  Json mismatch = nullptr;
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    mismatch = Json{{"row", m.row}, {"col", m.col}, {"lhs", m.lhs}, {"rhs", m.rhs}, {"where", m.where}};
  }
  return Json{{"identity", r.identity},
              {"labels", r.labels},
              {"status", std::string(to_string(r.status))},
              {"detail", r.detail},
              {"first_mismatch", mismatch},
              {"wall_ms", r.wall_ms}};
}

Report report_from_json(const Json& j) {
  Report r;
  r.identity = text(j, "identity");
  r.labels = text(j, "labels");
  r.status = parse_status(text(j, "status"));
  r.detail = text(j, "detail");
  const Json& m = field(j, "first_mismatch");
  if (!m.is_null())
    r.first_mismatch = Mismatch{count(m, "row"), count(m, "col"), text(m, "lhs"), text(m, "rhs"), text(m, "where")};
  const Json& w = field(j, "wall_ms");
  if (!w.is_number()) malformed("wall_ms is not a number");
  r.wall_ms = w.get<double>();
  return r;
}

}  // namespace jordan
