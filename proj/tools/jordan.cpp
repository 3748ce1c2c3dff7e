#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jordan/errors.hpp"
#include "jordan/io/json.hpp"
#include "jordan/io/latex.hpp"
#include "jordan/suite/acceptance.hpp"

using namespace jordan;

namespace {

enum class Format { json, latex, text };

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string format = "json";
  std::optional<int> trunc;
  std::string out;
  std::string labels;
  std::string j1, j2, z1, z2, j, z = "sym:z";
  std::string kind = "jordanian";
  std::string source;
  std::vector<int> criteria;
  int threads = 0;
  bool broken_eta = false;
};

// h/(q-1)^2 in place of h/(q-1); the limit must then fail with a pole.
LaurentScalar broken_eta(int order) {
  LaurentScalar qm1 = q_power(MultiPoly(1), order + 4) - LaurentScalar(1);
  return (LaurentScalar(MultiPoly(Symbol::h)) * (qm1 * qm1).inverse()).truncated(order);
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format: " + s);
}

template <class M>
std::string text_matrix(const M& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t k = 0; k < m.cols(); ++k) os << (k ? " | " : " ") << m(i, k).to_string();
    os << " ]\n";
  }
  return os.str();
}

class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
  std::ofstream file_;
};

Sector sector(const std::string& j, const std::string& z) {
  Sector s{Spin::parse(j), std::nullopt};
  if (!z.empty()) s.z = parse_colour(z);
  return s;
}

PairLabels pair_labels(const Options& o) {
  if (!o.labels.empty()) {
    auto s = parse_sectors(o.labels);
    if (s.size() != 2) throw std::invalid_argument("expected two label sectors, got " + std::to_string(s.size()));
    return {s[0], s[1]};
  }
  if (o.j1.empty() || o.j2.empty()) throw std::invalid_argument("give --labels or both --j1 and --j2");
  return {sector(o.j1, o.z1), sector(o.j2, o.z2)};
}

std::vector<Sector> labels_list(const Options& o, std::size_t want) {
  if (o.labels.empty()) throw std::invalid_argument("--labels is required");
  auto s = parse_sectors(o.labels);
  if (s.size() != want)
    throw std::invalid_argument("expected " + std::to_string(want) + " label sectors, got " + std::to_string(s.size()));
  return s;
}

RSource source_or(const Options& o, RSource fallback) { return o.source.empty() ? fallback : parse_r_source(o.source); }

Spin spin_option(const std::string& j, const char* flag) {
  if (j.empty()) throw std::invalid_argument(std::string(flag) + " is required");
  return Spin::parse(j);
}

// compute ------------------------------------------------------------------

void emit_r(const Options& o, std::ostream& os) {
  auto labels = pair_labels(o);
  RMatrix r;
  RSource src = source_or(o, RSource::contracted);
  if (src == RSource::contracted) {
    ContractionOptions opts;
    opts.trunc = o.trunc;
    if (o.broken_eta) opts.eta = broken_eta;
    r = contract_R(labels, opts);
  } else {
    r = build_R(labels, src);
  }
  switch (parse_format(o.format)) {
    case Format::json: os << to_json(r).dump(2) << "\n"; break;
    case Format::latex: os << latex(r); break;
    case Format::text:
      os << "R " << labels.to_string() << " (" << to_string(r.provenance) << ")\n" << text_matrix(r.body);
      break;
  }
}

void emit_t(const Options& o, std::ostream& os) {
  Spin j = spin_option(o.j, "--j");
  TContractionOptions opts;
  opts.trunc = o.trunc;
  if (o.broken_eta) opts.eta = broken_eta;
  TMatrix t = contract_T(j, parse_colour(o.z), opts);
  switch (parse_format(o.format)) {
    case Format::json: os << to_json(t).dump(2) << "\n"; break;
    case Format::latex: os << latex(t); break;
    case Format::text:
      os << "T " << j.to_string() << "," << colour_to_string(t.z) << " = " << t.prefactor.to_string() << " *\n"
         << text_matrix(t.body);
      break;
  }
}

void emit_twist(const Options& o, std::ostream& os) {
  Spin a = spin_option(o.j1, "--j1"), b = spin_option(o.j2, "--j2");
  auto g = build_G(a, b);
  switch (parse_format(o.format)) {
    case Format::json: os << to_json(g).dump(2) << "\n"; break;
    case Format::latex: os << latex(g); break;
    case Format::text:
      for (std::size_t k = 0; k < g.terms.size(); ++k) os << "h^" << k << ":\n" << text_matrix(g.terms[k]);
      break;
  }
}

void emit_rep(const Options& o, std::ostream& os) {
  Spin j = spin_option(o.j, "--j");
  RepKind kind = parse_rep_kind(o.kind);
  Format f = parse_format(o.format);
  if (kind == RepKind::q_deformed) {
    auto r = build_q_rep(j, o.trunc.value_or(4));
    if (f == Format::latex) throw std::invalid_argument("q representations have no LaTeX form; use json or text");
    if (f == Format::json) {
      os << to_json(r).dump(2) << "\n";
    } else {
      for (const auto& [name, m] : r.generators) os << name << ":\n" << text_matrix(m);
    }
    return;
  }
  auto r = kind == RepKind::classical ? build_classical_rep(j) : build_h_rep(j);
  switch (f) {
    case Format::json: os << to_json(r).dump(2) << "\n"; break;
    case Format::latex: os << latex(r); break;
    case Format::text:
      for (const auto& [name, m] : r.generators) os << name << ":\n" << text_matrix(m);
      break;
  }
}

void emit_m(const Options& o, std::ostream& os) {
  Spin j = spin_option(o.j, "--j");
  int order = o.trunc.value_or(4);
  auto m = build_M(j, order);
  switch (parse_format(o.format)) {
    case Format::json:
      os << Json{{"object", "M"}, {"j", j.to_string()}, {"order", order}, {"body", to_json(m)}}.dump(2) << "\n";
      break;
    case Format::latex: throw std::invalid_argument("M has no LaTeX form; use json or text");
    case Format::text: os << "M " << j.to_string() << " through t^" << order << "\n" << text_matrix(m); break;
  }
}

// verify -------------------------------------------------------------------

std::vector<Report> verify_reports(const std::string& what, const Options& o) {
  std::vector<Report> out;
  if (what == "ybe") {
    auto s = labels_list(o, 3);
    out.push_back(check_YBE(s[0], s[1], s[2], source_or(o, RSource::direct)));
  } else if (what == "rtt") {
    auto s = labels_list(o, 2);
    out.push_back(check_RTT(s[0], s[1], source_or(o, RSource::direct)));
  } else if (what == "contraction") {
    ContractionOptions opts;
    opts.trunc = o.trunc;
    out.push_back(check_contract_equals_direct(pair_labels(o), opts));
  } else if (what == "triangularity") {
    out.push_back(check_triangularity(pair_labels(o), source_or(o, RSource::direct)));
  } else if (what == "exchange") {
    out.push_back(check_exchange_symmetry(pair_labels(o), source_or(o, RSource::direct)));
  } else if (what == "intertwiner") {
    out.push_back(check_intertwiner(pair_labels(o), source_or(o, RSource::direct)));
  } else if (what == "routes") {
    out.push_back(check_coloured_routes(pair_labels(o)));
  } else if (what == "truncation") {
    out.push_back(check_truncation_stability(pair_labels(o)));
  } else if (what == "twist") {
    auto s = parse_sectors(o.labels.empty() ? "1/2;1/2" : o.labels);
    if (s.size() == 3) {
      out.push_back(check_cocycle(s[0].j, s[1].j, s[2].j));
    } else if (s.size() == 2) {
      out.push_back(check_R_from_G(s[0].j, s[1].j));
      out.push_back(check_twisted_coproduct(s[0].j, s[1].j));
      out.push_back(check_g_from_G(s[0].j));
      out.push_back(check_g_closed_form(s[0].j));
    } else {
      throw std::invalid_argument("verify twist takes two or three spins");
    }
  } else if (what == "algebra") {
    if (!o.j.empty()) {
      out.push_back(check_h_algebra(Spin::parse(o.j)));
    } else {
      for (unsigned t = 0; t <= 5; ++t) out.push_back(check_h_algebra(Spin{t}));
    }
  } else if (what == "nc") {
    const int order = o.trunc.value_or(6);
    out.push_back(check_local_confluence(jordanian_system()));
    out.push_back(check_local_confluence(hat_system(order)));
    out.push_back(check_local_confluence(tilde_system(order)));
    out.push_back(check_hat_to_tilde(order));
    out.push_back(check_tilde_limit(order));
    out.push_back(check_determinant_relations(order));
    out.push_back(check_rho_automorphism());
    out.push_back(check_coproduct_morphism());
    out.push_back(check_group_like_determinant(order));
    out.push_back(fit_power_commutation(jordanian_system(), jordanian_determinant()).report);
  } else if (what == "t") {
    out.push_back(check_specializations());
    out.push_back(check_T_truncation_stability(kHalf, MultiPoly(Symbol::z)));
    out.push_back(check_T_truncation_stability(kOne, MultiPoly(Symbol::z)));
  } else {
    throw std::invalid_argument("unknown verification: " + what);
  }
  return out;
}

int print_reports(const std::vector<Report>& reports, const Options& o, std::ostream& os) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  Format f = parse_format(o.format);
  // Failures always come with the JSON report.
  if (f == Format::json || !ok) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    os << arr.dump(2) << "\n";
  }
  if (f != Format::json)
    for (const auto& r : reports)
      std::cerr << to_string(r.status) << "  " << r.identity << " [" << r.labels << "] " << r.detail << "\n";
  return ok ? kExitOk : kExitFailed;
}

int run_acceptance(const Options& o, std::ostream& os) {
  bool ok = true;
  Json arr = Json::array();
  for (const auto& c : acceptance_criteria()) {
    if (!o.criteria.empty() && std::find(o.criteria.begin(), o.criteria.end(), c.id) == o.criteria.end()) continue;
    auto res = run_criterion(c);
    ok = ok && res.pass();
    if (parse_format(o.format) == Format::json) {
      Json reports = Json::array();
      for (const auto& r : res.reports) reports.push_back(to_json(r));
      arr.push_back(Json{{"criterion", res.id},
                         {"title", res.title},
                         {"pass", res.pass()},
                         {"seconds", res.seconds},
                         {"limit_s", res.limit_s},
                         {"error", res.error},
                         {"reports", reports}});
    } else {
      os << res.summary() << std::endl;
    }
  }
  if (parse_format(o.format) == Format::json) os << arr.dump(2) << "\n";
  return ok ? kExitOk : kExitFailed;
}

void list(std::ostream& os) {
  os << "compute objects:\n"
        "  r      coloured or plain R on V_j1 (x) V_j2      --labels | --j1 --j2 [--z1 --z2] [--source]\n"
        "  t      contracted T^{j,z}, j in {1/2, 1}         --j [--z]\n"
        "  twist  G through h^4 on V_j1 (x) V_j2            --j1 --j2\n"
        "  rep    generator matrices                        --j --kind classical|q|jordanian\n"
        "  m      contraction matrix E_q(eta J+)            --j [--trunc]\n"
        "verifications:\n"
        "  ybe --labels A;B;C     rtt --labels A;B         contraction, triangularity, exchange,\n"
        "  intertwiner, routes, truncation --labels A;B    twist --labels A;B[;C]\n"
        "  algebra [--j]          nc [--trunc]             t\n"
        "  all [--criteria N...]  the acceptance suite\n"
        "formats: json (default), latex, text. Colours: sym:z1 stays symbolic, 3/4 is substituted.\n"
        "JORDAN_THREADS or --threads bounds the worker count.\n";
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "json, latex or text")->check(CLI::IsMember({"json", "latex", "text"}));
  app->add_option("--trunc", o.trunc, "truncation order override");
  app->add_option("--out", o.out, "write to this file instead of stdout");
  app->add_option("--threads", o.threads, "worker threads");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordanian quantum group calculator"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "compute an object");
  compute->require_subcommand(1);
  auto* c_r = compute->add_subcommand("r", "R matrix");
  auto* c_t = compute->add_subcommand("t", "T matrix");
  auto* c_twist = compute->add_subcommand("twist", "twist G");
  auto* c_rep = compute->add_subcommand("rep", "representation");
  auto* c_m = compute->add_subcommand("m", "contraction matrix");
  for (auto* s : {c_r, c_t, c_twist, c_rep, c_m}) add_common(s, o);
  c_r->add_option("--labels", o.labels, "e.g. \"1/2,z1;1,z2\"");
  for (auto* s : {c_r, c_twist}) {
    s->add_option("--j1", o.j1);
    s->add_option("--j2", o.j2);
  }
  c_r->add_option("--z1", o.z1);
  c_r->add_option("--z2", o.z2);
  c_r->add_option("--source", o.source, "contracted, direct or twist");
  for (auto* s : {c_t, c_rep, c_m}) s->add_option("--j", o.j)->required();
  c_t->add_option("--z", o.z, "colour, default sym:z");
  c_rep->add_option("--kind", o.kind, "classical, q or jordanian");
  for (auto* s : {c_r, c_t}) s->add_flag("--broken-eta", o.broken_eta, "build M with a wrong eta (negative test)");

  auto* verify = app.add_subcommand("verify", "run verifications");
  verify->require_subcommand(1);
  std::vector<CLI::App*> checks;
  for (const char* name : {"ybe", "rtt", "contraction", "triangularity", "exchange", "intertwiner", "routes",
                           "truncation", "twist", "algebra", "nc", "t"}) {
    auto* s = verify->add_subcommand(name);
    add_common(s, o);
    s->add_option("--labels", o.labels);
    s->add_option("--source", o.source);
    s->add_option("--j", o.j);
    checks.push_back(s);
  }
  auto* v_all = verify->add_subcommand("all", "the full acceptance suite");
  add_common(v_all, o);
  v_all->add_option("--criteria", o.criteria, "only these criterion ids");

  auto* list_cmd = app.add_subcommand("list", "list objects and verifications");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (const char* env = std::getenv("JORDAN_THREADS"); env && o.threads == 0) o.threads = std::atoi(env);
  if (o.threads > 0) omp_set_num_threads(o.threads);

  try {
    if (list_cmd->parsed()) {
      list(std::cout);
      return kExitOk;
    }
    Output out(o.out);
    std::ostream& os = out.stream();
    if (compute->parsed()) {
      if (c_r->parsed()) emit_r(o, os);
      else if (c_t->parsed()) emit_t(o, os);
      else if (c_twist->parsed()) emit_twist(o, os);
      else if (c_rep->parsed()) emit_rep(o, os);
      else emit_m(o, os);
      return kExitOk;
    }
    if (v_all->parsed()) return run_acceptance(o, os);
    for (auto* s : checks)
      if (s->parsed()) return print_reports(verify_reports(s->get_name(), o), o, os);
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
