// pfcy: build, certify and classify Pfaffian Calabi-Yau threefolds in P^6.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json_out.hpp"
#include "pfcy/control.hpp"
#include "pfcy/io.hpp"
#include "pfcy/models.hpp"

namespace {

using namespace pfcy;
using cli::Json;

constexpr int kExitPass = 0;
constexpr int kExitCertificate = 1;
constexpr int kExitInput = 2;
constexpr int kExitTimeout = 3;

struct Global {
  std::string field = "GF(32003)";
  std::uint64_t seed = 1;
  bool json = false;
  double timeout_sec = 0;
  bool quiet = false;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// A model name or an ideal file.
struct Target {
  GradedIdeal ideal;
  std::string model;  // empty for anonymous files
  bool maximal_pfaffian = false;
};

Target load_target(const std::string& what, const Global& g, const PrimeField& F, const std::string& model_flag) {
  if (is_model_name(what)) {
    Model m = build_model(what, g.seed, F);
    return {m.ideal, what, m.maximal_pfaffian};
  }
  IdealFile f = read_ideal_file(what);
  if (f.field.characteristic() != F.characteristic())
    throw std::invalid_argument("ideal file is over " + f.field.name() + ", expected " + F.name());
  std::string model = model_flag;
  for (const auto& c : f.comments)
    if (model.empty() && c.rfind("model ", 0) == 0) model = c.substr(6);
  return {f.ideal(), model, false};
}

void print_report_table(const VarietyReport& r) {
  std::cout << "codim            " << r.codim << '\n'
            << "dim              " << r.dim << '\n'
            << "degree           " << r.degree << '\n'
            << "hilbert poly     " << cli::polynomial_in_m(r.hilbert.hilbert_polynomial) << '\n'
            << "h0(I(k)), k>=0  ";
  for (auto x : r.graded_pieces) std::cout << ' ' << x;
  std::cout << "\ngenerators       ";
  for (auto x : r.generator_degrees) std::cout << x << ' ';
  std::cout << '\n';
  if (r.rao_h1) {
    std::cout << "rao h1, k>=1     ";
    for (auto x : *r.rao_h1) std::cout << x << ' ';
    std::cout << '\n';
  } else if (!r.rao_error.empty()) {
    std::cout << "rao h1           n/a (" << r.rao_error << ")\n";
  }
  if (r.singular)
    std::cout << "singular         " << node_count(*r.singular).label()
              << (r.singular->certified ? " (certified)" : " (uncertified)") << '\n';
}

int cmd_build(const Global& g, const PrimeField& F, const std::string& name, const std::string& out,
              const std::string& matrix_out) {
  Model m = build_model(name, g.seed, F);
  std::vector<std::string> comments{"model " + name, "seed " + std::to_string(g.seed)};
  for (const auto& p : m.provenance) comments.push_back(p);
  IdealFile file = ideal_file_of(m.ideal, comments);
  std::ostringstream text;
  write_ideal(text, file);
  if (!out.empty()) {
    std::ofstream o(out);
    if (!o) throw std::invalid_argument("cannot write " + out);
    o << text.str();
  }
  if (!matrix_out.empty()) {
    if (!m.matrix && !m.bordered) throw std::invalid_argument("model has no matrix");
    std::ofstream o(matrix_out);
    if (!o) throw std::invalid_argument("cannot write " + matrix_out);
    write_matrix(o, m.matrix ? *m.matrix : m.bordered->bordered());
  }
  std::vector<int> degrees;
  for (const auto& p : m.ideal.generators()) degrees.push_back(p.degree());
  if (g.json) {
    Json j{{"model", name},
           {"seed", g.seed},
           {"field", F.name()},
           {"generators", m.ideal.generators().size()},
           {"generator_degrees", degrees},
           {"provenance", m.provenance}};
    if (m.containment_quadric) j["containment_quadric"] = m.containment_quadric->to_string();
    if (out.empty()) {
      Json lines = Json::array();
      for (const auto& p : m.ideal.generators()) lines.push_back(p.to_string());
      j["ideal"] = lines;
    } else {
      j["ideal_file"] = out;
    }
    emit(j);
  } else if (out.empty()) {
    std::cout << text.str();
  } else {
    std::cout << name << ": " << degrees.size() << " generators written to " << out << '\n';
  }
  return kExitPass;
}

int cmd_invariants(const Global& g, const PrimeField& F, const std::string& target, int kmax, bool singular,
                   bool no_rao) {
  Target t = load_target(target, g, F, "");
  ReportOptions o;
  o.seed = g.seed;
  o.kmax = kmax;
  o.singular = singular;
  o.rao = !no_rao;
  o.assume_saturated = t.maximal_pfaffian;
  VarietyReport r = variety_report(t.ideal, o);
  if (g.json) emit(cli::to_json(r));
  else print_report_table(r);
  return kExitPass;
}

int cmd_certify(const Global& g, const PrimeField& F, const std::string& target, const std::string& model_flag,
                int kmax, bool singular, bool no_singular) {
  Target t = load_target(target, g, F, model_flag);
  const ModelExpectation* e = t.model.empty() ? nullptr : expectation_for(t.model);
  if (!e) throw std::invalid_argument("no expectation table entry for '" + (t.model.empty() ? target : t.model) + "'");
  ReportOptions o;
  o.seed = g.seed;
  o.kmax = kmax;
  o.singular = !no_singular && (singular || e->singular.has_value());
  o.assume_saturated = t.maximal_pfaffian;
  VarietyReport r = variety_report(t.ideal, o);
  auto certs = check_report(r, *e);
  bool pass = true;
  for (const auto& c : certs) pass = pass && c.pass;
  if (g.json) {
    Json list = Json::array();
    for (const auto& c : certs) list.push_back(cli::to_json(c));
    emit({{"model", t.model}, {"seed", g.seed}, {"report", cli::to_json(r)}, {"certificates", list}, {"pass", pass}});
  } else {
    print_report_table(r);
    for (const auto& c : certs)
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected << ", got " << c.got << '\n';
    std::cout << (pass ? "PASS" : "FAIL") << ' ' << t.model << '\n';
  }
  for (const auto& c : certs)
    if (!c.pass) {
      std::cerr << "certificate failed: " << c.name << " (expected " << c.expected << ", got " << c.got
                << "); anchor: \"" << c.anchor << "\"\n";
      break;
    }
  return pass ? kExitPass : kExitCertificate;
}

int cmd_enumerate(const Global& g, int bound, bool evidence) {
  Classification c = enumerate_classification(bound);
  std::optional<DegenerateEvidence> ev;
  if (evidence) ev = degenerate_shape_evidence(g.seed, CoefficientField::parse(g.field).prime_field());
  if (g.json) {
    Json j = cli::to_json(c);
    if (ev) j["degenerate_evidence"] = cli::to_json(*ev);
    emit(j);
    return kExitPass;
  }
  for (const auto& x : c.accepted) {
    std::cout << x.verdict.label << "  " << x.spec.to_string() << "  w=" << w_invariant(x.spec).to_string();
    if (!x.verdict.description.empty()) std::cout << "  " << x.verdict.description;
    std::cout << '\n';
  }
  std::cout << c.candidates << " candidates passing adjunction, " << c.failed << " rejected (";
  for (std::size_t i = 0; i < c.failures_by_rule.size(); ++i)
    std::cout << (i ? ", " : "") << c.failures_by_rule[i].first << ' ' << c.failures_by_rule[i].second;
  std::cout << ")\n";
  if (ev)
    std::cout << "degenerate shape: codim " << ev->codim << ", degree " << ev->degree << ", h0(I(1)) "
              << ev->linear_forms << ", component of degree " << ev->degenerate_component_degree << " in P^"
              << ev->degenerate_component_span << (ev->holds() ? " (excluded)" : " (not excluded)") << '\n';
  return kExitPass;
}

int cmd_chow_solve(const Global& g, const std::string& ring, std::optional<std::int64_t> d, bool symmetric,
                   const std::string& surface) {
  Json out{{"ring", ring}};
  std::ostringstream text;
  if (ring == "Q4smooth") {
    Json sols = Json::array();
    std::vector<std::int64_t> ds;
    if (d) ds.push_back(*d);
    else
      for (std::int64_t x = 11; x <= 41; ++x) ds.push_back(x);
    for (auto x : ds)
      for (const auto& s : solve_surface_class(x, symmetric)) {
        sols.push_back({{"d", s.d}, {"a", s.a}, {"class", s.description}});
        text << "d=" << s.d << "  S ~ " << s.description << '\n';
      }
    out["symmetric"] = symmetric;
    out["discrepancy"] = "2a^2 - 2ad + d^2 - 13d + 84";
    out["solutions"] = sols;
  } else if (ring == "F_over_Q3") {
    const QPolynomial disc = cone_discrepancy();
    out["discrepancy"] = disc.to_string(params::names());
    Json sols = Json::array();
    for (const auto& s : solve_classification_equation("cone")) {
      sols.push_back(cli::to_json(s));
      text << "d=" << s.d << "  a=" << s.a[0] << "  " << s.label << '\n';
    }
    out["solutions"] = sols;
  } else if (ring == "P4") {
    const mpq_class chi = surface == "abelian" ? 0 : 2;
    if (surface != "k3" && surface != "abelian") throw std::invalid_argument("--surface must be k3 or abelian");
    out["surface"] = surface;
    out["discrepancy"] = fiber_discrepancy(chi).to_string(params::names());
    out["degrees"] = fiber_degrees(chi);
    for (auto y : fiber_degrees(chi)) text << surface << " fiber of degree " << y << '\n';
  } else if (ring == "P_over_P1_2O1_3O" || ring == "P_over_P1_2O1_2O") {
    std::vector<std::int64_t> degrees = fiber_degrees(2);
    for (auto y : fiber_degrees(0)) degrees.push_back(y);
    Json sols = Json::array();
    for (const auto& c : fibered_classes(degrees)) {
      Json e{{"fiber_degree", c.fiber_degree}, {"class", c.description}};
      if (c.d) e["d"] = *c.d;
      const QPolynomial alpha = params::constant(mpq_class(static_cast<long>(c.fiber_degree)));
      const QPolynomial gamma = c.d ? params::constant(mpq_class(static_cast<long>(*c.d - 2 * c.fiber_degree)))
                                    : params::d() - params::constant(mpq_class(static_cast<long>(2 * c.fiber_degree)));
      const QPolynomial meet = exceptional_intersection(alpha, gamma);
      e["exceptional_intersection"] = meet.to_string(params::names());
      if (auto pf = pushforward_chern_for_class(c.fiber_degree, gamma)) e["pushforward_c2"] = pf->c2.to_string(params::names());
      text << c.description << (c.d ? "  (d=" + std::to_string(*c.d) + ")" : "") << "  [X].Xi.xi = "
           << meet.to_string(params::names()) << '\n';
      sols.push_back(std::move(e));
    }
    out["classes"] = sols;
  } else {
    throw std::invalid_argument("unsupported ring for solve: " + ring);
  }
  if (g.json) emit(out);
  else std::cout << text.str();
  return kExitPass;
}

int cmd_formulas(const Global& g, const std::string& which) {
  if (which != "all") throw std::invalid_argument("only '--check all' is supported");
  auto checks = check_all_formulas();
  bool pass = true;
  for (const auto& c : checks) pass = pass && c.pass;
  if (g.json) {
    Json list = Json::array();
    for (const auto& c : checks) list.push_back(cli::to_json(c));
    emit({{"checks", list}, {"pass", pass}});
  } else {
    for (const auto& c : checks)
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  [\"" << c.anchor << "\"]"
                << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
  }
  return pass ? kExitPass : kExitCertificate;
}

int cmd_degenerate(const Global& g, const PrimeField& F, const std::vector<std::uint32_t>& lambdas) {
  Model m = build_model("b14", g.seed, F);
  const SkewPolyMatrix lift = degeneration_lift(*m.bordered);
  Json rows = Json::array();
  std::optional<std::vector<mpq_class>> first;
  bool constant = true;
  std::ostringstream text;
  for (auto lam : lambdas) {
    control::heartbeat("degeneration fiber lambda=" + std::to_string(lam));
    const GradedIdeal S = saturate(degeneration_fiber(*m.bordered, lift, F.from_int(lam)), g.seed);
    const HilbertData h = hilbert_data(S);
    if (!first) first = h.hilbert_polynomial;
    else constant = constant && *first == h.hilbert_polynomial;
    const auto quadrics = monomial_count(S.nvars(), 2) - static_cast<std::uint64_t>(h.hf(2));
    rows.push_back({{"lambda", lam},
                    {"hilbert_polynomial", cli::rationals(h.hilbert_polynomial)},
                    {"degree", h.degree()},
                    {"h0_I2", quadrics}});
    text << "lambda=" << lam << "  HP=" << cli::polynomial_in_m(h.hilbert_polynomial) << "  degree=" << h.degree()
         << "  h0(I(2))=" << quadrics << '\n';
  }
  if (g.json) emit({{"seed", g.seed}, {"fibers", rows}, {"flat", constant}});
  else std::cout << text.str() << (constant ? "PASS" : "FAIL") << " Hilbert polynomial constant\n";
  return constant ? kExitPass : kExitCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pfaffian Calabi-Yau threefolds in P^6: models, certificates, classification"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--field", g.field, "coefficient field, GF(p)")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--timeout-sec", g.timeout_sec, "wall-clock budget in seconds (0: none)");
  app.add_flag("--quiet", g.quiet, "no progress lines on stderr");

  std::string model, out, matrix_out, target, model_flag, ring, surface = "k3", check = "all";
  int kmax = 4, bound = 2;
  bool singular = false, no_singular = false, no_rao = false, symmetric = false, evidence = false;
  std::optional<std::int64_t> d;
  std::vector<std::uint32_t> lambdas{0, 1, 2, 3};

  auto* build = app.add_subcommand("build", "construct a named model and write its ideal");
  build->add_option("model", model, "ci-12, pf-13, pf-14, b14, x11, b15")->required();
  build->add_option("--out", out, "ideal file to write");
  build->add_option("--matrix-out", matrix_out, "matrix file to write");

  auto* certify = app.add_subcommand("certify", "check invariants against the expectation table");
  certify->add_option("target", target, "model name or ideal file")->required();
  certify->add_option("--model", model_flag, "expectation entry for an ideal file");
  certify->add_option("--kmax", kmax)->capture_default_str();
  certify->add_flag("--singular", singular, "force the singular-scheme certificate");
  certify->add_flag("--no-singular", no_singular, "skip the singular-scheme certificate");

  auto* inv = app.add_subcommand("invariants", "report invariants of an ideal");
  inv->add_option("target", target, "model name or ideal file")->required();
  inv->add_option("--kmax", kmax)->capture_default_str();
  inv->add_flag("--singular", singular, "compute the singular scheme");
  inv->add_flag("--no-rao", no_rao, "skip the Hartshorne-Rao profile");

  auto* enumerate = app.add_subcommand("enumerate-bundles", "enumerate the quasi-Buchsbaum classification");
  enumerate->add_option("--bound", bound, "maximal |twist|")->capture_default_str();
  enumerate->add_flag("--evidence", evidence, "compute evidence for the degenerate excluded shape");

  auto* chow = app.add_subcommand("chow", "intersection-theory solvers");
  chow->require_subcommand(1);
  auto* solve = chow->add_subcommand("solve", "solve a double point identity");
  solve->add_option("--ring", ring, "Q4smooth, F_over_Q3, P4, P_over_P1_2O1_3O, P_over_P1_2O1_2O")->required();
  solve->add_option("--d", d, "degree (Q4smooth)");
  solve->add_flag("--symmetric", symmetric, "impose a = d - a (Q4smooth)");
  solve->add_option("--surface", surface, "k3 or abelian (P4)")->capture_default_str();
  auto* rings = chow->add_subcommand("rings", "list the built-in rings");

  auto* formulas = app.add_subcommand("formulas", "check every closed-form identity");
  formulas->add_option("--check", check)->capture_default_str();

  auto* degenerate = app.add_subcommand("degenerate", "Hilbert polynomials along the b14 degeneration");
  degenerate->add_option("--lambdas", lambdas, "fiber parameters")->delimiter(',');

  for (auto* sub : {build, certify, inv, enumerate, chow, formulas, degenerate}) sub->fallthrough();
  solve->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInput;
  }

  control::set_heartbeat(!g.quiet);
  if (g.timeout_sec > 0) control::set_time_limit(g.timeout_sec);
  try {
    const PrimeField F = CoefficientField::parse(g.field).prime_field();
    if (*build) return cmd_build(g, F, model, out, matrix_out);
    if (*certify) return cmd_certify(g, F, target, model_flag, kmax, singular, no_singular);
    if (*inv) return cmd_invariants(g, F, target, kmax, singular, no_rao);
    if (*enumerate) return cmd_enumerate(g, bound, evidence);
    if (*solve) return cmd_chow_solve(g, ring, d, symmetric, surface);
    if (*rings) {
      if (g.json) emit(Json(builtin_ring_names()));
      else
        for (const auto& r : builtin_ring_names()) std::cout << r << '\n';
      return kExitPass;
    }
    if (*formulas) return cmd_formulas(g, check);
    if (*degenerate) return cmd_degenerate(g, F, lambdas);
  } catch (const TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << '\n';
    return kExitTimeout;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ConstraintError& e) {
    std::cerr << "constraint error: " << e.what() << '\n';
    return kExitCertificate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCertificate;
  }
  return kExitInput;
}
