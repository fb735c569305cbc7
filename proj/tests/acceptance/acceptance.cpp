// Acceptance runner: one PASS/FAIL/ATTEMPTED line per criterion.
//
//   acceptance [--criterion N]

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pfcy/bundles.hpp"
#include "pfcy/chow.hpp"
#include "pfcy/control.hpp"
#include "pfcy/formulas.hpp"
#include "pfcy/invariants.hpp"
#include "pfcy/models.hpp"
#include "support/oracles.hpp"

using namespace pfcy;

namespace {

// Wall-clock budgets in seconds.
constexpr double kBudgetEnumeration = 1.0;
constexpr double kBudgetSolver = 1.0;
constexpr double kBudgetDegree14PerSeed = 600;
constexpr double kBudgetDegree13PerSeed = 600;
constexpr double kBudgetCompleteIntersection = 300;
constexpr double kBudgetB14PerSeed = 1800;
constexpr double kBudgetDegeneration = 2700;
constexpr double kBudgetX11PerSeed = 1800;
constexpr double kBudgetB15Degree = 1800;
constexpr double kBudgetB15Total = 7200;
constexpr double kBudgetProperties = 300;
constexpr double kBudgetBridge = 1800;

const std::vector<std::uint64_t> kSeeds{1, 2, 3};
constexpr std::uint64_t kX11MaxSeed = 10;
constexpr std::uint64_t kB15Seed = 1;

enum class Status { Pass, Fail, Attempted };

struct Outcome {
  Status status = Status::Fail;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Collects named checks; the first failure is kept for the summary line.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  Outcome outcome(const std::string& summary) const {
    if (ok()) return {Status::Pass, summary + " (" + std::to_string(count_) + " checks)"};
    return {Status::Fail, "failed: " + failure_};
  }

 private:
  std::size_t count_ = 0;
  std::string failure_;
};

std::string str(const mpq_class& q) { return q.get_str(); }

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << "s";
  return o.str();
}

// Runs f under a time limit; TimeoutError is reported as a failure.
template <class F>
bool within(double budget, F&& f, std::string& note) {
  control::set_time_limit(budget);
  try {
    f();
  } catch (const TimeoutError&) {
    control::set_time_limit(0);
    note = "exceeded budget " + fmt(budget);
    return false;
  }
  control::set_time_limit(0);
  return true;
}

VarietyReport report_for(const Model& m, std::uint64_t seed, bool singular, bool rao) {
  ReportOptions o;
  o.seed = seed;
  o.kmax = 4;
  o.singular = singular;
  o.rao = rao;
  o.assume_saturated = m.maximal_pfaffian;
  return variety_report(m.ideal, o);
}

std::uint64_t h0(const VarietyReport& r, int k) { return r.graded_pieces.at(static_cast<std::size_t>(k)); }

bool rao_is(const VarietyReport& r, const std::vector<std::int64_t>& v) { return r.rao_h1 && *r.rao_h1 == v; }

// ---------------------------------------------------------------------------

Outcome criterion1() {
  const std::vector<std::pair<std::string, std::string>> expected{
      {"1a", "2 O(2) + O(-2)"},
      {"1b", "O(2) + O(1) + O(-1)"},
      {"1c", "O(2) + 2 O(0)"},
      {"1d", "2 O(1) + O(0)"},
      {"1e", "O(1) + 4 O(0)"},
      {"1f", "7 O(0)"},
      {"2a", "Omega^1(1) + O(1)"},
      {"2b", "Omega^1(1) + 3 O(0)"},
      {"excluded:degenerate", "2 O(1) + 2 O(0) + O(-1)"},
      {"excluded:singular", "3 O(1) + 2 O(-1)"}};
  Checks c;
  Clock clock;
  for (int bound = 2; bound <= 5; ++bound) {
    const Classification cl = enumerate_classification(bound);
    std::vector<std::pair<std::string, std::string>> got;
    for (const auto& e : cl.accepted) {
      got.push_back({e.verdict.label, e.spec.to_string()});
      if (e.verdict.kind == Verdict::Kind::Excluded)
        c.expect(!e.verdict.evidence.empty(), "excluded shape " + e.spec.to_string() + " carries no flag at bound " +
                                                   std::to_string(bound));
    }
    c.expect(got == expected, "list differs at bound " + std::to_string(bound));
  }
  const double t = clock.seconds();
  c.expect(t < kBudgetEnumeration, "bounds 2..5 took " + fmt(t));
  return c.outcome("10 entries identical for bounds 2..5 in " + fmt(t));
}

Outcome criterion2() {
  Checks c;
  Clock clock;
  const auto s = solve_classification_equation("smooth4quadric", 11, 41);
  std::map<std::int64_t, std::vector<std::int64_t>> got;
  for (const auto& x : s) got[x.d] = x.a;
  c.expect(got == std::map<std::int64_t, std::vector<std::int64_t>>{{12, {6}}, {13, {6, 7}}, {14, {7}}},
           "solution sets differ");
  std::vector<std::int64_t> sym;
  for (const auto& x : solve_classification_equation("smooth5quadric", 11, 41)) sym.push_back(x.d);
  c.expect(sym == std::vector<std::int64_t>{12, 14}, "symmetric constraint does not exclude 13");
  c.expect(clock.seconds() < kBudgetSolver, "took " + fmt(clock.seconds()));
  return c.outcome("d in {12,13,14} with a-sets {6},{6,7},{7}; symmetric gives {12,14}");
}

Outcome criterion3() {
  Checks c;
  Clock clock;
  std::vector<std::int64_t> b0, bh;
  for (const auto& x : solve_classification_equation("cone", 11, 41)) (x.b == 0 ? b0 : bh).push_back(x.d);
  c.expect(b0 == std::vector<std::int64_t>{12, 14}, "b=0 solutions differ");
  c.expect(bh == std::vector<std::int64_t>{13}, "b=1/2 solutions differ");
  // the discrepancy is 2(a-6)(a-d+7) up to sign
  const QPolynomial disc = cone_discrepancy();
  for (long d = 11; d <= 41; ++d)
    for (long a = -20; a <= 40; ++a) {
      QPolynomial v = params::substitute(disc, 0, params::constant(d));
      v = params::substitute(v, 1, params::constant(a));
      const mpq_class x = params::value(v);
      c.expect(abs(x) == abs(mpq_class(2 * (a - 6) * (a - d + 7))), "discrepancy is not (a-6)(a-d+7)");
    }
  c.expect(clock.seconds() < kBudgetSolver, "took " + fmt(clock.seconds()));
  return c.outcome("b=0 -> {12,14}, b=1/2 -> {13}");
}

Outcome criterion4() {
  Checks c;
  Clock clock;
  c.expect(fiber_degrees(2) == std::vector<std::int64_t>{4, 6}, "K3 fiber degrees differ");
  c.expect(fiber_degrees(0) == std::vector<std::int64_t>{10}, "abelian fiber degrees differ");
  std::vector<std::int64_t> all = fiber_degrees(2);
  for (auto y : fiber_degrees(0)) all.push_back(y);
  std::vector<std::pair<std::string, std::int64_t>> got;
  for (const auto& f : fibered_classes(all)) got.push_back({f.description, f.d.value_or(-1)});
  const std::vector<std::pair<std::string, std::int64_t>> expected{
      {"4*xi^2 + 3*h*xi", 11}, {"6*xi^2 + (d - 12)*h*xi", -1}, {"10*xi^2 - 3*h*xi", 17}};
  c.expect(got == expected, "fibered classes differ");
  c.expect(clock.seconds() < kBudgetSolver, "took " + fmt(clock.seconds()));
  return c.outcome("K3 {4,6}, abelian {10}; classes 4xi^2+3hxi (d=11), 6xi^2+(d-12)hxi, 10xi^2-3hxi (d=17)");
}

Outcome criterion5() {
  Checks c;
  const mpq_class at11 = pushforward_c2_closed_form(11), at15 = pushforward_c2_closed_form(15);
  bool positive = true;
  for (long d = -100; d <= 100; ++d) positive = positive && pushforward_c2_closed_form(d) > 0;
  // For comparison: the class 4xi^2 + 3h xi that X_11 actually has.
  std::string x11_class = "n/a";
  if (const auto pc = pushforward_chern_for_class(4, params::constant(3))) x11_class = str(params::value(pc->c2));
  c.expect(at11 == 1, "closed form at d=11 is " + str(at11) + ", required 1 (the class 4xi^2+3hxi of X_11 gives " +
                          x11_class + ")");
  c.expect(at15 == 3, "closed form at d=15 is " + str(at15) + ", required 3");
  c.expect(positive, "closed form not positive on [-100,100]");
  return c.outcome("c2(11)=" + str(at11) + ", c2(15)=" + str(at15) + ", positive on [-100,100]");
}

Outcome criterion6() {
  Checks c;
  const auto hp = chi_cy_polynomial(14);
  double worst = 0;
  for (auto seed : kSeeds) {
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    Clock clock;
    std::string note;
    VarietyReport r;
    const bool done = within(
        kBudgetDegree14PerSeed, [&] { r = report_for(build_model("pf-14", seed), seed, true, true); }, note);
    c.expect(done, tag + note);
    if (!done) continue;
    worst = std::max(worst, clock.seconds());
    c.expect(r.codim == 3, tag + "codim " + std::to_string(r.codim));
    c.expect(r.degree == 14, tag + "degree " + std::to_string(r.degree));
    c.expect(r.hilbert.hilbert_polynomial == hp, tag + "Hilbert polynomial differs");
    c.expect(r.hilbert.hp(1) == 7, tag + "HP(1) = " + str(r.hilbert.hp(1)));
    c.expect(h0(r, 2) == 0, tag + "h0(I(2)) = " + std::to_string(h0(r, 2)));
    c.expect(h0(r, 3) == 7, tag + "h0(I(3)) = " + std::to_string(h0(r, 3)));
    c.expect(rao_is(r, {0, 0, 0, 0}), tag + "rao profile not zero");
    c.expect(r.singular && r.singular->certified && r.singular->empty(), tag + "singular scheme not certified empty");
  }
  return c.outcome("seeds 1-3: codim 3, degree 14, HP (7/3)m^3+(14/3)m, h0(I(2))=0, h0(I(3))=7, aCM, smooth; "
                   "slowest seed " + fmt(worst));
}

Outcome criterion7() {
  Checks c;
  double worst = 0;
  for (auto seed : kSeeds) {
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    Clock clock;
    std::string note;
    VarietyReport r;
    const bool done = within(
        kBudgetDegree13PerSeed, [&] { r = report_for(build_model("pf-13", seed), seed, false, true); }, note);
    c.expect(done, tag + note);
    if (!done) continue;
    worst = std::max(worst, clock.seconds());
    c.expect(r.codim == 3, tag + "codim " + std::to_string(r.codim));
    c.expect(r.degree == 13, tag + "degree " + std::to_string(r.degree));
    c.expect(r.hilbert.hp(1) == 7, tag + "HP(1) = " + str(r.hilbert.hp(1)));
    c.expect(h0(r, 2) == 1, tag + "h0(I(2)) = " + std::to_string(h0(r, 2)));
    c.expect(rao_is(r, {0, 0, 0, 0}), tag + "rao profile not zero");
  }
  return c.outcome("seeds 1-3: codim 3, degree 13, HP(1)=7, h0(I(2))=1, aCM; slowest seed " + fmt(worst));
}

Outcome criterion8() {
  Checks c;
  Clock clock;
  std::string note;
  const bool done = within(
      kBudgetCompleteIntersection,
      [&] {
        for (auto seed : kSeeds) {
          const std::string tag = "seed " + std::to_string(seed) + ": ";
          const VarietyReport r = report_for(build_model("ci-12", seed), seed, true, false);
          c.expect(r.degree == 12, tag + "degree " + std::to_string(r.degree));
          c.expect(h0(r, 2) == 2, tag + "h0(I(2)) = " + std::to_string(h0(r, 2)));
          c.expect(r.singular && r.singular->certified && r.singular->empty(), tag + "not certified smooth");
        }
      },
      note);
  c.expect(done, note);
  return c.outcome("seeds 1-3: degree 12, h0(I(2))=2, smooth in " + fmt(clock.seconds()));
}

Outcome criterion9() {
  Checks c;
  double worst = 0;
  for (auto seed : kSeeds) {
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    Clock clock;
    std::string note;
    VarietyReport r;
    const bool done =
        within(kBudgetB14PerSeed, [&] { r = report_for(build_model("b14", seed), seed, false, true); }, note);
    c.expect(done, tag + note);
    if (!done) continue;
    worst = std::max(worst, clock.seconds());
    c.expect(r.codim == 3, tag + "codim " + std::to_string(r.codim));
    c.expect(r.degree == 14, tag + "degree " + std::to_string(r.degree));
    c.expect(h0(r, 2) == 1, tag + "h0(I(2)) = " + std::to_string(h0(r, 2)));
    c.expect(rao_is(r, {0, 1, 0, 0}), tag + "rao profile is not (0,1,0,0)");
  }
  return c.outcome("seeds 1-3: codim 3, degree 14, h0(I(2))=1, rao (0,1,0,0); slowest seed " + fmt(worst));
}

Outcome criterion10() {
  Checks c;
  Clock clock;
  std::string note, summary;
  const bool done = within(
      kBudgetDegeneration,
      [&] {
        const Model m = build_model("b14", 1);
        const SkewPolyMatrix lift = degeneration_lift(*m.bordered);
        std::vector<mpq_class> first;
        for (std::uint32_t lambda : {0u, 1u, 2u, 3u}) {
          const GradedIdeal S = saturate(degeneration_fiber(*m.bordered, lift, m.ideal.field().from_int(lambda)), 1);
          const HilbertData h = hilbert_data(S);
          if (first.empty()) first = h.hilbert_polynomial;
          const std::string tag = "lambda=" + std::to_string(lambda) + ": ";
          c.expect(h.hilbert_polynomial == first, tag + "Hilbert polynomial differs from lambda=0");
          const std::uint64_t q = graded_piece_dim(S, 2);
          c.expect(q == (lambda == 0 ? 1u : 0u), tag + "h0(I(2)) = " + std::to_string(q));
          summary += (summary.empty() ? "" : ", ") + std::to_string(q);
        }
      },
      note);
  c.expect(done, note);
  return c.outcome("HP constant over lambda=0..3, h0(I(2)) = " + summary + " in " + fmt(clock.seconds()));
}

Outcome criterion11() {
  Checks c;
  std::vector<std::uint64_t> achieved;
  std::string last;
  for (std::uint64_t seed = 1; seed <= kX11MaxSeed && achieved.empty(); ++seed) {
    std::string note;
    VarietyReport r;
    const bool done =
        within(kBudgetX11PerSeed, [&] { r = report_for(build_model("x11", seed), seed, true, false); }, note);
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    if (!done) {
      last = tag + note;
      continue;
    }
    c.expect(r.degree == 11, tag + "degree " + std::to_string(r.degree));
    if (r.singular && r.singular->certified && r.singular->dim() == 0 && r.singular->degree() == 1)
      achieved.push_back(seed);
    else
      last = tag + "singular scheme is not one reduced point";
  }
  c.expect(!achieved.empty(), "no seed in 1.." + std::to_string(kX11MaxSeed) + " (" + last + ")");
  return c.outcome(achieved.empty() ? "" : "degree 11, singular scheme of dimension 0 and degree 1 at seed " +
                                               std::to_string(achieved[0]));
}

Outcome criterion12() {
  Clock clock;
  std::string note;
  const Model m = build_model("b15", kB15Seed);
  HilbertData h;
  if (!within(kBudgetB15Degree, [&] { h = hilbert_data(m.ideal); }, note))
    return {Status::Fail, "degree certification " + note};
  if (h.codim() != 3 || h.degree() != 15)
    return {Status::Fail, "codim " + std::to_string(h.codim()) + ", degree " + std::to_string(h.degree())};
  const double degree_time = clock.seconds();
  if (degree_time > kBudgetB15Degree) return {Status::Fail, "degree certification took " + fmt(degree_time)};

  VarietyReport r;
  const bool done = within(
      kBudgetB15Total - degree_time, [&] { r = report_for(m, kB15Seed, true, false); }, note);
  const std::string base = "codim 3, degree 15 in " + fmt(degree_time);
  if (!done) return {Status::Attempted, base + "; singular scheme " + note};
  if (!r.singular || !r.singular->certified) return {Status::Attempted, base + "; singular scheme not certified"};
  if (r.singular->dim() != 0 || r.singular->degree() != 3)
    return {Status::Fail, base + "; singular scheme " + node_count(*r.singular).label()};
  return {Status::Pass, base + "; singular scheme of dimension 0 and degree 3 at seed " + std::to_string(kB15Seed) +
                            " in " + fmt(clock.seconds())};
}

Outcome criterion13() {
  using namespace pfcy::oracle;
  Checks c;
  Clock clock;
  std::string note;
  const PrimeField F;
  const bool done = within(
      kBudgetProperties,
      [&] {
        for (int n : {4, 6, 8})
          for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            const SkewPolyMatrix M = random_section(DegreePattern::uniform(n, 0), 1000 * n + seed, F, 0);
            const std::uint64_t pf = constant_value(pfaffian(M));
            c.expect(pf * pf % kP == det_mod(scalar_entries(M)), "Pf^2 != det at size " + std::to_string(n));
          }

        SplitMix64 rng(13);
        for (const auto& name : model_names()) {
          const Model m = build_model(name, 1, F);
          const auto& gens = m.ideal.generators();
          const Reducer red(m.ideal.basis());
          int top = 0;
          for (const auto& g : gens) top = std::max(top, g.degree());
          for (int t = 0; t < 100; ++t)
            c.expect(red.reduces_to_zero(random_combination(gens, top + t % 2, rng)),
                     name + ": a combination of generators does not reduce to zero");
        }

        std::vector<Polynomial> cubic;
        for (const char* s : {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}) cubic.push_back(parse_polynomial(s, F, 4));
        const std::vector<Polynomial> ci{random_homogeneous(F, 5, 2, rng), random_homogeneous(F, 5, 2, rng),
                                         random_homogeneous(F, 5, 3, rng)};
        for (const auto& [gens, n] : {std::pair{cubic, 4}, std::pair{ci, 5}}) {
          const HilbertData h = hilbert_data(GradedIdeal(F, n, gens));
          for (int k = 0; k <= 8; ++k)
            c.expect(h.hf(k) == brute_force_hf(gens, n, k), "Hilbert function differs at k=" + std::to_string(k));
        }
      },
      note);
  c.expect(done, note);
  return c.outcome("Pf^2=det (150 matrices), zero reduction (100 per model), Hilbert function k<=8 in " +
                   fmt(clock.seconds()));
}

Outcome criterion14() {
  Checks c;
  Clock clock;
  std::string note;
  const bool done = within(
      kBudgetBridge,
      [&] {
        for (const auto& [name, d] :
             std::vector<std::pair<std::string, std::int64_t>>{{"ci-12", 12}, {"pf-13", 13}, {"pf-14", 14}, {"b14", 14}})
          for (auto seed : kSeeds) {
            const VarietyReport r = report_for(build_model(name, seed), seed, false, false);
            const auto expected = chi_cy_polynomial(d);
            const auto& got = r.hilbert.hilbert_polynomial;
            c.expect(got.size() == expected.size(), name + ": Hilbert polynomial has the wrong degree");
            for (std::size_t i = 0; i < std::min(got.size(), expected.size()); ++i)
              c.expect(got[i] == expected[i], name + " seed " + std::to_string(seed) + ": coefficient of m^" +
                                                  std::to_string(i) + " is " + str(got[i]) + ", chi_cy gives " +
                                                  str(expected[i]));
          }
      },
      note);
  c.expect(done, note);
  return c.outcome("ci-12, pf-13, pf-14, b14 (seeds 1-3) match chi_cy in " + fmt(clock.seconds()));
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> all{
      {"classification enumeration", criterion1},
      {"smooth quadric solver", criterion2},
      {"cone solver", criterion3},
      {"fiber-degree solver", criterion4},
      {"pushforward Chern class", criterion5},
      {"degree-14 model", criterion6},
      {"degree-13 model", criterion7},
      {"complete intersection (2,2,3)", criterion8},
      {"B_14 bordered model", criterion9},
      {"degeneration family", criterion10},
      {"X_11 node", criterion11},
      {"B_15 nodes", criterion12},
      {"property suites", criterion13},
      {"Riemann-Roch bridge", criterion14}};
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-14)")->check(CLI::Range(1, 14));
  CLI11_PARSE(app, argc, argv);

  bool failed = false;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (only && n != only) continue;
    const auto& [title, run] = criteria()[i];
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {Status::Fail, std::string("error: ") + e.what()};
    }
    const char* s = o.status == Status::Pass ? "PASS" : o.status == Status::Fail ? "FAIL" : "ATTEMPTED";
    std::cout << "criterion " << n << ": " << s << "  " << title << "  " << o.detail << std::endl;
    failed = failed || o.status == Status::Fail;
  }
  return failed ? 1 : 0;
}
