#include "doctest.h"
#include "pfcy/expectations.hpp"
#include "pfcy/formulas.hpp"
#include "pfcy/models.hpp"

using namespace pfcy;

namespace {

void check_all_pass(const VarietyReport& r, const std::string& name) {
  const ModelExpectation* e = expectation_for(name);
  REQUIRE(e != nullptr);
  const auto results = check_report(r, *e);
  CHECK_FALSE(results.empty());
  for (const auto& c : results) CHECK_MESSAGE(c.pass, name << " " << c.name << ": expected " << c.expected << ", got " << c.got);
}

}  // namespace

TEST_CASE("every model has recorded expectations") {
  for (const auto& name : model_names()) {
    const ModelExpectation* e = expectation_for(name);
    REQUIRE(e != nullptr);
    CHECK(e->codim == 3);
    CHECK_FALSE(e->anchor.empty());
    CHECK_FALSE(e->seeds.empty());
  }
  CHECK(expectation_for("no-such-model") == nullptr);
  CHECK_THROWS_AS(build_model("no-such-model", 1), std::invalid_argument);
  CHECK(is_model_name("b15"));
}

TEST_CASE("models are deterministic in the seed") {
  const Model a = build_model("pf-13", 4), b = build_model("pf-13", 4), c = build_model("pf-13", 5);
  REQUIRE(a.ideal.generators().size() == b.ideal.generators().size());
  for (std::size_t i = 0; i < a.ideal.generators().size(); ++i) CHECK(a.ideal.generators()[i] == b.ideal.generators()[i]);
  CHECK_FALSE(a.ideal.generators()[0] == c.ideal.generators()[0]);
  CHECK(a.maximal_pfaffian);
  CHECK_FALSE(a.provenance.empty());
}

TEST_CASE("Hilbert polynomials match the Calabi-Yau Riemann-Roch polynomial") {
  for (const auto& [name, d] : std::vector<std::pair<std::string, std::int64_t>>{{"ci-12", 12}, {"pf-13", 13}}) {
    ReportOptions opt;
    opt.assume_saturated = true;
    const VarietyReport r = variety_report(build_model(name, 1).ideal, opt);
    CHECK(r.degree == d);
    CHECK(r.hilbert.hilbert_polynomial == chi_cy_polynomial(d));
    for (std::int64_t m = 0; m < 8; ++m) CHECK(r.hilbert.hp(m) == chi_cy(d, m));
    check_all_pass(r, name);
  }
}

TEST_CASE("complete intersection model is smooth") {
  ReportOptions opt;
  opt.singular = true;
  const VarietyReport r = variety_report(build_model("ci-12", 2).ideal, opt);
  check_all_pass(r, "ci-12");
  REQUIRE(r.singular.has_value());
  CHECK(r.singular->certified);
  CHECK(node_count(*r.singular).label() == "smooth");
}

TEST_CASE("x11 has one node") {
  ReportOptions opt;
  opt.singular = true;
  opt.rao = false;
  const VarietyReport r = variety_report(build_model("x11", 1).ideal, opt);
  check_all_pass(r, "x11");
  CHECK(r.generator_degrees == std::vector<int>{2, 2, 2, 4, 4});
}

TEST_CASE("b14 saturation is generated by the Euler quadric and quartics") {
  const Model m = build_model("b14", 1);
  const GradedIdeal S = saturate(m.ideal, 1);
  REQUIRE(m.containment_quadric.has_value());
  CHECK(ideal_contains(S, *m.containment_quadric));
  CHECK_FALSE(ideal_contains(m.ideal, *m.containment_quadric));
  std::map<int, int> degrees;
  for (const auto& g : S.generators()) ++degrees[g.degree()];
  CHECK(degrees == std::map<int, int>{{2, 1}, {4, 14}});
  CHECK(hilbert_data(S).hilbert_polynomial == chi_cy_polynomial(14));
}

TEST_CASE("certificates report mismatches") {
  ReportOptions opt;
  opt.assume_saturated = true;
  const VarietyReport r = variety_report(build_model("ci-12", 1).ideal, opt);
  const auto results = check_report(r, *expectation_for("pf-14"));
  bool any_fail = false;
  for (const auto& c : results) any_fail |= !c.pass;
  CHECK(any_fail);
}
