#include "doctest.h"
#include "pfcy/invariants.hpp"
#include "pfcy/models.hpp"

using namespace pfcy;

namespace {

const PrimeField F;

GradedIdeal ideal_of(const std::vector<std::string>& s, int n) {
  std::vector<Polynomial> g;
  for (const auto& t : s) g.push_back(parse_polynomial(t, F, n));
  return GradedIdeal(F, n, g);
}

}  // namespace

TEST_CASE("codimension check") {
  const GradedIdeal ci = build_model("ci-12", 1).ideal;
  CHECK(expected_codim_check(ci).ok);
  CHECK(expected_codim_check(ci).codim == 3);
  const GradedIdeal hyper = ideal_of({"x0*x1 - x2*x3"}, 7);
  CHECK_FALSE(expected_codim_check(hyper).ok);
  CHECK(expected_codim_check(hyper).codim == 1);
  CHECK(expected_codim_check(hyper, 1).ok);
}

TEST_CASE("a rank 6 quadric in P^6 has a single node") {
  const GradedIdeal cone = ideal_of({"x0*x1 + x2*x3 + x4*x5"}, 7).with_saturated_flag(true);
  const SingularScheme s = singular_scheme(cone, 1, 3);
  CHECK(s.certified);
  CHECK(s.dim() == 0);
  CHECK(s.degree() == 1);
  const NodeCount n = node_count(s);
  CHECK(n.kind == NodeCount::Kind::Nodes);
  CHECK(n.label() == "nodes(1)");
  // the vertex is the point e_6
  CHECK(ideal_contains(s.ideal, parse_polynomial("x0", F, 7)));
  CHECK_FALSE(ideal_contains(s.ideal, parse_polynomial("x6", F, 7)));
}

TEST_CASE("smooth and positive-dimensional singular loci") {
  const GradedIdeal smooth = ideal_of({"x0^2 + x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2"}, 7).with_saturated_flag(true);
  CHECK(node_count(smooth, 1, 1).label() == "smooth");
  // rank 4: singular along a line
  const GradedIdeal rank4 = ideal_of({"x0*x1 + x2*x3"}, 7).with_saturated_flag(true);
  const NodeCount n = node_count(rank4, 1, 1);
  CHECK(n.kind == NodeCount::Kind::PositiveDimensional);
  CHECK(n.dim == 2);
}

TEST_CASE("complete intersection threefold: invariants") {
  const VarietyReport r = variety_report(build_model("ci-12", 1).ideal, {1, 4, true, true, false});
  CHECK(r.codim == 3);
  CHECK(r.dim == 3);
  CHECK(r.degree == 12);
  REQUIRE(r.rao_h1.has_value());
  for (auto v : *r.rao_h1) CHECK(v == 0);
  REQUIRE(r.singular.has_value());
  CHECK(r.singular->empty());
  CHECK(r.graded_pieces.at(1) == 0u);
  CHECK(r.graded_pieces.at(2) == 2u);
  CHECK(r.generator_degrees == std::vector<int>{2, 2, 3});
}

TEST_CASE("Rao profile needs a Calabi-Yau Hilbert polynomial") {
  const GradedIdeal cubic = ideal_of({"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}, 4);
  CHECK_THROWS_AS(rao_h1_profile(cubic, 3), NotCalabiYau);
  const VarietyReport r = variety_report(cubic, {1, 3, false, true, true});
  CHECK_FALSE(r.rao_h1.has_value());
  CHECK_FALSE(r.rao_error.empty());
}

TEST_CASE("generic linear sections cut the dimension") {
  const GradedIdeal cubic = ideal_of({"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}, 4);
  const HilbertData h = hilbert_data(generic_linear_section(cubic, 1, 5));
  CHECK(h.nvars == 3);
  CHECK(h.dim() == 0);
  CHECK(h.degree() == 3);
  // property: degree is preserved for several seeds
  const GradedIdeal ci = build_model("ci-12", 2).ideal;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const HilbertData s = hilbert_data(generic_linear_section(ci, 2, seed));
    CHECK(s.dim() == 1);
    CHECK(s.degree() == 12);
  }
}
