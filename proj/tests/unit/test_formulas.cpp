#include <set>

#include "doctest.h"
#include "pfcy/formulas.hpp"

using namespace pfcy;

namespace {

mpq_class frac(long n, long d) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("Riemann-Roch polynomial") {
  for (std::int64_t d = 1; d <= 60; ++d) {
    for (std::int64_t m = -10; m <= 10; ++m) {
      // (1/6) m d (m^2 - 1) is an integer: m(m^2-1) is divisible by 6
      CHECK(chi_cy(d, m) == m * d * (m * m - 1) / 6 + 7 * m);
      CHECK(chi_cy(d, -m) == -chi_cy(d, m));
    }
    const auto p = chi_cy_polynomial(d);
    REQUIRE(p.size() == 4);
    CHECK(p[0] == 0);
    CHECK(p[1] == mpq_class(7) - frac(d, 6));
    CHECK(p[3] == frac(d, 6));
  }
  CHECK(chi_cy(14, 2) == 28);
  CHECK(chi_cy(13, 2) == 27);
}

TEST_CASE("H.c2 and the Euler characteristic") {
  for (std::int64_t d = 1; d <= 60; ++d) {
    CHECK(h_dot_c2(d) == 84 - 2 * d);
    CHECK(euler_dpf(d) == -d * d + 49 * d - 588);
  }
  CHECK(euler_dpf(14) == -98);
  CHECK(euler_dpf(42) != 0);
}

TEST_CASE("degree window") {
  const DegreeWindow w = degree_window();
  CHECK(w.lower == 11);
  CHECK(w.upper == 41);
  // brute force: H.c2 >= 0 and H.c2 = 0 excluded when chi_top would vanish
  std::int64_t upper = 0;
  for (std::int64_t d = 1; d <= 100; ++d)
    if (h_dot_c2(d) > 0 || (h_dot_c2(d) == 0 && euler_dpf(d) == 0)) upper = d;
  CHECK(w.upper == upper);
  REQUIRE(w.exclusions.size() == 1);
  CHECK(w.exclusions[0].first == 42);
}

TEST_CASE("Picard rank one") {
  for (std::int64_t d = 11; d <= 41; ++d) CHECK(picard_rank_one_allows(d) == (euler_dpf(d) <= 2));
  for (std::int64_t d = 11; d <= 21; ++d) CHECK(picard_rank_one_allows(d));
  for (std::int64_t d = 22; d <= 27; ++d) CHECK_FALSE(picard_rank_one_allows(d));
}

TEST_CASE("smooth quadric solutions against a brute-force search") {
  const auto sols = solve_classification_equation("smooth4quadric");
  std::set<std::pair<std::int64_t, std::int64_t>> got, expected;
  for (const auto& s : sols)
    for (auto a : s.a) got.insert({s.d, a});
  for (std::int64_t d = 11; d <= 41; ++d)
    for (std::int64_t a = -kSolverRange; a <= kSolverRange; ++a) {
      // [S]^2 = c_2(N): a^2 + (d-a)^2 = 13 d - 84
      if (a * a + (d - a) * (d - a) == 13 * d - 84) expected.insert({d, a});
    }
  CHECK(got == expected);
  // property: a -> d - a preserves the solution set
  for (const auto& [d, a] : got) CHECK(got.count({d, d - a}) == 1);
  std::set<std::int64_t> ds;
  for (const auto& s : sols) ds.insert(s.d);
  CHECK(ds == std::set<std::int64_t>{12, 13, 14});

  std::set<std::int64_t> sym;
  for (const auto& s : solve_classification_equation("smooth5quadric")) sym.insert(s.d);
  CHECK(sym == std::set<std::int64_t>{12, 14});
}

TEST_CASE("cone solutions") {
  std::set<std::pair<std::int64_t, std::string>> got, expected;
  for (const auto& s : solve_classification_equation("cone")) {
    got.insert({s.d, s.label});
    REQUIRE(s.a.size() == 1);
    CHECK(mpq_class(s.d) == 2 * s.a[0] + 2 * s.b);
  }
  for (std::int64_t d = 11; d <= 41; ++d)
    for (int twice_b = 0; twice_b <= 1; ++twice_b) {
      if ((d - twice_b) % 2) continue;
      const std::int64_t a = (d - twice_b) / 2;
      if ((a - 6) * (a - d + 7) == 0) expected.insert({d, twice_b ? "b=1/2" : "b=0"});
    }
  CHECK(got == expected);
}

TEST_CASE("fiber degrees") {
  std::set<std::pair<std::int64_t, std::string>> got;
  for (const auto& s : solve_classification_equation("fiber")) got.insert({s.d, s.label});
  CHECK(got == std::set<std::pair<std::int64_t, std::string>>{{4, "K3"}, {6, "K3"}, {10, "abelian"}});
  CHECK_THROWS(solve_classification_equation("unknown"));
}

TEST_CASE("pushforward closed form") {
  for (std::int64_t d = -100; d <= 100; ++d) {
    const mpq_class v = pushforward_c2_closed_form(d);
    CHECK(v == frac(d * d - 29 * d + 216, 2));
    CHECK(v > 0);
  }
  CHECK(pushforward_c2_closed_form(15) == 3);
}

TEST_CASE("formula checks carry anchors") {
  const auto checks = check_all_formulas();
  CHECK(checks.size() >= 20);
  for (const auto& c : checks) {
    CHECK_FALSE(c.anchor.empty());
    CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
  }
}
