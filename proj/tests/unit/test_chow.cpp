#include "doctest.h"
#include "pfcy/chow.hpp"
#include "pfcy/rng.hpp"

using namespace pfcy;

namespace {

mpq_class frac(long n, long d) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}


mpq_class at(const QPolynomial& p, long d, long a, long b = 0) {
  QPolynomial q = params::substitute(p, 0, params::constant(d));
  q = params::substitute(q, 1, params::constant(a));
  q = params::substitute(q, 2, params::constant(b));
  return params::value(q);
}

ChowClass gen(const std::string& ring, const std::string& g) { return ChowClass::generator(builtin_ring(ring), g); }

mpq_class integral(const ChowClass& c) { return params::value(c.integrate()); }

ChowClass random_class(const std::shared_ptr<const ChowRing>& ring, int codim, SplitMix64& rng) {
  ChowClass out(ring);
  for (const auto& m : ring->monomials(codim)) {
    ChowClass t = ChowClass::one(ring);
    for (std::size_t i = 0; i < ring->generators.size(); ++i)
      for (int k = 0; k < m.exponent(static_cast<int>(i)); ++k) t = t * ChowClass::generator(ring, ring->generators[i]);
    out = out + t.scale(mpq_class(static_cast<long>(rng.below(11)) - 5));
  }
  return out;
}

}  // namespace

TEST_CASE("smooth quadric fourfold") {
  const ChowClass H = gen("Q4smooth", "H"), t1 = gen("Q4smooth", "theta1"), t2 = gen("Q4smooth", "theta2");
  CHECK(integral((t1 + t2).pow(2)) == 2);
  CHECK(integral(H.pow(4)) == 2);
  CHECK(integral(t1 * t2) == 0);
  for (long d = 1; d < 20; ++d)
    for (long a = -5; a < 10; ++a) {
      const ChowClass S = t1.scale(mpq_class(a)) + t2.scale(mpq_class(d - a));
      CHECK(integral(S * H * H) == d);
      CHECK(integral(S * S) == a * a + (d - a) * (d - a));
    }
  const ChowClass c = tangent_chern(builtin_ring("Q4smooth"));
  CHECK(integral(c.component(1) * H.pow(3)) == 8);
  CHECK(integral(c.component(2) * H * H) == 14);
  CHECK(integral(c.component(4)) == 6);  // Euler characteristic of Q4
}

TEST_CASE("projective spaces") {
  const ChowClass t = gen("P2", "t");
  const ChowClass c = tangent_chern(builtin_ring("P2"));
  CHECK(integral(c.component(1) * t) == 3);
  CHECK(integral(c.component(2)) == 3);
  const ChowClass c6 = tangent_chern(builtin_ring("P6"));
  const ChowClass H = gen("P6", "H");
  CHECK(integral(c6.component(2) * H.pow(4)) == 21);
  CHECK(integral(c6.component(3) * H.pow(3)) == 35);
  CHECK(integral(c6.component(6)) == 7);
  CHECK(H.pow(7).is_zero());
}

TEST_CASE("scrolls over P^1") {
  for (const char* name : {"P_over_P1_2O1_3O", "P_over_P1_2O1_2O"}) {
    const auto ring = builtin_ring(name);
    const ChowClass xi = ChowClass::generator(ring, "xi"), h = ChowClass::generator(ring, "h");
    const unsigned n = static_cast<unsigned>(ring->dim);
    // xi^n = 2 xi^{n-1} h
    CHECK(integral(xi.pow(n)) == 2);
    CHECK(integral(xi.pow(n - 1) * h) == 1);
    CHECK(integral(xi.pow(n - 2) * h * h) == 0);
  }
  const ChowClass xi = gen("F_over_Q3", "xi"), h = gen("F_over_Q3", "h");
  CHECK(integral(h.pow(3) * xi) == 2);
  CHECK(integral(h.pow(4)) == 0);
}

TEST_CASE("property: relations are numerically zero in every ring") {
  for (const auto& name : builtin_ring_names()) {
    const auto ring = builtin_ring(name);
    for (const auto& r : relation_classes(ring)) CHECK(r.numerically_zero());
  }
}

TEST_CASE("property: integration is linear and the product is commutative") {
  SplitMix64 rng(77);
  for (const auto& name : builtin_ring_names()) {
    const auto ring = builtin_ring(name);
    for (int t = 0; t < 10; ++t) {
      const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(ring->dim + 1)));
      const ChowClass x = random_class(ring, k, rng), y = random_class(ring, k, rng),
                      z = random_class(ring, ring->dim - k, rng);
      CHECK(integral((x + y) * z) == integral(x * z) + integral(y * z));
      CHECK(integral(x.scale(mpq_class(3)) * z) == 3 * integral(x * z));
      CHECK(integral(x * z) == integral(z * x));
      CHECK(((x * z) - (z * x)).is_zero());
    }
  }
}

TEST_CASE("Chern power series") {
  const auto ring = builtin_ring("P6");
  const ChowClass H = ChowClass::generator(ring, "H");
  const ChowClass inv = chern_power(H, params::constant(-1));
  const ChowClass prod = inv * chern_power(H, params::constant(1));
  CHECK((prod - ChowClass::one(ring)).is_zero());
  // (1 + H)^{1/2} squared
  const ChowClass half = chern_power(H, params::constant(mpq_class(1, 2)));
  CHECK(((half * half) - (ChowClass::one(ring) + H)).is_zero());
}

TEST_CASE("double point discrepancy on Q4 matches the hand computation") {
  // S^2 - c_2(N) with c(T) = 1 + 4H + 7H^2, K_S = H|_S, chi = 7:
  // c_2(N) = 7d + 5d - (84 - d)
  const ChowClass H = gen("Q4smooth", "H"), t1 = gen("Q4smooth", "theta1"), t2 = gen("Q4smooth", "theta2");
  const ChowClass S = t1.scale(params::a()) + t2.scale(params::d() - params::a());
  const QPolynomial disc = double_point_discrepancy(S, H);
  for (long d = 0; d < 30; ++d)
    for (long a = -10; a < 20; ++a) CHECK(at(disc, d, a) == a * a + (d - a) * (d - a) - (13 * d - 84));
}

TEST_CASE("cone discrepancy") {
  const QPolynomial disc = cone_discrepancy();
  // 2(a - 6)(a - d + 7) up to sign, with d = 2a + 2b
  for (long d = 0; d < 30; ++d)
    for (long a = -5; a < 20; ++a) {
      const mpq_class v = at(disc, d, a);
      CHECK(abs(v) == abs(mpq_class(2 * (a - 6) * (a - d + 7))));
    }
  // the identity 2da - 2a^2 = 2a + 12d - 84 on its zero set
  for (long d = 0; d < 30; ++d)
    for (long a = -5; a < 20; ++a)
      if (at(disc, d, a) == 0) CHECK(2 * d * a - 2 * a * a == 2 * a + 12 * d - 84);
}

TEST_CASE("surfaces in P^4 with trivial canonical class") {
  for (long a = 1; a < 40; ++a) {
    CHECK(at(fiber_discrepancy(2), 0, a) == a * a - 10 * a + 24);
    CHECK(at(fiber_discrepancy(0), 0, a) == a * a - 10 * a);
  }
  CHECK(fiber_degrees(2) == std::vector<std::int64_t>{4, 6});
  CHECK(fiber_degrees(0) == std::vector<std::int64_t>{10});
}

TEST_CASE("solutions on the smooth quadric") {
  const auto sols = solve_surface_class(13);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].a + sols[1].a == 13);
  CHECK(solve_surface_class(13, true).empty());
  CHECK(solve_surface_class(12, true).size() == 1);
  CHECK(solve_surface_class(15).empty());
}

TEST_CASE("fibered classes and the exceptional divisor") {
  const auto classes = fibered_classes({4, 6, 10});
  REQUIRE(classes.size() == 3);
  bool general = false;
  for (const auto& c : classes) general |= !c.d.has_value();
  CHECK(general);
  // (alpha xi^2 + gamma h xi)(xi^3 - 2 xi^2 h) = alpha * 0 + gamma * 1 on P(2O(1)+3O)
  const auto ring = builtin_ring("P_over_P1_2O1_3O");
  const ChowClass xi = ChowClass::generator(ring, "xi"), h = ChowClass::generator(ring, "h");
  for (long alpha : {4, 6, 10})
    for (long gamma : {-3, 0, 3}) {
      const ChowClass X = (xi * xi).scale(mpq_class(alpha)) + (h * xi).scale(mpq_class(gamma));
      const mpq_class direct = integral(X * (xi.pow(3) - (xi * xi * h).scale(mpq_class(2))));
      CHECK(params::value(exceptional_intersection(params::constant(alpha), params::constant(gamma))) == direct);
      CHECK(direct == gamma);
    }
}

TEST_CASE("pushforward Chern classes") {
  // 6 xi^2 + (d - 12) h xi
  const auto pc = pushforward_chern_for_class(6, params::d() - params::constant(12));
  REQUIRE(pc.has_value());
  for (long d = 11; d <= 41; ++d) CHECK(at(pc->c2, d, 0) == frac(d * d - 29 * d + 216, 2));
  const auto split = fiber_split(6, params::constant(3));
  REQUIRE(split.has_value());
  CHECK(split->p + split->q == 5);
  CHECK_FALSE(fiber_split(5, params::constant(0)).has_value());
}
