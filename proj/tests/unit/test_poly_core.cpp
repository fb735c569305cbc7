#include "doctest.h"
#include "pfcy/linalg.hpp"
#include "pfcy/polynomial.hpp"

using namespace pfcy;

namespace {

const PrimeField F;

Polynomial P(const std::string& s, int n = 3) { return parse_polynomial(s, F, n); }
QPolynomial Q(const std::string& s, int n = 3) { return parse_polynomial(s, RationalField(), n); }

}  // namespace

TEST_CASE("arithmetic examples") {
  const QPolynomial x0 = QPolynomial::variable(RationalField(), 3, 0), x1 = QPolynomial::variable(RationalField(), 3, 1);
  CHECK((x0 + x1) * (x0 + x1) == Q("x0^2 + 2*x0*x1 + x1^2"));
  const Polynomial p = P("3*x0^2*x1 - x2^3 + 7");
  CHECK((p * Polynomial(F, 3)).is_zero());
  CHECK(p * Polynomial::constant(F, 3, 1) == p);
  // 16001 * 2 = 32002 = -1 mod 32003
  const Polynomial a = P("16001*x0"), b = P("2*x0");
  CHECK(a * b == P("-x0^2"));
  CHECK((a * b).leading_coefficient() == 32002u);
}

TEST_CASE("field and variable-count mismatches throw") {
  const Polynomial a(PrimeField(101), 3);
  const Polynomial b = P("x0");
  CHECK_THROWS_AS(a + b, RingMismatch);
  CHECK_THROWS_AS(P("x0", 2) * P("x0", 3), RingMismatch);
}

TEST_CASE("partial derivatives") {
  const Polynomial p = P("x0^3*x1 + 5*x1^2*x2");
  CHECK(p.derivative(0) == P("3*x0^2*x1"));
  CHECK(p.derivative(1) == P("x0^3 + 10*x1*x2"));
  CHECK(p.derivative(2) == P("5*x1^2"));
  CHECK_THROWS(p.derivative(3));
  // in characteristic p the p-th power derivative vanishes
  const PrimeField f7(7);
  CHECK(parse_polynomial("x0^7", f7, 1).derivative(0).is_zero());
}

TEST_CASE("parse and print round trip") {
  for (const char* s : {"x0^2 - 3*x1*x2 + x2^2", "-x0", "5", "x0*x1*x2 - 2*x1^3"}) {
    const Polynomial p = P(s);
    CHECK(P(p.to_string()) == p);
  }
  CHECK(Q("1/2*x0 - 3/4*x1").to_string() == Q("-3/4*x1 + 1/2*x0").to_string());
  CHECK_THROWS_AS(P("x0 +"), ParseError);
  CHECK_THROWS_AS(P("x7"), ParseError);
}

TEST_CASE("monomial orders") {
  const Monomial a = Monomial::from_exponents({2, 0, 1}), b = Monomial::from_exponents({1, 2, 0});
  // degrevlex: same degree, compare last variable, smaller exponent wins
  CHECK(MonomialOrder::degrevlex().greater(b, a));
  CHECK(MonomialOrder::lex().greater(a, b));
  const Monomial c = Monomial::from_exponents({0, 0, 4});
  CHECK(MonomialOrder::degrevlex().greater(c, a));
  CHECK(MonomialOrder::block(1).greater(a, c));
  CHECK(MonomialOrder::parse("block(2)") == MonomialOrder::block(2));
}

TEST_CASE("property: ring axioms on random forms") {
  SplitMix64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const Polynomial a = random_homogeneous(F, 4, 1 + t % 3, rng), b = random_homogeneous(F, 4, 2, rng),
                     c = random_homogeneous(F, 4, 1, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK((a * b).is_homogeneous());
    CHECK((a * b).degree() == a.degree() + b.degree());
    // evaluation is a ring homomorphism
    std::vector<PrimeField::Element> pt;
    for (int i = 0; i < 4; ++i) pt.push_back(static_cast<PrimeField::Element>(rng.below(F.characteristic())));
    CHECK((a * b).evaluate(pt) == F.mul(a.evaluate(pt), b.evaluate(pt)));
    CHECK((a + c).evaluate(pt) == F.add(a.evaluate(pt), c.evaluate(pt)));
    // Euler's identity: sum x_i d/dx_i f = deg(f) f
    Polynomial euler(F, 4);
    for (int i = 0; i < 4; ++i) euler = euler + Polynomial::variable(F, 4, i) * a.derivative(i);
    CHECK(euler == a.scale(F.from_int(a.degree())));
  }
}

TEST_CASE("linear substitution") {
  const Polynomial p = P("x0^2 + x1*x2");
  // x0 -> y0, x1 -> y0 + y1, x2 -> y1
  const std::vector<std::vector<PrimeField::Element>> L{{1, 0}, {1, 1}, {0, 1}};
  CHECK(substitute_linear(p, L) == parse_polynomial("x0^2 + x0*x1 + x1^2", F, 2));
}

TEST_CASE("field arithmetic") {
  CHECK(F.characteristic() == 32003u);
  for (std::int64_t v : {1, 2, 3, 16001, 32002}) CHECK(F.mul(F.from_int(v), F.inv(F.from_int(v))) == 1u);
  CHECK_THROWS(F.inv(0));
  CHECK(F.from_int(-1) == 32002u);
  CHECK(CoefficientField::parse("GF(101)").p == 101u);
  CHECK_THROWS(CoefficientField::parse("GF(100)"));
}

TEST_CASE("modular linear algebra") {
  SplitMix64 rng(3);
  const ModMatrix A = ModMatrix::random_invertible(F, 5, rng);
  const ModMatrix I = A * *A.inverse();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(I(i, j) == (i == j ? 1u : 0u));
  ModMatrix B(F, 2, 3);
  B(0, 0) = 1, B(0, 1) = 2, B(0, 2) = 3;
  B(1, 0) = 2, B(1, 1) = 4, B(1, 2) = 6;
  CHECK(B.rank() == 1);
  CHECK(B.nullspace().size() == 2);
  CHECK(B.solve({1, 2}).has_value());
  CHECK_FALSE(B.solve({1, 3}).has_value());
}
