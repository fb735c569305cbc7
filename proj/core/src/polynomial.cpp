#include "pfcy/polynomial.hpp"

namespace pfcy {

std::vector<std::string> default_variable_names(int nvars) {
  std::vector<std::string> names;
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

namespace detail {

std::string format_monomial(Monomial m, int nvars, const std::vector<std::string>& names) {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    int e = m.exponent(i);
    if (!e) continue;
    if (!out.empty()) out += "*";
    out += names[static_cast<std::size_t>(i)];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool coefficient_is_negative(const PrimeField& f, PrimeField::Element c) { return f.lift(c) < 0; }
bool coefficient_is_negative(const RationalField&, const RationalField::Element& c) { return c < 0; }

}  // namespace detail

Polynomial random_homogeneous(const PrimeField& field, int nvars, int degree, SplitMix64& rng, MonomialOrder order) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<Polynomial::Term> terms;
  for (Monomial m : monomials_of_degree(nvars, degree)) {
    auto c = static_cast<PrimeField::Element>(rng.below(field.characteristic()));
    if (c) terms.push_back({m, c});
  }
  return Polynomial::from_terms(field, nvars, order, std::move(terms));
}

Polynomial random_homogeneous(const PrimeField& field, int nvars, int degree, std::uint64_t seed, MonomialOrder order) {
  SplitMix64 rng(seed);
  return random_homogeneous(field, nvars, degree, rng, order);
}

Polynomial reduce_mod_p(const QPolynomial& q, const PrimeField& field) {
  std::vector<Polynomial::Term> terms;
  for (const auto& t : q.terms()) terms.push_back({t.mono, field.from_rational(t.coeff)});
  return Polynomial::from_terms(field, q.nvars(), q.order(), std::move(terms));
}

}  // namespace pfcy
