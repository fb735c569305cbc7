#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pfcy/field.hpp"
#include "pfcy/monomial.hpp"
#include "pfcy/rng.hpp"

namespace pfcy {

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> default_variable_names(int nvars);

// Sparse polynomial over a coefficient field F. Terms are kept sorted from the
// largest monomial down with nonzero coefficients, so equality is structural.
template <class F>
class Poly {
 public:
  using Field = F;
  using Coeff = typename F::Element;
  struct Term {
    Monomial mono;
    Coeff coeff;
  };

  Poly() = default;
  Poly(F field, int nvars, MonomialOrder order = MonomialOrder::degrevlex())
      : field_(std::move(field)), nvars_(nvars), order_(order) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("between 0 and 7 variables supported");
  }

  static Poly constant(const F& f, int nvars, const Coeff& c, MonomialOrder o = MonomialOrder::degrevlex()) {
    Poly p(f, nvars, o);
    if (!f.is_zero(c)) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Poly variable(const F& f, int nvars, int i, MonomialOrder o = MonomialOrder::degrevlex()) {
    if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
    Poly p(f, nvars, o);
    p.terms_.push_back({Monomial::variable(i), f.one()});
    return p;
  }
  static Poly monomial(const F& f, int nvars, Monomial m, const Coeff& c,
                       MonomialOrder o = MonomialOrder::degrevlex()) {
    Poly p(f, nvars, o);
    if (!f.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static Poly from_terms(const F& f, int nvars, MonomialOrder o, std::vector<Term> terms) {
    Poly p(f, nvars, o);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
  }
  Monomial leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coefficient() const { return leading_term().coeff; }

  // Largest total degree, -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }
  Poly homogeneous_component(int d) const {
    Poly r(field_, nvars_, order_);
    for (const auto& t : terms_)
      if (t.mono.degree() == d) r.terms_.push_back(t);
    return r;
  }
  Coeff coefficient(Monomial m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return field_.zero();
  }

  void check_compatible(const Poly& o) const {
    if (field_ != o.field_) throw RingMismatch("coefficient fields differ: " + field_.name() + " vs " + o.field_.name());
    if (nvars_ != o.nvars_) throw RingMismatch("variable counts differ");
    if (order_ != o.order_) throw RingMismatch("monomial orders differ");
  }

  Poly operator+(const Poly& o) const { return combine(o, false); }
  Poly operator-(const Poly& o) const { return combine(o, true); }
  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  Poly operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(field_, nvars_, order_);
    if (is_zero() || o.is_zero()) return r;
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) r.terms_.push_back({a.mono * b.mono, field_.mul(a.coeff, b.coeff)});
    r.normalize();
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scale(const Coeff& c) const {
    Poly r(field_, nvars_, order_);
    if (field_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field_.mul(t.coeff, c)});
    return r;
  }
  Poly mul_monomial(Monomial m, const Coeff& c) const {
    Poly r(field_, nvars_, order_);
    if (field_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
    return r;  // multiplication by a monomial preserves the order
  }
  Poly pow(unsigned e) const {
    Poly r = constant(field_, nvars_, field_.one(), order_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  Poly monic() const {
    if (is_zero()) return *this;
    return scale(field_.inv(leading_coefficient()));
  }

  Poly derivative(int i) const {
    if (i < 0 || i >= nvars_) throw std::out_of_range("variable index out of range");
    Poly r(field_, nvars_, order_);
    for (const auto& t : terms_) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      Coeff c = field_.mul(t.coeff, field_.from_int(e));
      if (field_.is_zero(c)) continue;
      r.terms_.push_back({t.mono / Monomial::variable(i), c});
    }
    r.normalize();
    return r;
  }

  // Divides by the monomial m when every term is divisible by it.
  bool divisible_by(Monomial m) const {
    for (const auto& t : terms_)
      if (!m.divides(t.mono)) return false;
    return true;
  }
  Poly divide_by_monomial(Monomial m) const {
    if (!divisible_by(m)) throw std::domain_error("polynomial not divisible by monomial");
    Poly r(field_, nvars_, order_);
    for (const auto& t : terms_) r.terms_.push_back({t.mono / m, t.coeff});
    return r;
  }

  Coeff evaluate(const std::vector<Coeff>& point) const {
    if (point.size() != static_cast<std::size_t>(nvars_)) throw std::invalid_argument("point has wrong length");
    Coeff acc = field_.zero();
    for (const auto& t : terms_) {
      Coeff v = t.coeff;
      for (int i = 0; i < nvars_; ++i) {
        int e = t.mono.exponent(i);
        if (e) v = field_.mul(v, field_.pow(point[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(e)));
      }
      acc = field_.add(acc, v);
    }
    return acc;
  }

  Poly with_order(const MonomialOrder& o) const {
    Poly r(field_, nvars_, o);
    r.terms_ = terms_;
    r.normalize();
    return r;
  }

  bool operator==(const Poly& o) const {
    if (field_ != o.field_ || nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void sort_terms() {
    switch (order_.kind()) {
      case MonomialOrder::Kind::DegRevLex:
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.mono.degrevlex_key() > b.mono.degrevlex_key(); });
        break;
      case MonomialOrder::Kind::Lex:
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.mono.lex_key() > b.mono.lex_key(); });
        break;
      default: {
        const MonomialOrder o = order_;
        std::sort(terms_.begin(), terms_.end(), [&o](const Term& a, const Term& b) { return o.greater(a.mono, b.mono); });
      }
    }
  }
  void normalize() {
    sort_terms();
    std::size_t w = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Monomial m = terms_[i].mono;
      Coeff c = terms_[i].coeff;
      std::size_t j = i + 1;
      for (; j < terms_.size() && terms_[j].mono == m; ++j) c = field_.add(c, terms_[j].coeff);
      if (!field_.is_zero(c)) terms_[w++] = Term{m, c};
      i = j;
    }
    terms_.resize(w);
  }
  Poly combine(const Poly& o, bool subtract) const {
    check_compatible(o);
    Poly r(field_, nvars_, order_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size()) c = -1;
      else if (j == o.terms_.size()) c = 1;
      else c = order_.compare(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        Coeff v = subtract ? field_.neg(o.terms_[j].coeff) : o.terms_[j].coeff;
        r.terms_.push_back({o.terms_[j++].mono, v});
      } else {
        Coeff v = subtract ? field_.sub(terms_[i].coeff, o.terms_[j].coeff) : field_.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!field_.is_zero(v)) r.terms_.push_back({terms_[i].mono, v});
        ++i;
        ++j;
      }
    }
    return r;
  }

  F field_{};
  int nvars_ = 0;
  MonomialOrder order_{};
  std::vector<Term> terms_;
};

using Polynomial = Poly<PrimeField>;
using QPolynomial = Poly<RationalField>;

namespace detail {
std::string format_monomial(Monomial m, int nvars, const std::vector<std::string>& names);
bool coefficient_is_negative(const PrimeField& f, PrimeField::Element c);
bool coefficient_is_negative(const RationalField& f, const RationalField::Element& c);
}  // namespace detail

template <class F>
std::string Poly<F>::to_string(const std::vector<std::string>& names_in) const {
  if (terms_.empty()) return "0";
  const auto names = names_in.empty() ? default_variable_names(nvars_) : names_in;
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = detail::coefficient_is_negative(field_, t.coeff);
    Coeff mag = neg ? field_.neg(t.coeff) : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = detail::format_monomial(t.mono, nvars_, names);
    if (mono.empty()) {
      out += field_.to_string(mag);
    } else if (field_.is_one(mag)) {
      out += mono;
    } else {
      out += field_.to_string(mag) + "*" + mono;
    }
  }
  return out;
}

// Parses sums of products of integer or a/b coefficients and powers of
// variables, e.g. "3*x0^2*x1 - x2^3". Parentheses are allowed and may carry
// a nonnegative integer exponent.
template <class F>
Poly<F> parse_polynomial(const std::string& text, const F& field, int nvars,
                         MonomialOrder order = MonomialOrder::degrevlex(),
                         const std::vector<std::string>& names_in = {});

// p(L y): x_i is replaced by sum_j L[i][j] y_j, giving a polynomial in
// L[0].size() variables. L must have full column rank.
template <class F>
Poly<F> substitute_linear(const Poly<F>& p, const std::vector<std::vector<typename F::Element>>& L);

// Uniformly random homogeneous polynomial of the given degree: every monomial
// coefficient is drawn independently from the field.
Polynomial random_homogeneous(const PrimeField& field, int nvars, int degree, SplitMix64& rng,
                              MonomialOrder order = MonomialOrder::degrevlex());
Polynomial random_homogeneous(const PrimeField& field, int nvars, int degree, std::uint64_t seed,
                              MonomialOrder order = MonomialOrder::degrevlex());

// Exact image of a rational polynomial in GF(p).
Polynomial reduce_mod_p(const QPolynomial& q, const PrimeField& field);

}  // namespace pfcy

#include "pfcy/polynomial_impl.hpp"
