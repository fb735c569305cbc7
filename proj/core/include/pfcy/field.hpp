#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pfcy {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

// Prime field GF(p), p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  PrimeField() : PrimeField(32003) {}
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return p_ == 1 ? 0 : 1; }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_rational(const mpq_class& q) const;

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  // Symmetric representative in (-p/2, p/2].
  std::int64_t lift(Element a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }
  std::string to_string(Element a) const { return std::to_string(lift(a)); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  Element from_rational(const mpq_class& q) const { return q; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw FieldError("inverse of zero");
    return 1 / a;
  }
  Element pow(const Element& a, std::uint64_t e) const {
    Element r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= a;
    return r;
  }
  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }

  bool operator==(const RationalField&) const { return true; }
  bool operator!=(const RationalField&) const { return false; }
};

// Runtime descriptor used at the text / CLI boundary.
struct CoefficientField {
  enum class Kind { Prime, Rational };
  Kind kind = Kind::Prime;
  std::uint32_t p = 32003;

  static CoefficientField prime(std::uint32_t p);
  static CoefficientField rationals() { return {Kind::Rational, 0}; }
  // Accepts "GF(p)", "p", "QQ", "Q".
  static CoefficientField parse(const std::string& text);
  std::string name() const;
  PrimeField prime_field() const;

  bool operator==(const CoefficientField& o) const { return kind == o.kind && p == o.p; }
};

}  // namespace pfcy
