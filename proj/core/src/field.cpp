#include "pfcy/field.hpp"

#include <algorithm>
#include <cctype>

namespace pfcy {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw FieldError("characteristic must be below 2^31");
  if (!is_prime(p)) throw FieldError("not a prime: " + std::to_string(p));
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_, b = a;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw FieldError("inverse of zero in " + name());
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return from_int(t);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw FieldError("denominator divisible by " + std::to_string(p_));
  Element n = from_int(num.get_si()), d = from_int(den.get_si());
  return mul(n, inv(d));
}

CoefficientField CoefficientField::prime(std::uint32_t p) {
  PrimeField check(p);
  (void)check;
  return {Kind::Prime, p};
}

CoefficientField CoefficientField::parse(const std::string& raw) {
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "QQ" || t == "Q") return rationals();
  std::string digits = t;
  if (t.size() > 4 && (t.rfind("GF(", 0) == 0) && t.back() == ')') digits = t.substr(3, t.size() - 4);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw FieldError("unrecognised field: " + raw);
  if (digits.size() > 10) throw FieldError("characteristic too large: " + raw);
  return prime(static_cast<std::uint32_t>(std::stoull(digits)));
}

std::string CoefficientField::name() const {
  return kind == Kind::Rational ? std::string("QQ") : "GF(" + std::to_string(p) + ")";
}

PrimeField CoefficientField::prime_field() const {
  if (kind != Kind::Prime) throw FieldError("a prime field is required, got " + name());
  return PrimeField(p);
}

}  // namespace pfcy
