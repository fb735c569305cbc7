#include "pfcy/monomial.hpp"

#include <algorithm>

namespace pfcy {

Monomial Monomial::from_exponents(const std::vector<int>& e) {
  if (e.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("at most 7 variables");
  std::uint64_t b = 0;
  int deg = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw std::invalid_argument("negative exponent");
    deg += e[i];
    if (deg > kMaxDegree) throw std::overflow_error("monomial degree above 127");
    b |= static_cast<std::uint64_t>(e[i]) << (8 * i);
  }
  b |= static_cast<std::uint64_t>(deg) << 56;
  return Monomial(b);
}

Monomial Monomial::variable(int i, int power) {
  std::vector<int> e(static_cast<std::size_t>(i) + 1, 0);
  e[static_cast<std::size_t>(i)] = power;
  return from_exponents(e);
}

std::array<int, kMaxVars> Monomial::exponents() const {
  std::array<int, kMaxVars> e{};
  for (int i = 0; i < kMaxVars; ++i) e[static_cast<std::size_t>(i)] = exponent(i);
  return e;
}

Monomial Monomial::lcm(Monomial o) const {
  std::uint64_t b = 0, deg = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    std::uint64_t x = std::max(exponent(i), o.exponent(i));
    deg += x;
    b |= x << (8 * i);
  }
  if (deg > static_cast<std::uint64_t>(kMaxDegree)) throw std::overflow_error("monomial degree above 127");
  return Monomial(b | (deg << 56));
}

Monomial Monomial::gcd(Monomial o) const {
  std::uint64_t b = 0, deg = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    std::uint64_t x = std::min(exponent(i), o.exponent(i));
    deg += x;
    b |= x << (8 * i);
  }
  return Monomial(b | (deg << 56));
}

bool Monomial::coprime(Monomial o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exponent(i) && o.exponent(i)) return false;
  return true;
}

MonomialOrder MonomialOrder::block(int k) {
  if (k < 1 || k >= kMaxVars) throw std::invalid_argument("block size out of range");
  return MonomialOrder(Kind::Block, k);
}

MonomialOrder MonomialOrder::parse(const std::string& t) {
  if (t == "degrevlex" || t == "grevlex") return degrevlex();
  if (t == "lex") return lex();
  if (t.rfind("block(", 0) == 0 && t.back() == ')') return block(std::stoi(t.substr(6, t.size() - 7)));
  throw std::invalid_argument("unknown monomial order: " + t);
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

namespace {

int degrevlex_range(Monomial a, Monomial b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    int ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(Monomial a, Monomial b) const {
  switch (kind_) {
    case Kind::DegRevLex: {
      auto ka = a.degrevlex_key(), kb = b.degrevlex_key();
      return ka < kb ? -1 : (ka > kb ? 1 : 0);
    }
    case Kind::Lex: {
      auto ka = a.lex_key(), kb = b.lex_key();
      return ka < kb ? -1 : (ka > kb ? 1 : 0);
    }
    case Kind::Block: {
      int c = degrevlex_range(a, b, 0, block_);
      return c != 0 ? c : degrevlex_range(a, b, block_, kMaxVars);
    }
  }
  return 0;
}

std::uint64_t monomial_count(int nvars, int degree) {
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // C(degree + nvars - 1, nvars - 1)
  std::uint64_t r = 1;
  for (int i = 1; i < nvars; ++i) r = r * static_cast<std::uint64_t>(degree + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree, const MonomialOrder& order) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars < 0 || nvars > kMaxVars) return out;
  if (nvars == 0) {
    if (degree == 0) out.push_back(Monomial());
    return out;
  }
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  // Enumerate compositions recursively.
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[static_cast<std::size_t>(var)] = v;
      self(self, var + 1, left - v);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [&](Monomial a, Monomial b) { return order.greater(a, b); });
  return out;
}

}  // namespace pfcy
