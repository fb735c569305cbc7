#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfcy {

inline constexpr int kMaxVars = 7;
inline constexpr int kMaxDegree = 127;

// Exponent vector packed into one word: exponent of x_i in byte i (i < 7),
// total degree in byte 7. Exponents and degree stay below 128 so byte-wise
// subtraction can test divisibility without borrows crossing lanes.
class Monomial {
 public:
  constexpr Monomial() = default;
  static constexpr Monomial from_bits(std::uint64_t b) { return Monomial(b); }
  static Monomial from_exponents(const std::vector<int>& e);
  static Monomial variable(int i, int power = 1);

  std::uint64_t bits() const { return bits_; }
  int exponent(int i) const { return static_cast<int>((bits_ >> (8 * i)) & 0xFF); }
  int degree() const { return static_cast<int>(bits_ >> 56); }
  std::array<int, kMaxVars> exponents() const;

  bool divides(Monomial t) const {
    constexpr std::uint64_t H = 0x8080808080808080ULL;
    return (((t.bits_ | H) - bits_) & H) == H;
  }
  Monomial operator*(Monomial o) const {
    if (degree() + o.degree() > kMaxDegree) throw std::overflow_error("monomial degree above 127");
    return Monomial(bits_ + o.bits_);
  }
  // Caller guarantees o divides *this.
  Monomial operator/(Monomial o) const { return Monomial(bits_ - o.bits_); }
  Monomial lcm(Monomial o) const;
  Monomial gcd(Monomial o) const;
  bool coprime(Monomial o) const;

  bool operator==(Monomial o) const { return bits_ == o.bits_; }
  bool operator!=(Monomial o) const { return bits_ != o.bits_; }

  // Degree-reverse-lexicographic key: larger key means larger monomial.
  std::uint64_t degrevlex_key() const { return bits_ ^ 0x00FFFFFFFFFFFFFFULL; }
  // Pure lexicographic key with x0 most significant.
  std::uint64_t lex_key() const { return __builtin_bswap64(bits_) & ~0xFFULL; }

 private:
  constexpr explicit Monomial(std::uint64_t b) : bits_(b) {}
  std::uint64_t bits_ = 0;
};

// Monomial order on a fixed number of variables.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Block };

  MonomialOrder() = default;
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  // Degrevlex on x0..x_{k-1} refined by degrevlex on the remaining variables.
  static MonomialOrder block(int k);
  static MonomialOrder parse(const std::string& text);

  Kind kind() const { return kind_; }
  int block_size() const { return block_; }
  std::string name() const;

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(Monomial a, Monomial b) const;
  bool greater(Monomial a, Monomial b) const { return compare(a, b) > 0; }
  bool is_graded() const { return kind_ == Kind::DegRevLex; }

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

 private:
  MonomialOrder(Kind k, int b) : kind_(k), block_(b) {}
  Kind kind_ = Kind::DegRevLex;
  int block_ = 0;
};

// Number of monomials of degree d in n variables.
std::uint64_t monomial_count(int nvars, int degree);
// All monomials of degree d in n variables, largest first in the given order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree,
                                          const MonomialOrder& order = MonomialOrder::degrevlex());

}  // namespace pfcy
