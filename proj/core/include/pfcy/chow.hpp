#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfcy/polynomial.hpp"

namespace pfcy {

// Coefficients of Chow classes are rational polynomials in the parameters
// (d, a, b).
namespace params {
inline constexpr int kCount = 3;
QPolynomial constant(const mpq_class& c);
QPolynomial d();
QPolynomial a();
QPolynomial b();
const std::vector<std::string>& names();
// p with parameter `var` replaced by `value`.
QPolynomial substitute(const QPolynomial& p, int var, const QPolynomial& value);
// Constant value of p, which must have no parameters left.
mpq_class value(const QPolynomial& p);
}  // namespace params

class ChowClass;

// Graded ring presented by generators with codimensions and the degree
// (integral) of every top-codimension monomial.
class ChowRing {
 public:
  std::string name;
  int dim = 0;
  std::vector<std::string> generators;
  std::vector<int> codims;
  // Relations as text; relation_classes() gives them as classes that must be
  // numerically zero.
  std::vector<std::string> relations;

  int generator_index(const std::string& g) const;
  int codim_of(Monomial m) const;
  // Degree of a top-codimension monomial.
  std::int64_t integral(Monomial m) const;
  // Monomials of the given codimension.
  std::vector<Monomial> monomials(int codim) const;
  // A basis of codimension-k classes modulo numerical equivalence.
  std::vector<Monomial> basis(int codim) const;

  std::int64_t (*integral_fn)(const std::vector<int>& exps) = nullptr;
};

const std::vector<std::string>& builtin_ring_names();
// P6, P4, P2, Q4smooth, F_over_Q3, P_over_P1_2O1_3O, P_over_P1_2O1_2O
std::shared_ptr<const ChowRing> builtin_ring(const std::string& name);

class ChowClass {
 public:
  explicit ChowClass(std::shared_ptr<const ChowRing> ring);
  static ChowClass one(std::shared_ptr<const ChowRing> ring);
  static ChowClass generator(std::shared_ptr<const ChowRing> ring, const std::string& g);

  const ChowRing& ring() const { return *ring_; }
  const std::shared_ptr<const ChowRing>& ring_ptr() const { return ring_; }
  const std::map<std::uint64_t, QPolynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ChowClass operator+(const ChowClass& o) const;
  ChowClass operator-(const ChowClass& o) const;
  ChowClass operator*(const ChowClass& o) const;
  ChowClass scale(const QPolynomial& c) const;
  ChowClass scale(const mpq_class& c) const { return scale(params::constant(c)); }
  ChowClass pow(unsigned e) const;

  ChowClass component(int codim) const;
  // Largest codimension carrying a nonzero term (-1 when zero).
  int top_codim() const;
  bool homogeneous() const;
  // Sum over top-codimension terms of coefficient times degree.
  QPolynomial integrate() const;
  // Zero against every class of complementary codimension.
  bool numerically_zero() const;

  std::string to_string() const;

 private:
  void add_term(Monomial m, const QPolynomial& c);
  std::shared_ptr<const ChowRing> ring_;
  std::map<std::uint64_t, QPolynomial> terms_;
};

// Relations of the ring as classes.
std::vector<ChowClass> relation_classes(const std::shared_ptr<const ChowRing>& ring);

// Total Chern class arithmetic, truncated at the ring dimension.
struct ChernFactor {
  ChowClass root;         // Chern root (first Chern class of a line bundle)
  QPolynomial exponent;   // multiplicity; may be negative or symbolic
};
// (1 + D)^e = sum_k C(e, k) D^k.
ChowClass chern_power(const ChowClass& D, const QPolynomial& e);
ChowClass chern_product(const std::shared_ptr<const ChowRing>& ring, const std::vector<ChernFactor>& factors);
// c(T) of the ambient, assembled from Euler-type sequences.
ChowClass tangent_chern(const std::shared_ptr<const ChowRing>& ring);

// [S]^2 - c_2(N) with c_2(N) from the tangent sequence and Noether's formula:
// c_2(N) = c_2(T).S - (12 chi - kappa^2.S) + kappa (c_1(T) + kappa).S where
// K_S = kappa|_S. Zero exactly when the double point formula is satisfied.
QPolynomial double_point_discrepancy(const ChowClass& S, const ChowClass& kappa, const mpq_class& chi = 7);

struct SurfaceClass {
  std::int64_t d = 0;
  std::int64_t a = 0;
  std::string description;
};

// Q4smooth: S = a theta1 + (d - a) theta2 with vanishing discrepancy,
// a in [-50, 50]; symmetric adds a = d - a.
std::vector<SurfaceClass> solve_surface_class(std::int64_t d, bool symmetric = false);

// Discrepancy on F_over_Q3 for S' = a xi^2 + b h^2 with b = d/2 - a, in (d, a).
QPolynomial cone_discrepancy();
// Discrepancy on P^4 for a surface of degree a with trivial canonical class.
QPolynomial fiber_discrepancy(const mpq_class& chi);
// Positive integer degrees solving fiber_discrepancy (chi = 2: K3, 0: abelian).
std::vector<std::int64_t> fiber_degrees(const mpq_class& chi);

struct FiberedClass {
  std::int64_t fiber_degree = 0;
  std::optional<std::int64_t> d;  // nullopt: valid for every d
  std::string description;        // class a xi^2 + (d - 2a) h xi
};
// Classes [X~] = a xi^2 + (d - 2a) h xi on P(2O(1)+3O) over P^1 for the given
// fiber degrees, from the double point formula on a xi-section.
std::vector<FiberedClass> fibered_classes(const std::vector<std::int64_t>& fiber_degrees);
// Integral of (alpha xi^2 + gamma h xi) * (xi^3 - 2 xi^2 h) on P(2O(1)+3O).
QPolynomial exceptional_intersection(const QPolynomial& alpha, const QPolynomial& gamma);

// E restricted to a fiber splits as O(p) + O(q), p + q = 5, with
// 0 -> O(q xi - beta h) -> E -> O(p xi + beta h) -> 0 and
// c_2(E) = p q xi^2 + (q - p) beta h xi.
struct FiberSplit {
  std::int64_t p = 0, q = 0;
  QPolynomial beta;
};
std::optional<FiberSplit> fiber_split(std::int64_t alpha, const QPolynomial& gamma);

// Chern classes of K = ker((beta+1) O(p) -> (beta-1) O(q)) on P^2, i.e. of the
// pushforward of E restricted to the exceptional divisor.
struct PushforwardChern {
  QPolynomial c1;
  QPolynomial c2;
};
PushforwardChern pushforward_chern(const FiberSplit& split);
// For the class alpha xi^2 + gamma h xi.
std::optional<PushforwardChern> pushforward_chern_for_class(std::int64_t alpha, const QPolynomial& gamma);

}  // namespace pfcy
