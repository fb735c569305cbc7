#include "pfcy/chow.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pfcy/linalg.hpp"

namespace pfcy {

namespace params {

namespace {
const RationalField kQ;
}

QPolynomial constant(const mpq_class& c) { return QPolynomial::constant(kQ, kCount, c); }
QPolynomial d() { return QPolynomial::variable(kQ, kCount, 0); }
QPolynomial a() { return QPolynomial::variable(kQ, kCount, 1); }
QPolynomial b() { return QPolynomial::variable(kQ, kCount, 2); }

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = {"d", "a", "b"};
  return n;
}

QPolynomial substitute(const QPolynomial& p, int var, const QPolynomial& value) {
  QPolynomial out(kQ, kCount);
  for (const auto& t : p.terms()) {
    const int e = t.mono.exponent(var);
    const Monomial rest = t.mono / Monomial::variable(var, e);
    out = out + value.pow(static_cast<unsigned>(e)).mul_monomial(rest, t.coeff);
  }
  return out;
}

mpq_class value(const QPolynomial& p) {
  if (p.is_zero()) return 0;
  if (p.size() != 1 || p.degree() != 0) throw std::invalid_argument("expression still depends on parameters: " + p.to_string(names()));
  return p.leading_coefficient();
}

}  // namespace params

namespace {

std::int64_t q4_integral(const std::vector<int>& e) {
  // generators H, theta1, theta2 with H^2 = theta1 + theta2
  if (e[0] >= 2) {
    auto e1 = e, e2 = e;
    e1[0] -= 2, e2[0] -= 2;
    ++e1[1], ++e2[2];
    return q4_integral(e1) + q4_integral(e2);
  }
  if (e[0] != 0) return 0;
  if (e[1] == 2 || e[2] == 2) return 1;  // theta_i^2 = 1
  return 0;                              // theta1 theta2 = 0
}

std::int64_t projective_integral(const std::vector<int>&) { return 1; }

std::int64_t f_over_q3_integral(const std::vector<int>& e) {
  // xi^2 = h xi, h^4 = 0, xi h^3 = deg Q3 = 2
  return e[0] == 0 ? 0 : 2;
}

std::int64_t scroll_integral(const std::vector<int>& e) {
  // h^2 = 0; xi^{n-1} h = 1; xi^n = 2 xi^{n-1} h
  if (e[1] >= 2) return 0;
  return e[1] == 1 ? 1 : 2;
}

std::shared_ptr<const ChowRing> make_ring(const std::string& name, int dim, std::vector<std::string> gens,
                                          std::vector<int> codims, std::vector<std::string> relations,
                                          std::int64_t (*fn)(const std::vector<int>&)) {
  auto r = std::make_shared<ChowRing>();
  r->name = name;
  r->dim = dim;
  r->generators = std::move(gens);
  r->codims = std::move(codims);
  r->relations = std::move(relations);
  r->integral_fn = fn;
  return r;
}

}  // namespace

int ChowRing::generator_index(const std::string& g) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == g) return static_cast<int>(i);
  throw std::invalid_argument("ring " + name + " has no generator " + g);
}

int ChowRing::codim_of(Monomial m) const {
  int c = 0;
  for (std::size_t i = 0; i < generators.size(); ++i) c += m.exponent(static_cast<int>(i)) * codims[i];
  return c;
}

std::int64_t ChowRing::integral(Monomial m) const {
  if (codim_of(m) != dim) return 0;
  std::vector<int> e;
  for (std::size_t i = 0; i < generators.size(); ++i) e.push_back(m.exponent(static_cast<int>(i)));
  return integral_fn(e);
}

std::vector<Monomial> ChowRing::monomials(int codim) const {
  std::vector<Monomial> out;
  std::vector<int> e(generators.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == generators.size()) {
      if (left == 0) out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = 0; k * codims[i] <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k * codims[i]);
    }
    e[i] = 0;
  };
  if (codim >= 0 && codim <= dim) rec(0, codim);
  return out;
}

std::vector<Monomial> ChowRing::basis(int codim) const {
  // Rows of the pairing matrix against complementary monomials; keep a
  // maximal independent subset, scanning in order.
  const auto mons = monomials(codim);
  const auto dual = monomials(dim - codim);
  PrimeField f(1000003);
  std::vector<Monomial> out;
  std::vector<std::vector<PrimeField::Element>> rows;
  for (const auto& m : mons) {
    std::vector<PrimeField::Element> row;
    for (const auto& n : dual) row.push_back(f.from_int(integral(m * n)));
    rows.push_back(row);
    ModMatrix M(f, rows.size(), dual.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < dual.size(); ++j) M(i, j) = rows[i][j];
    if (M.rank() == rows.size())
      out.push_back(m);
    else
      rows.pop_back();
  }
  return out;
}

const std::vector<std::string>& builtin_ring_names() {
  static const std::vector<std::string> n = {"P6", "P4", "P2", "Q4smooth", "F_over_Q3", "P_over_P1_2O1_3O",
                                             "P_over_P1_2O1_2O"};
  return n;
}

std::shared_ptr<const ChowRing> builtin_ring(const std::string& name) {
  static const auto p6 = make_ring("P6", 6, {"H"}, {1}, {"H^7 = 0"}, projective_integral);
  static const auto p4 = make_ring("P4", 4, {"H"}, {1}, {"H^5 = 0"}, projective_integral);
  static const auto p2 = make_ring("P2", 2, {"t"}, {1}, {"t^3 = 0"}, projective_integral);
  static const auto q4 = make_ring("Q4smooth", 4, {"H", "theta1", "theta2"}, {1, 2, 2},
                                   {"H^2 = theta1 + theta2", "theta1^2 = theta2^2 = 1", "theta1*theta2 = 0"},
                                   q4_integral);
  static const auto f = make_ring("F_over_Q3", 4, {"xi", "h"}, {1, 1}, {"xi^2 = h*xi", "h^4 = 0"}, f_over_q3_integral);
  static const auto p5 = make_ring("P_over_P1_2O1_3O", 5, {"xi", "h"}, {1, 1}, {"xi^5 = 2*xi^4*h", "h^2 = 0"},
                                   scroll_integral);
  static const auto p4s = make_ring("P_over_P1_2O1_2O", 4, {"xi", "h"}, {1, 1}, {"xi^4 = 2*xi^3*h", "h^2 = 0"},
                                    scroll_integral);
  for (const auto& r : {p6, p4, p2, q4, f, p5, p4s})
    if (r->name == name) return r;
  throw std::invalid_argument("unknown ring '" + name + "'");
}

ChowClass::ChowClass(std::shared_ptr<const ChowRing> ring) : ring_(std::move(ring)) {}

ChowClass ChowClass::one(std::shared_ptr<const ChowRing> ring) {
  ChowClass c(std::move(ring));
  c.add_term(Monomial(), params::constant(1));
  return c;
}

ChowClass ChowClass::generator(std::shared_ptr<const ChowRing> ring, const std::string& g) {
  const int i = ring->generator_index(g);
  ChowClass c(std::move(ring));
  c.add_term(Monomial::variable(i), params::constant(1));
  return c;
}

void ChowClass::add_term(Monomial m, const QPolynomial& c) {
  if (ring_->codim_of(m) > ring_->dim || c.is_zero()) return;
  auto it = terms_.find(m.bits());
  if (it == terms_.end()) {
    terms_.emplace(m.bits(), c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

ChowClass ChowClass::operator+(const ChowClass& o) const {
  ChowClass r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(Monomial::from_bits(m), c);
  return r;
}

ChowClass ChowClass::operator-(const ChowClass& o) const { return *this + o.scale(mpq_class(-1)); }

ChowClass ChowClass::operator*(const ChowClass& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("classes live in different rings");
  ChowClass r(ring_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      const Monomial m = Monomial::from_bits(m1) * Monomial::from_bits(m2);
      if (ring_->codim_of(m) <= ring_->dim) r.add_term(m, c1 * c2);
    }
  return r;
}

ChowClass ChowClass::scale(const QPolynomial& c) const {
  ChowClass r(ring_);
  for (const auto& [m, v] : terms_) r.add_term(Monomial::from_bits(m), v * c);
  return r;
}

ChowClass ChowClass::pow(unsigned e) const {
  ChowClass r = one(ring_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

ChowClass ChowClass::component(int codim) const {
  ChowClass r(ring_);
  for (const auto& [m, c] : terms_)
    if (ring_->codim_of(Monomial::from_bits(m)) == codim) r.add_term(Monomial::from_bits(m), c);
  return r;
}

int ChowClass::top_codim() const {
  int t = -1;
  for (const auto& [m, c] : terms_) t = std::max(t, ring_->codim_of(Monomial::from_bits(m)));
  return t;
}

bool ChowClass::homogeneous() const {
  int k = -2;
  for (const auto& [m, c] : terms_) {
    const int cd = ring_->codim_of(Monomial::from_bits(m));
    if (k != -2 && cd != k) return false;
    k = cd;
  }
  return true;
}

QPolynomial ChowClass::integrate() const {
  QPolynomial s = params::constant(0);
  for (const auto& [m, c] : terms_) {
    const auto deg = ring_->integral(Monomial::from_bits(m));
    if (deg) s = s + c.scale(mpq_class(static_cast<long>(deg)));
  }
  return s;
}

bool ChowClass::numerically_zero() const {
  for (int k = 0; k <= ring_->dim; ++k) {
    const ChowClass part = component(k);
    if (part.is_zero()) continue;
    for (const auto& n : ring_->monomials(ring_->dim - k)) {
      ChowClass dual(ring_);
      dual.add_term(n, params::constant(1));
      if (!(part * dual).integrate().is_zero()) return false;
    }
  }
  return true;
}

std::string ChowClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // by codimension, then the monomial bits
  std::vector<std::pair<int, std::uint64_t>> keys;
  for (const auto& [m, c] : terms_) keys.push_back({ring_->codim_of(Monomial::from_bits(m)), m});
  std::sort(keys.begin(), keys.end());
  for (const auto& [cd, m] : keys) {
    const QPolynomial& c = terms_.at(m);
    std::string coeff = c.to_string(params::names());
    if (c.size() > 1) coeff = "(" + coeff + ")";
    std::string mono;
    const Monomial mm = Monomial::from_bits(m);
    for (std::size_t i = 0; i < ring_->generators.size(); ++i) {
      const int e = mm.exponent(static_cast<int>(i));
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->generators[i] + (e > 1 ? "^" + std::to_string(e) : "");
    }
    std::string term = mono.empty() ? coeff : (coeff == "1" ? mono : (coeff == "-1" ? "-" + mono : coeff + "*" + mono));
    if (!s.empty()) s += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else s = term;
  }
  return s;
}

std::vector<ChowClass> relation_classes(const std::shared_ptr<const ChowRing>& ring) {
  auto g = [&](const std::string& n) { return ChowClass::generator(ring, n); };
  auto one = ChowClass::one(ring);
  std::vector<ChowClass> out;
  if (ring->name == "Q4smooth") {
    out.push_back(g("H").pow(2) - g("theta1") - g("theta2"));
    out.push_back(g("theta1").pow(2) - g("theta2").pow(2));
    out.push_back(g("theta1") * g("theta2"));
  } else if (ring->name == "F_over_Q3") {
    out.push_back(g("xi").pow(2) - g("h") * g("xi"));
    out.push_back(g("h").pow(4));
  } else if (ring->name == "P_over_P1_2O1_3O") {
    out.push_back(g("xi").pow(5) - (g("xi").pow(4) * g("h")).scale(mpq_class(2)));
    out.push_back(g("h").pow(2));
  } else if (ring->name == "P_over_P1_2O1_2O") {
    out.push_back(g("xi").pow(4) - (g("xi").pow(3) * g("h")).scale(mpq_class(2)));
    out.push_back(g("h").pow(2));
  }
  (void)one;
  return out;
}

ChowClass chern_power(const ChowClass& D, const QPolynomial& e) {
  // C(e, k) = e (e-1) ... (e-k+1) / k!
  ChowClass total = ChowClass::one(D.ring_ptr());
  ChowClass Dk = ChowClass::one(D.ring_ptr());
  QPolynomial binom = params::constant(1);
  for (int k = 1; k <= D.ring().dim; ++k) {
    Dk = Dk * D;
    if (Dk.is_zero()) break;
    binom = (binom * (e - params::constant(k - 1))).scale(mpq_class(1, k));
    total = total + Dk.scale(binom);
  }
  return total;
}

ChowClass chern_product(const std::shared_ptr<const ChowRing>& ring, const std::vector<ChernFactor>& factors) {
  ChowClass c = ChowClass::one(ring);
  for (const auto& f : factors) c = c * chern_power(f.root, f.exponent);
  return c;
}

ChowClass tangent_chern(const std::shared_ptr<const ChowRing>& ring) {
  auto g = [&](const std::string& n) { return ChowClass::generator(ring, n); };
  auto k = [](long v) { return params::constant(v); };
  const std::string& n = ring->name;
  if (n == "P6" || n == "P4" || n == "P2") {
    const std::string gen = ring->generators[0];
    return chern_product(ring, {{g(gen), k(ring->dim + 1)}});
  }
  if (n == "Q4smooth") {
    // 0 -> T_Q -> T_P5|_Q -> O(2) -> 0
    return chern_product(ring, {{g("H"), k(6)}, {g("H").scale(mpq_class(2)), k(-1)}});
  }
  if (n == "F_over_Q3") {
    // 0 -> O -> g^*F^*(1) -> T_rel -> 0 with F^* = O + O(-1), then
    // 0 -> T_rel -> T -> g^* T_Q3 -> 0 and T_Q3 from Q3 in P4.
    return chern_product(ring, {{g("xi"), k(1)},
                                {g("xi") - g("h"), k(1)},
                                {g("h"), k(5)},
                                {g("h").scale(mpq_class(2)), k(-1)}});
  }
  if (n == "P_over_P1_2O1_3O") {
    return chern_product(ring, {{g("xi") - g("h"), k(2)}, {g("xi"), k(3)}, {g("h").scale(mpq_class(2)), k(1)}});
  }
  if (n == "P_over_P1_2O1_2O") {
    return chern_product(ring, {{g("xi") - g("h"), k(2)}, {g("xi"), k(2)}, {g("h").scale(mpq_class(2)), k(1)}});
  }
  throw std::invalid_argument("no tangent bundle recipe for ring " + n);
}

QPolynomial double_point_discrepancy(const ChowClass& S, const ChowClass& kappa, const mpq_class& chi) {
  const auto& ring = S.ring_ptr();
  if (ring->dim - S.top_codim() != 2 || !S.homogeneous()) throw std::invalid_argument("class is not a surface class");
  if (!kappa.is_zero() && (kappa.top_codim() != 1 || !kappa.homogeneous()))
    throw std::invalid_argument("canonical class must be a divisor class");
  const ChowClass cT = tangent_chern(ring);
  const ChowClass c1 = cT.component(1), c2 = cT.component(2);
  const QPolynomial self = (S * S).integrate();
  const QPolynomial c2_surface = params::constant(12 * chi) - (kappa * kappa * S).integrate();
  const QPolynomial c2_normal = (c2 * S).integrate() - c2_surface + (kappa * (c1 + kappa) * S).integrate();
  return self - c2_normal;
}

namespace {

std::vector<std::int64_t> integer_roots(const QPolynomial& p, int var, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = lo; x <= hi; ++x)
    if (params::value(params::substitute(p, var, params::constant(mpq_class(static_cast<long>(x))))) == 0)
      out.push_back(x);
  return out;
}

QPolynomial q4_discrepancy() {
  auto ring = builtin_ring("Q4smooth");
  const ChowClass S = ChowClass::generator(ring, "theta1").scale(params::a()) +
                      ChowClass::generator(ring, "theta2").scale(params::d() - params::a());
  return double_point_discrepancy(S, ChowClass::generator(ring, "H"));
}

}  // namespace

std::vector<SurfaceClass> solve_surface_class(std::int64_t d, bool symmetric) {
  const QPolynomial disc = params::substitute(q4_discrepancy(), 0, params::constant(mpq_class(static_cast<long>(d))));
  std::vector<SurfaceClass> out;
  for (auto a : integer_roots(disc, 1, -50, 50)) {
    if (symmetric && 2 * a != d) continue;
    out.push_back({d, a, std::to_string(a) + "*theta1 + " + std::to_string(d - a) + "*theta2"});
  }
  return out;
}

QPolynomial cone_discrepancy() {
  auto ring = builtin_ring("F_over_Q3");
  const ChowClass xi = ChowClass::generator(ring, "xi"), h = ChowClass::generator(ring, "h");
  const ChowClass S = (xi * xi).scale(params::a()) + (h * h).scale(params::b());
  const ChowClass kappa = xi.scale(mpq_class(2)) - h;
  const QPolynomial disc = double_point_discrepancy(S, kappa);
  // b = d/2 - a
  return params::substitute(disc, 2, params::d().scale(mpq_class(1, 2)) - params::a());
}

QPolynomial fiber_discrepancy(const mpq_class& chi) {
  auto ring = builtin_ring("P4");
  const ChowClass H = ChowClass::generator(ring, "H");
  return double_point_discrepancy((H * H).scale(params::a()), ChowClass(ring), chi);
}

std::vector<std::int64_t> fiber_degrees(const mpq_class& chi) { return integer_roots(fiber_discrepancy(chi), 1, 1, 50); }

std::vector<FiberedClass> fibered_classes(const std::vector<std::int64_t>& degrees) {
  auto ring = builtin_ring("P_over_P1_2O1_2O");
  const ChowClass xi = ChowClass::generator(ring, "xi"), h = ChowClass::generator(ring, "h");
  const ChowClass G = (xi * xi).scale(params::a()) + (h * xi).scale(params::d() - params::a().scale(mpq_class(2)));
  const QPolynomial disc = double_point_discrepancy(G, xi);
  std::vector<FiberedClass> out;
  for (auto y : degrees) {
    const QPolynomial in_d = params::substitute(disc, 1, params::constant(mpq_class(static_cast<long>(y))));
    const std::string ys = std::to_string(y);
    if (in_d.is_zero()) {
      out.push_back({y, std::nullopt, ys + "*xi^2 + (d - " + std::to_string(2 * y) + ")*h*xi"});
      continue;
    }
    for (auto d : integer_roots(in_d, 0, -200, 200)) {
      const std::int64_t g = d - 2 * y;
      out.push_back({y, d, ys + "*xi^2 " + (g < 0 ? "- " : "+ ") + std::to_string(g < 0 ? -g : g) + "*h*xi"});
    }
  }
  return out;
}

QPolynomial exceptional_intersection(const QPolynomial& alpha, const QPolynomial& gamma) {
  auto ring = builtin_ring("P_over_P1_2O1_3O");
  const ChowClass xi = ChowClass::generator(ring, "xi"), h = ChowClass::generator(ring, "h");
  const ChowClass X = (xi * xi).scale(alpha) + (h * xi).scale(gamma);
  const ChowClass Xi = xi.pow(3) - (xi * xi * h).scale(mpq_class(2));
  return (X * Xi).integrate();
}

std::optional<FiberSplit> fiber_split(std::int64_t alpha, const QPolynomial& gamma) {
  for (std::int64_t p = 0; 2 * p < 5; ++p) {
    const std::int64_t q = 5 - p;
    if (p * q != alpha) continue;
    return FiberSplit{p, q, gamma.scale(mpq_class(1, static_cast<long>(q - p)))};
  }
  return std::nullopt;
}

PushforwardChern pushforward_chern(const FiberSplit& s) {
  auto ring = builtin_ring("P2");
  const ChowClass t = ChowClass::generator(ring, "t");
  const QPolynomial one = params::constant(1);
  const ChowClass c = chern_product(ring, {{t.scale(mpq_class(static_cast<long>(s.p))), s.beta + one},
                                           {t.scale(mpq_class(static_cast<long>(s.q))), one - s.beta}});
  auto coeff = [&](int k) {
    const ChowClass part = c.component(k);
    return part.is_zero() ? params::constant(0) : part.terms().begin()->second;
  };
  return {coeff(1), coeff(2)};
}

std::optional<PushforwardChern> pushforward_chern_for_class(std::int64_t alpha, const QPolynomial& gamma) {
  auto s = fiber_split(alpha, gamma);
  if (!s) return std::nullopt;
  return pushforward_chern(*s);
}

}  // namespace pfcy
