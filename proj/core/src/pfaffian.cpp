#include "pfcy/pfaffian.hpp"

#include <map>
#include <tuple>
#include <unordered_map>

#include "pfcy/control.hpp"
#include "pfcy/linalg.hpp"

namespace pfcy {

DegreePattern::DegreePattern(int size, int fill) : size_(size) {
  if (size < 0) throw std::invalid_argument("negative matrix size");
  deg_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), fill);
}

DegreePattern DegreePattern::from_bundle(const std::vector<int>& a) {
  DegreePattern p(static_cast<int>(a.size()));
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j) p.set_degree(i, j, a[i] + a[j] + 1);
  return p;
}

int DegreePattern::degree(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_ || i == j) throw std::out_of_range("pattern index out of range");
  return deg_[static_cast<std::size_t>(i * size_ + j)];
}

void DegreePattern::set_degree(int i, int j, int d) {
  if (i < 0 || j < 0 || i >= size_ || j >= size_ || i == j) throw std::out_of_range("pattern index out of range");
  deg_[static_cast<std::size_t>(i * size_ + j)] = d;
  deg_[static_cast<std::size_t>(j * size_ + i)] = d;
}

SkewPolyMatrix::SkewPolyMatrix(const PrimeField& field, int nvars, int size)
    : field_(field), nvars_(nvars), size_(size) {
  if (size < 0) throw std::invalid_argument("negative matrix size");
  upper_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size > 0 ? size - 1 : 0) / 2,
                Polynomial(field, nvars));
}

std::size_t SkewPolyMatrix::slot(int i, int j) const {
  // i < j, row-major over the strict upper triangle
  const auto n = static_cast<std::size_t>(size_);
  const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

Polynomial SkewPolyMatrix::entry(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_) throw std::out_of_range("matrix index out of range");
  if (i == j) return Polynomial(field_, nvars_);
  if (i < j) return upper_[slot(i, j)];
  return -upper_[slot(j, i)];
}

void SkewPolyMatrix::set(int i, int j, const Polynomial& p) {
  if (i < 0 || j < 0 || i >= size_ || j >= size_ || i == j) throw std::out_of_range("matrix index out of range");
  if (p.nvars() != nvars_ || p.field().characteristic() != field_.characteristic())
    throw RingMismatch("entry lives in a different ring");
  if (i < j)
    upper_[slot(i, j)] = p;
  else
    upper_[slot(j, i)] = -p;
}

SkewPolyMatrix SkewPolyMatrix::principal(const std::vector<int>& idx) const {
  SkewPolyMatrix r(field_, nvars_, static_cast<int>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      r.set(static_cast<int>(a), static_cast<int>(b), entry(idx[a], idx[b]));
  return r;
}

SkewPolyMatrix SkewPolyMatrix::operator+(const SkewPolyMatrix& o) const {
  if (o.size_ != size_) throw std::invalid_argument("matrix sizes differ");
  SkewPolyMatrix r = *this;
  for (std::size_t s = 0; s < upper_.size(); ++s) r.upper_[s] = upper_[s] + o.upper_[s];
  return r;
}

SkewPolyMatrix SkewPolyMatrix::scaled(PrimeField::Element c) const {
  SkewPolyMatrix r = *this;
  for (auto& e : r.upper_) e = e.scale(c);
  return r;
}

bool SkewPolyMatrix::matches(const DegreePattern& pattern) const {
  if (pattern.size() != size_) return false;
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j) {
      const Polynomial& e = upper_[slot(i, j)];
      if (e.is_zero()) continue;
      const int d = pattern.degree(i, j);
      if (d < 0 || !e.is_homogeneous() || e.degree() != d) return false;
    }
  return true;
}

std::vector<std::vector<PrimeField::Element>> SkewPolyMatrix::evaluate(
    const std::vector<PrimeField::Element>& point) const {
  std::vector<std::vector<PrimeField::Element>> v(static_cast<std::size_t>(size_),
                                                   std::vector<PrimeField::Element>(static_cast<std::size_t>(size_), 0));
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j) {
      const auto x = upper_[slot(i, j)].evaluate(point);
      v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
      v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = field_.neg(x);
    }
  return v;
}

namespace {

// Pfaffians of principal submatrices keyed by index bitmask, shared between
// all the sub-Pfaffians of one matrix.
class PfaffianCache {
 public:
  explicit PfaffianCache(const SkewPolyMatrix& m) : m_(m) {
    if (m.size() > 32) throw std::invalid_argument("Pfaffians supported up to size 32");
  }

  const Polynomial& get(std::uint32_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    Polynomial value = compute(mask);
    return cache_.emplace(mask, std::move(value)).first->second;
  }

 private:
  Polynomial compute(std::uint32_t mask) {
    control::check();
    const int count = __builtin_popcount(mask);
    if (count == 0) return Polynomial::constant(m_.field(), m_.nvars(), m_.field().one());
    if (count % 2) return Polynomial(m_.field(), m_.nvars());
    const int first = __builtin_ctz(mask);
    const std::uint32_t rest = mask & (mask - 1);
    Polynomial sum(m_.field(), m_.nvars());
    int t = 2;
    for (std::uint32_t bits = rest; bits; bits &= bits - 1, ++t) {
      const int j = __builtin_ctz(bits);
      const Polynomial e = m_.entry(first, j);
      if (e.is_zero()) continue;
      const Polynomial& minor = get(rest & ~(1u << j));
      if (minor.is_zero()) continue;
      Polynomial term = e * minor;
      sum = (t % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
  }

  const SkewPolyMatrix& m_;
  std::unordered_map<std::uint32_t, Polynomial> cache_;
};

}  // namespace

Polynomial pfaffian(const SkewPolyMatrix& M) {
  if (M.size() % 2) throw std::invalid_argument("Pfaffian of an odd-size matrix");
  PfaffianCache cache(M);
  const std::uint32_t all = M.size() == 32 ? 0xFFFFFFFFu : ((1u << M.size()) - 1);
  return cache.get(all);
}

std::vector<Polynomial> sub_pfaffians(const SkewPolyMatrix& M, int k) {
  const int n = M.size();
  if (k < 1 || 2 * k > n) throw std::invalid_argument("sub-Pfaffian size out of range");
  PfaffianCache cache(M);
  std::vector<Polynomial> out;
  std::vector<int> idx(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < 2 * k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1u << i;
    out.push_back(cache.get(mask));
    int pos = 2 * k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 2 * k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < 2 * k; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
  if (2 * k + 1 == n) std::reverse(out.begin(), out.end());
  return out;
}

GradedIdeal sub_pfaffian_ideal(const SkewPolyMatrix& M, int k) {
  return GradedIdeal(M.field(), M.nvars(), sub_pfaffians(M, k));
}

SkewPolyMatrix random_section(const DegreePattern& pattern, std::uint64_t seed, const PrimeField& field, int nvars) {
  SplitMix64 rng(seed);
  SkewPolyMatrix M(field, nvars, pattern.size());
  for (int i = 0; i < pattern.size(); ++i)
    for (int j = i + 1; j < pattern.size(); ++j) {
      const int d = pattern.degree(i, j);
      if (d < 0) continue;
      M.set(i, j, random_homogeneous(field, nvars, d, rng));
    }
  return M;
}

namespace {

// Linear system in unknown coefficients; rows are created on demand, one per
// (equation label, monomial) pair.
class SparseSystem {
 public:
  SparseSystem(const PrimeField& f, std::size_t unknowns) : f_(f), unknowns_(unknowns) {}

  void add(int a, int b, Monomial m, std::size_t unknown, PrimeField::Element c) {
    entries_[{row(a, b, m), unknown}] = f_.add(entries_[{row(a, b, m), unknown}], c);
  }
  void set_rhs(int a, int b, Monomial m, PrimeField::Element c) { rhs_[row(a, b, m)] = f_.add(rhs_[row(a, b, m)], c); }

  ModMatrix matrix() const {
    ModMatrix M(f_, rows_.size(), unknowns_);
    for (const auto& [rc, v] : entries_) M(rc.first, rc.second) = v;
    return M;
  }
  std::vector<PrimeField::Element> rhs() const {
    std::vector<PrimeField::Element> b(rows_.size(), 0);
    for (const auto& [r, v] : rhs_) b[r] = v;
    return b;
  }

 private:
  std::size_t row(int a, int b, Monomial m) {
    auto key = std::make_tuple(a, b, m.bits());
    auto it = rows_.find(key);
    if (it != rows_.end()) return it->second;
    const std::size_t r = rows_.size();
    rows_.emplace(key, r);
    return r;
  }

  PrimeField f_;
  std::size_t unknowns_;
  std::map<std::tuple<int, int, std::uint64_t>, std::size_t> rows_;
  std::map<std::pair<std::size_t, std::size_t>, PrimeField::Element> entries_;
  std::map<std::size_t, PrimeField::Element> rhs_;
};

std::size_t pair_index(int i, int j, int N) {
  const auto n = static_cast<std::size_t>(N);
  const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

// Adds the coefficients of row i of (alternating linear matrix with unknown
// entries) * phi_row to the system under label (label, i).
void add_linear_times_phi(SparseSystem& sys, const PrimeField& f, int N, int nvars,
                          const std::vector<Polynomial>& phi_row, int label) {
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      const std::size_t P = pair_index(std::min(i, j), std::max(i, j), N);
      const bool neg = i > j;
      for (const auto& t : phi_row[static_cast<std::size_t>(j)].terms())
        for (int v = 0; v < nvars; ++v)
          sys.add(label, i, Monomial::variable(v) * t.mono, P * static_cast<std::size_t>(nvars) + static_cast<std::size_t>(v),
                  neg ? f.neg(t.coeff) : t.coeff);
    }
}

std::vector<PrimeField::Element> random_combination(const std::vector<std::vector<PrimeField::Element>>& basis,
                                                    std::size_t len, const PrimeField& f, SplitMix64& rng) {
  std::vector<PrimeField::Element> v(len, 0);
  for (const auto& b : basis) {
    const auto c = static_cast<PrimeField::Element>(rng.below(f.characteristic()));
    for (std::size_t i = 0; i < len; ++i) v[i] = f.add(v[i], f.mul(c, b[i]));
  }
  return v;
}

SkewPolyMatrix linear_matrix_from(const std::vector<PrimeField::Element>& coeffs, int N, int nvars,
                                  const PrimeField& f) {
  SkewPolyMatrix A(f, nvars, N);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      const std::size_t P = pair_index(i, j, N);
      std::vector<Polynomial::Term> terms;
      for (int v = 0; v < nvars; ++v) {
        const auto c = coeffs[P * static_cast<std::size_t>(nvars) + static_cast<std::size_t>(v)];
        if (c) terms.push_back({Monomial::variable(v), c});
      }
      A.set(i, j, Polynomial::from_terms(f, nvars, MonomialOrder::degrevlex(), std::move(terms)));
    }
  return A;
}

}  // namespace

SkewPolyMatrix BorderedModel::bordered() const {
  SkewPolyMatrix M(A.field(), A.nvars(), N + 1);
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) M.set(i, j, A.entry(i, j));
    M.set(i, N, c[static_cast<std::size_t>(i)]);
  }
  return M;
}

BorderedModel bordered_model(int N, const std::vector<std::vector<Polynomial>>& phi, std::uint64_t seed,
                             const PrimeField& field) {
  if (phi.empty()) throw std::invalid_argument("at least one constraint row is required");
  if (N < 2) throw std::invalid_argument("matrix size must be at least 2");
  const int nvars = phi[0].empty() ? 0 : phi[0][0].nvars();
  for (const auto& row : phi) {
    if (static_cast<int>(row.size()) != N) throw std::invalid_argument("constraint row length differs from N");
    for (const auto& e : row)
      if (e.nvars() != nvars || e.field().characteristic() != field.characteristic())
        throw RingMismatch("constraint entries live in different rings");
  }
  const int psize = N - static_cast<int>(phi.size());
  if (psize < 2 || psize % 2) throw std::invalid_argument("N minus the number of constraint rows must be even and positive");

  const std::size_t npairs = static_cast<std::size_t>(N) * static_cast<std::size_t>(N - 1) / 2;
  const std::size_t a_unknowns = npairs * static_cast<std::size_t>(nvars);
  SparseSystem sys_a(field, a_unknowns);
  for (std::size_t k = 0; k < phi.size(); ++k)
    add_linear_times_phi(sys_a, field, N, nvars, phi[k], static_cast<int>(k));
  const auto a_basis = sys_a.matrix().nullspace();
  if (a_basis.empty()) throw ConstraintError("no nonzero alternating linear matrix annihilates the constraint rows");

  const auto quads = monomials_of_degree(nvars, 2, MonomialOrder::degrevlex());
  const std::size_t nq = quads.size();
  SparseSystem sys_c(field, static_cast<std::size_t>(N) * nq);
  for (std::size_t k = 0; k < phi.size(); ++k)
    for (int i = 0; i < N; ++i)
      for (const auto& t : phi[k][static_cast<std::size_t>(i)].terms())
        for (std::size_t q = 0; q < nq; ++q)
          sys_c.add(static_cast<int>(k), 0, quads[q] * t.mono, static_cast<std::size_t>(i) * nq + q, t.coeff);
  const auto c_basis = sys_c.matrix().nullspace();
  if (c_basis.empty()) throw ConstraintError("no nonzero quadric column is orthogonal to the constraint rows");

  SplitMix64 rng(seed);
  BorderedModel B;
  B.N = N;
  B.phi = phi;
  B.pfaffian_size = psize;
  B.a_space_dim = a_basis.size();
  B.c_space_dim = c_basis.size();
  B.A = linear_matrix_from(random_combination(a_basis, a_unknowns, field, rng), N, nvars, field);
  const auto cv = random_combination(c_basis, static_cast<std::size_t>(N) * nq, field, rng);
  for (int i = 0; i < N; ++i) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t q = 0; q < nq; ++q) {
      const auto c = cv[static_cast<std::size_t>(i) * nq + q];
      if (c) terms.push_back({quads[q], c});
    }
    B.c.push_back(Polynomial::from_terms(field, nvars, MonomialOrder::degrevlex(), std::move(terms)));
  }
  return B;
}

GradedIdeal pfaffian_ideal_of_bordered(const BorderedModel& B) {
  return sub_pfaffian_ideal(B.bordered(), B.pfaffian_size / 2);
}

Polynomial euler_quadric(const BorderedModel& B) {
  std::vector<int> keep;
  for (int i = 1; i < B.N; ++i) keep.push_back(i);
  const SkewPolyMatrix sub = B.A.principal(keep);
  const Polynomial pf = sub.size() % 2 == 0 ? pfaffian(sub) : Polynomial(B.A.field(), B.A.nvars());
  const Monomial x0 = Monomial::variable(0);
  if (pf.is_zero() || !pf.divisible_by(x0))
    throw ConstraintError("sub-Pfaffian is not a multiple of x_0");
  return pf.divide_by_monomial(x0);
}

SkewPolyMatrix degeneration_lift(const BorderedModel& B) {
  const PrimeField& f = B.A.field();
  const int N = B.N, nvars = B.A.nvars();
  const std::size_t npairs = static_cast<std::size_t>(N) * static_cast<std::size_t>(N - 1) / 2;
  SparseSystem sys(f, npairs * static_cast<std::size_t>(nvars));
  add_linear_times_phi(sys, f, N, nvars, B.phi[0], 0);
  for (int i = 0; i < N; ++i)
    for (const auto& t : B.c[static_cast<std::size_t>(i)].terms()) sys.set_rhs(0, i, t.mono, t.coeff);
  const auto x = sys.matrix().solve(sys.rhs());
  if (!x) throw ConstraintError("the quadric column is not in the image of the first constraint row");
  return linear_matrix_from(*x, N, nvars, f);
}

GradedIdeal degeneration_fiber(const BorderedModel& B, const SkewPolyMatrix& lift, PrimeField::Element lambda) {
  if (lambda == 0) return pfaffian_ideal_of_bordered(B);
  return sub_pfaffian_ideal(B.A + lift.scaled(lambda), B.pfaffian_size / 2);
}

GradedIdeal degeneration_family(const BorderedModel& B, PrimeField::Element lambda) {
  return degeneration_fiber(B, degeneration_lift(B), lambda);
}

}  // namespace pfcy
