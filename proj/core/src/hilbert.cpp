#include "pfcy/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfcy {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::int64_t>(r);
}

namespace {

using Series = std::vector<std::int64_t>;

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series add_shifted(Series a, const Series& b, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] += b[i];
  trim(a);
  return a;
}

Series times_one_minus_t_power(Series a, int d) {
  Series r(a.size() + static_cast<std::size_t>(d), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i];
    r[i + static_cast<std::size_t>(d)] -= a[i];
  }
  trim(r);
  return r;
}

bool is_pure_power(Monomial m) {
  int nz = 0;
  for (int i = 0; i < kMaxVars; ++i) nz += m.exponent(i) != 0;
  return nz <= 1;
}

Series numerator_rec(std::vector<Monomial> gens, int nvars) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().degree() == 0) return {};  // unit ideal

  // Base case: pairwise coprime generators.
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  if (coprime) {
    Series r{1};
    for (Monomial m : gens) r = times_one_minus_t_power(r, m.degree());
    return r;
  }

  // Pivot on the variable occurring in the most mixed generators.
  int count[kMaxVars] = {};
  for (Monomial m : gens)
    if (!is_pure_power(m))
      for (int i = 0; i < nvars; ++i) count[i] += m.exponent(i) != 0;
  int var = 0;
  for (int i = 1; i < nvars; ++i)
    if (count[i] > count[var]) var = i;
  std::vector<int> exps;
  for (Monomial m : gens)
    if (!is_pure_power(m) && m.exponent(var)) exps.push_back(m.exponent(var));
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  Monomial pivot = Monomial::variable(var, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (Monomial m : gens) colon.push_back(m / m.gcd(pivot));

  return add_shifted(numerator_rec(std::move(plus), nvars), numerator_rec(std::move(colon), nvars), e);
}

}  // namespace

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](Monomial a, Monomial b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.bits() < b.bits();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (Monomial m : gens) {
    bool redundant = false;
    for (Monomial k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  return numerator_rec(std::move(gens), nvars);
}

HilbertData HilbertData::from_numerator(std::vector<std::int64_t> numerator, int nvars) {
  HilbertData h;
  h.nvars = nvars;
  trim(numerator);
  h.numerator = numerator;
  if (numerator.empty()) {
    h.krull_dim = 0;
    return h;
  }
  // Divide by (1 - t) while t = 1 is a root.
  Series cur = numerator;
  int removed = 0;
  for (;;) {
    std::int64_t at1 = 0;
    for (auto c : cur) at1 += c;
    if (at1 != 0 || removed == nvars) break;
    // synthetic division by (1 - t): q_i = sum_{j<=i} c_j
    Series q(cur.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      acc += cur[i];
      q[i] = acc;
    }
    cur = q;
    trim(cur);
    ++removed;
  }
  h.h_vector = cur;
  h.krull_dim = nvars - removed;
  const int D = h.krull_dim;
  h.hilbert_polynomial.assign(static_cast<std::size_t>(std::max(D, 1)), mpq_class(0));
  if (D > 0) {
    // sum_i h_i * C(m - i + D - 1, D - 1) expanded in powers of m.
    mpz_class fact = 1;
    for (int j = 1; j < D; ++j) fact *= j;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (!cur[i]) continue;
      std::vector<mpq_class> poly{1};
      for (int j = 1; j < D; ++j) {
        // multiply by (m - i + j)
        mpq_class c = static_cast<long>(j) - static_cast<long>(i);
        std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
          next[k] += poly[k] * c;
          next[k + 1] += poly[k];
        }
        poly = next;
      }
      for (std::size_t k = 0; k < poly.size(); ++k)
        h.hilbert_polynomial[k] += poly[k] * static_cast<long>(cur[i]) / mpq_class(fact);
    }
  }
  return h;
}

std::int64_t HilbertData::degree() const {
  if (krull_dim == 0) return 0;
  std::int64_t s = 0;
  for (auto c : h_vector) s += c;
  return s;
}

std::int64_t HilbertData::hf(int k) const {
  if (k < 0) return 0;
  __int128 s = 0;
  for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= k; ++i)
    s += static_cast<__int128>(numerator[i]) * binomial(k - static_cast<int>(i) + nvars - 1, nvars - 1);
  return static_cast<std::int64_t>(s);
}

mpq_class HilbertData::hp(const mpq_class& m) const {
  mpq_class r = 0, pw = 1;
  for (const auto& c : hilbert_polynomial) {
    r += c * pw;
    pw *= m;
  }
  return r;
}

int HilbertData::regularity_index() const {
  const int top = static_cast<int>(h_vector.size()) - krull_dim + 1;
  int k0 = std::max(0, top);
  while (k0 > 0 && hp(k0 - 1) == hf(k0 - 1)) --k0;
  return k0;
}

}  // namespace pfcy
