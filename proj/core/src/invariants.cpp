#include "pfcy/invariants.hpp"

#include <algorithm>
#include <map>

#include "pfcy/control.hpp"
#include "pfcy/formulas.hpp"
#include "pfcy/linalg.hpp"

namespace pfcy {

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  SplitMix64 r(seed ^ (tag * 0x9E3779B97F4A7C15ULL));
  return r.next();
}

std::vector<Polynomial> minimal_gens_of(const GradedIdeal& I) {
  std::vector<Polynomial> out;
  const auto& gb = I.basis();
  if (!gb.minimal_input.empty() || I.generators().empty()) {
    for (auto k : gb.minimal_input) out.push_back(I.generators()[k]);
    return out;
  }
  return minimal_generators(I.generators());
}

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// All c-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int c) {
  std::vector<std::vector<int>> out;
  if (c > n || c < 0) return out;
  std::vector<int> idx(static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(idx);
    int pos = c - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - c + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < c; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

// Determinant of the submatrix on (rows, cols) by Laplace expansion along the
// first row; `reduce` is applied after every product.
template <class Reduce>
Polynomial minor(const PolyMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols, const Reduce& reduce,
                 std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial>& memo) {
  if (rows.size() == 1) return M[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[0])];
  auto key = std::make_pair(rows, cols);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const auto& f = M[0][0].field();
  Polynomial sum(f, M[0][0].nvars());
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Polynomial& e = M[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[j])];
    if (e.is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t q = 0; q < cols.size(); ++q)
      if (q != j) sub_cols.push_back(cols[q]);
    Polynomial m = minor(M, sub_rows, sub_cols, reduce, memo);
    if (m.is_zero()) continue;
    Polynomial t = reduce(e * m);
    sum = (j % 2 == 0) ? sum + t : sum - t;
  }
  memo.emplace(std::move(key), sum);
  return sum;
}

Polynomial combine(const std::vector<Polynomial>& ps, const std::vector<PrimeField::Element>& coeffs) {
  Polynomial out(ps[0].field(), ps[0].nvars());
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (coeffs[i]) out = out + ps[i].scale(coeffs[i]);
  return out;
}

}  // namespace

CodimCheck expected_codim_check(const GradedIdeal& I, int expected) {
  const int codim = hilbert_data(I).codim();
  return {codim == expected, codim};
}

SingularScheme singular_scheme(const GradedIdeal& I, int c, std::uint64_t seed) {
  const PrimeField& F = I.field();
  const int n = I.nvars();
  const auto gens = minimal_gens_of(I);
  if (c < 1 || c > n) throw std::invalid_argument("Jacobian minor size out of range");

  PolyMatrix J;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (int v = 0; v < n; ++v) row.push_back(g.derivative(v));
    J.push_back(std::move(row));
  }

  SplitMix64 rng(derive_seed(seed, 1));
  // Rows: random combinations within each generator degree.
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t r = 0; r < gens.size(); ++r) by_degree[gens[r].degree()].push_back(r);
  PolyMatrix rows_mixed;
  for (const auto& [deg, idx] : by_degree) {
    if (idx.size() <= 6) {
      for (auto r : idx) rows_mixed.push_back(J[r]);
      continue;
    }
    for (int k = 0; k < 6; ++k) {
      std::vector<PrimeField::Element> coeffs;
      for (std::size_t q = 0; q < idx.size(); ++q) coeffs.push_back(static_cast<PrimeField::Element>(rng.below(F.characteristic())));
      std::vector<Polynomial> row;
      for (int v = 0; v < n; ++v) {
        std::vector<Polynomial> col;
        for (auto r : idx) col.push_back(J[r][static_cast<std::size_t>(v)]);
        row.push_back(combine(col, coeffs));
      }
      rows_mixed.push_back(std::move(row));
    }
  }
  // Columns: n -> min(n, 6).
  const int ncols = std::min(n, 6);
  PolyMatrix M = rows_mixed;
  if (ncols < n) {
    ModMatrix R = ModMatrix::random(F, static_cast<std::size_t>(n), static_cast<std::size_t>(ncols), rng);
    for (auto& row : M) {
      std::vector<Polynomial> out;
      for (int j = 0; j < ncols; ++j) {
        std::vector<PrimeField::Element> coeffs;
        for (int v = 0; v < n; ++v) coeffs.push_back(R(static_cast<std::size_t>(v), static_cast<std::size_t>(j)));
        out.push_back(combine(row, coeffs));
      }
      row = std::move(out);
    }
  }

  std::vector<Polynomial> candidate = I.generators();
  std::size_t used = 0;
  {
    std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial> memo;
    auto id = [](Polynomial p) { return p; };
    for (const auto& rs : subsets(static_cast<int>(M.size()), c))
      for (const auto& cs : subsets(ncols, c)) {
        control::check();
        Polynomial m = minor(M, rs, cs, id, memo);
        ++used;
        if (!m.is_zero()) candidate.push_back(m.monic());
      }
  }
  control::heartbeat("singular scheme: " + std::to_string(used) + " minors, saturating");
  GradedIdeal sat = saturate(GradedIdeal(F, n, std::move(candidate), I.order()), derive_seed(seed, 2));
  SingularScheme s{sat, hilbert_data(sat), false, used, 0};
  if (s.empty()) {
    s.certified = true;
    return s;
  }

  // Full Jacobian minors in the quotient by the candidate ideal.
  Reducer red(sat.basis());
  PolyMatrix Jr = J;
  for (auto& row : Jr)
    for (auto& e : row) e = red.reduce(e);
  auto reduce = [&red](Polynomial p) { return red.reduce(p); };
  std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial> memo;
  bool all_zero = true;
  for (const auto& rs : subsets(static_cast<int>(Jr.size()), c)) {
    for (const auto& cs : subsets(n, c)) {
      control::check();
      ++s.minors_certified;
      if (!minor(Jr, rs, cs, reduce, memo).is_zero()) {
        all_zero = false;
        break;
      }
    }
    if (!all_zero) break;
  }
  s.certified = all_zero;
  return s;
}

std::string NodeCount::label() const {
  switch (kind) {
    case Kind::Smooth:
      return "smooth";
    case Kind::Nodes:
      return "nodes(" + std::to_string(degree) + ")";
    case Kind::PositiveDimensional:
      break;
  }
  return "positive_dimensional(" + std::to_string(dim) + ")";
}

NodeCount node_count(const SingularScheme& s) {
  if (s.empty()) return {NodeCount::Kind::Smooth, -1, 0};
  if (s.dim() == 0) return {NodeCount::Kind::Nodes, 0, s.degree()};
  return {NodeCount::Kind::PositiveDimensional, s.dim(), s.degree()};
}

NodeCount node_count(const GradedIdeal& I, std::uint64_t seed, int c) {
  return node_count(singular_scheme(I, c, seed));
}

std::vector<std::int64_t> rao_h1_profile(const GradedIdeal& I, int kmax) {
  const HilbertData h = hilbert_data(I);
  if (h.dim() != 3) throw NotCalabiYau("not a threefold (dimension " + std::to_string(h.dim()) + ")");
  const std::int64_t d = h.degree();
  auto expect = chi_cy_polynomial(d);
  auto got = h.hilbert_polynomial;
  got.resize(std::max(got.size(), expect.size()), 0);
  expect.resize(got.size(), 0);
  if (got != expect) throw NotCalabiYau("Hilbert polynomial differs from (1/6) m d (m^2-1) + 7m for d = " + std::to_string(d));
  std::vector<std::int64_t> out;
  for (int k = 1; k <= kmax; ++k) out.push_back(chi_cy(d, k) - h.hf(k));
  return out;
}

GradedIdeal generic_linear_section(const GradedIdeal& I, int k, std::uint64_t seed) {
  const int n = I.nvars();
  if (k < 0 || k >= n) throw std::invalid_argument("section codimension out of range");
  if (k == 0) return I;
  SplitMix64 rng(derive_seed(seed, 3));
  const auto m = static_cast<std::size_t>(n - k);
  ModMatrix L(I.field(), static_cast<std::size_t>(n), m);
  do {
    L = ModMatrix::random(I.field(), static_cast<std::size_t>(n), m, rng);
  } while (L.rank() < m);
  const auto rows = L.to_rows();
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    Polynomial p = substitute_linear(g, rows).with_order(I.order());
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  return GradedIdeal(I.field(), n - k, std::move(gens), I.order());
}

VarietyReport variety_report(const GradedIdeal& I, const ReportOptions& opt) {
  GradedIdeal S = I;
  if (!I.saturated()) {
    if (opt.assume_saturated && expected_codim_check(I).ok) {
      S = I.with_saturated_flag(true);
    } else {
      control::heartbeat("saturating");
      S = saturate(I, derive_seed(opt.seed, 4));
    }
  }
  VarietyReport r;
  r.hilbert = hilbert_data(S);
  r.nvars = S.nvars();
  r.codim = r.hilbert.codim();
  r.dim = r.hilbert.dim();
  r.degree = r.hilbert.degree();
  for (int k = 0; k <= opt.kmax; ++k)
    r.graded_pieces.push_back(monomial_count(S.nvars(), k) - static_cast<std::uint64_t>(r.hilbert.hf(k)));
  const auto mins = minimal_gens_of(S);
  r.saturated_generators = mins.size();
  for (const auto& g : mins) r.generator_degrees.push_back(g.degree());
  std::sort(r.generator_degrees.begin(), r.generator_degrees.end());
  if (opt.rao) {
    try {
      r.rao_h1 = rao_h1_profile(S, opt.kmax);
    } catch (const NotCalabiYau& e) {
      r.rao_error = e.what();
    }
  }
  if (opt.singular) r.singular = singular_scheme(S, r.codim, opt.seed);
  return r;
}

}  // namespace pfcy
