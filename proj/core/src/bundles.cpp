#include "pfcy/bundles.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "pfcy/hilbert.hpp"
#include "pfcy/formulas.hpp"
#include "pfcy/pfaffian.hpp"

namespace pfcy {

std::string HalfInteger::to_string() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

BundleSpec::BundleSpec(std::vector<int> a_, std::vector<int> b_) : a(std::move(a_)), b(std::move(b_)) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
}

std::int64_t BundleSpec::c1() const {
  std::int64_t s = 0;
  for (int x : a) s += x;
  for (int x : b) s += -1 + 6 * x;
  return s;
}

BundleSpec BundleSpec::operator+(const BundleSpec& o) const {
  std::vector<int> na = a, nb = b;
  na.insert(na.end(), o.a.begin(), o.a.end());
  nb.insert(nb.end(), o.b.begin(), o.b.end());
  return BundleSpec(std::move(na), std::move(nb));
}

std::string BundleSpec::to_string() const {
  std::string s;
  auto add = [&s](const std::string& t) { s += (s.empty() ? "" : " + ") + t; };
  for (std::size_t i = 0; i < b.size();) {
    std::size_t j = i;
    while (j < b.size() && b[j] == b[i]) ++j;
    add((j - i > 1 ? std::to_string(j - i) + " " : "") + "Omega^1(" + std::to_string(b[i] + 1) + ")");
    i = j;
  }
  for (std::size_t i = a.size(); i > 0;) {
    std::size_t j = i;
    while (j > 0 && a[j - 1] == a[i - 1]) --j;
    add((i - j > 1 ? std::to_string(i - j) + " " : "") + "O(" + std::to_string(a[i - 1]) + ")");
    i = j;
  }
  return s.empty() ? "0" : s;
}

HalfInteger w_invariant(const BundleSpec& F) { return HalfInteger::from_twice(2 * F.c1() + F.rank()); }

bool adjunction_check(const BundleSpec& B) { return B.rank() % 2 == 1 && B.u() + B.c1() == 3; }

SequencePair sequence_pair(const BundleSpec& B) {
  SequencePair s;
  for (int x : B.a)
    if (x < 0) s.l.push_back(x);
  for (int x : B.b)
    if (x < 0) s.l.insert(s.l.end(), 6, x);
  std::sort(s.l.begin(), s.l.end());
  for (int x : B.a)
    if (x > 0) s.k.push_back(x);
  std::sort(s.k.rbegin(), s.k.rend());
  return s;
}

namespace {

Verdict fail(std::string rule, std::string reason) { return {Verdict::Kind::Failed, rule + ": " + reason, "", ""}; }
Verdict accept(std::string label, std::string description) {
  return {Verdict::Kind::Accepted, std::move(label), std::move(description), ""};
}

const char* kSingularEvidence = "x11: node_count >= 1 for the recorded seeds";
const char* kDegenerateEvidence = "degenerate_shape_evidence: codim != 3, h0(I(1)) > 0, non-CY Hilbert polynomial or a component in a P^4";

}  // namespace

Verdict lemma_filters(const BundleSpec& B) {
  if (!adjunction_check(B)) return fail("adjunction", "u + c1 = " + std::to_string(B.u() + B.c1()) + " != 3");
  // u = 0: the only 0 x 0 Pfaffian is 1, so Pf is empty.
  if (B.rank() < 3) return fail("rank", "2u+1 = " + std::to_string(B.rank()) + " < 3 gives the unit ideal");
  const SequencePair s = sequence_pair(B);
  if (s.n_neg() > 0) {
    if (s.n_neg() >= s.n_pos())
      return fail("lemma", "n_neg = " + std::to_string(s.n_neg()) + " >= n_pos = " + std::to_string(s.n_pos()));
    for (int i = 0; i < s.n_neg(); ++i)
      if (s.l[static_cast<std::size_t>(i)] + s.k[static_cast<std::size_t>(i + 1)] < 0)
        return fail("lemma", "l_" + std::to_string(i + 1) + " + k_" + std::to_string(i + 2) + " < 0");
  }
  for (int x : B.b)
    if (x != 0) return fail("rule1", "b = " + std::to_string(x) + " != 0");
  if (B.b.size() > 1) return fail("rule2", "n_b = " + std::to_string(B.b.size()) + " > 1");
  if (B.b.size() == 1) {
    if (!B.a.empty() && B.a.front() < 0) return fail("rule3", "negative a with n_b = 1");
    if (B.a == std::vector<int>{1}) return accept("2a", "B_14");
    if (B.a == std::vector<int>{0, 0, 0}) return accept("2b", "degree 15");
    return fail("rule3", "forced shape");
  }
  const int l1 = s.l.empty() ? 0 : s.l[0];
  if (l1 < -2) return fail("rule4", "l_1 = " + std::to_string(l1) + " < -2");
  if (l1 == -2) {
    if (B.a == std::vector<int>{-2, 2, 2}) return accept("1a", "CI(1,1,5)");
    return fail("rule5", "forced shape");
  }
  if (l1 == -1 && s.l.size() >= 2 && s.l[1] == -1) {
    if (B.a == std::vector<int>{-1, -1, 1, 1, 1})
      return {Verdict::Kind::Excluded, "excluded:singular", "X_11", kSingularEvidence};
    return fail("rule6", "forced shape");
  }
  if (l1 == -1) {
    if (B.a == std::vector<int>{-1, 1, 2}) return accept("1b", "CI(1,2,4)");
    if (B.a == std::vector<int>{-1, 0, 0, 1, 1})
      return {Verdict::Kind::Excluded, "excluded:degenerate", "constant entries zero", kDegenerateEvidence};
    return fail("rule7", "forced shape");
  }
  if (B.a == std::vector<int>{0, 0, 2}) return accept("1c", "CI(1,3,3)");
  if (B.a == std::vector<int>{0, 1, 1}) return accept("1d", "CI(2,2,3)");
  if (B.a == std::vector<int>{0, 0, 0, 0, 1}) return accept("1e", "degree 13");
  if (B.a == std::vector<int>(7, 0)) return accept("1f", "degree 14");
  return fail("rule8", "forced shape");
}

namespace {

// Multisets of `count` twists in [lo, hi], ascending, with the given sum.
void for_each_multiset(int count, int lo, int hi, std::int64_t sum, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& fn) {
  if (count == 0) {
    if (sum == 0) fn(cur);
    return;
  }
  for (int x = lo; x <= hi; ++x) {
    const std::int64_t rest = sum - x;
    if (rest < static_cast<std::int64_t>(count - 1) * x) break;
    if (rest > static_cast<std::int64_t>(count - 1) * hi) continue;
    cur.push_back(x);
    for_each_multiset(count - 1, x, hi, rest, cur, fn);
    cur.pop_back();
  }
}

void for_each_b(int count, int lo, int hi, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& fn) {
  if (count == 0) {
    fn(cur);
    return;
  }
  for (int x = cur.empty() ? lo : cur.back(); x <= hi; ++x) {
    cur.push_back(x);
    for_each_b(count - 1, lo, hi, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

Classification enumerate_classification(int bound) {
  if (bound < 2) throw std::invalid_argument("bound must be at least 2");
  Classification out;
  out.bound = bound;
  std::map<std::string, std::uint64_t> failures;
  for (int nb = 0; nb <= 2; ++nb) {
    std::vector<int> bcur;
    for_each_b(nb, -bound, bound, bcur, [&](const std::vector<int>& b) {
      std::int64_t bc1 = 0;
      for (int x : b) bc1 += -1 + 6 * x;
      for (int na = 0; na + 6 * nb <= kMaxRank; ++na) {
        const int rank = na + 6 * nb;
        if (rank % 2 == 0) continue;
        const int u = (rank - 1) / 2;
        // adjunction: sum a = 3 - u - c1(b part)
        const std::int64_t asum = 3 - u - bc1;
        std::vector<int> acur;
        for_each_multiset(na, -bound, bound, asum, acur, [&](const std::vector<int>& a) {
          BundleSpec spec(a, b);
          ++out.candidates;
          Verdict v = lemma_filters(spec);
          if (v.kind == Verdict::Kind::Failed) {
            ++out.failed;
            ++failures[v.label.substr(0, v.label.find(':'))];
          } else {
            out.accepted.push_back({std::move(spec), std::move(v)});
          }
        });
      }
    });
  }
  std::sort(out.accepted.begin(), out.accepted.end(),
            [](const ClassifiedBundle& x, const ClassifiedBundle& y) { return x.verdict.label < y.verdict.label; });
  out.failures_by_rule.assign(failures.begin(), failures.end());
  return out;
}

std::vector<int> generator_degrees(const BundleSpec& B) {
  if (!B.decomposable()) throw std::invalid_argument("generator degrees need a decomposable bundle");
  std::vector<int> out;
  for (int x : B.a) out.push_back(3 - x);
  std::sort(out.begin(), out.end());
  return out;
}

GradedIdeal bundle_model(const BundleSpec& B, std::uint64_t seed, const PrimeField& field) {
  if (!B.decomposable()) throw std::invalid_argument("bundle_model needs a decomposable bundle");
  if (B.rank() % 2 == 0) throw std::invalid_argument("bundle rank must be odd");
  const SkewPolyMatrix M = random_section(DegreePattern::from_bundle(B.a), seed, field);
  return sub_pfaffian_ideal(M, B.u());
}

DegenerateEvidence degenerate_shape_evidence(std::uint64_t seed, const PrimeField& field) {
  // Indices follow the sorted twists (-1, 0, 0, 1, 1).
  DegreePattern pattern = DegreePattern::from_bundle({-1, 0, 0, 1, 1});
  for (int i = 0; i < pattern.size(); ++i)
    for (int j = i + 1; j < pattern.size(); ++j)
      if (pattern.degree(i, j) == 0) pattern.set_degree(i, j, -1);
  const SkewPolyMatrix M = random_section(pattern, seed, field);
  const GradedIdeal I = sub_pfaffian_ideal(M, 2);
  const GradedIdeal S = saturate(I, seed);
  const HilbertData h = hilbert_data(S);
  DegenerateEvidence e;
  e.codim = h.codim();
  e.degree = h.degree();
  e.linear_forms = monomial_count(S.nvars(), 1) - static_cast<std::uint64_t>(h.hf(1));
  auto hp = h.hilbert_polynomial;
  auto cy = chi_cy_polynomial(e.degree);
  hp.resize(std::max(hp.size(), cy.size()), 0);
  cy.resize(hp.size(), 0);
  e.calabi_yau_hilbert_polynomial = h.dim() == 3 && hp == cy;

  // Row 0 has two linear entries and zeros; V(m03, m04, Pf of rows 1..4) lies
  // in a P^4 and is contained in Pf(M).
  const GradedIdeal J(field, M.nvars(), {M.entry(0, 3), M.entry(0, 4), pfaffian(M.principal({1, 2, 3, 4}))});
  const HilbertData hj = hilbert_data(J);
  bool contained = true;
  for (const auto& g : I.generators()) contained = contained && ideal_contains(J, g);
  if (contained && hj.codim() == 3) {
    e.degenerate_component_degree = hj.degree();
    e.degenerate_component_span = S.nvars() - 1 - 2;
  }
  return e;
}

}  // namespace pfcy
