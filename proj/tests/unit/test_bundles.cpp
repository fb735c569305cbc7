#include "doctest.h"
#include "pfcy/bundles.hpp"
#include "pfcy/rng.hpp"

using namespace pfcy;

namespace {

std::string labels(const Classification& c) {
  std::string s;
  for (const auto& e : c.accepted) s += e.verdict.label + "=" + e.spec.to_string() + ";";
  return s;
}

BundleSpec random_spec(SplitMix64& rng) {
  std::vector<int> a, b;
  const int na = static_cast<int>(rng.below(8));
  for (int i = 0; i < na; ++i) a.push_back(static_cast<int>(rng.below(9)) - 4);
  const int nb = static_cast<int>(rng.below(3));
  for (int i = 0; i < nb; ++i) b.push_back(static_cast<int>(rng.below(5)) - 2);
  return BundleSpec(a, b);
}

}  // namespace

TEST_CASE("w invariant examples") {
  CHECK(w_invariant(BundleSpec({0})).to_string() == "1/2");
  CHECK(w_invariant(BundleSpec({}, {0})) == HalfInteger::integer(2));
  CHECK(w_invariant(BundleSpec({0, 0, 0, 0, 0, 0, 0})).to_string() == "7/2");
  CHECK(w_invariant(BundleSpec({1, 1, 1, -1, -1})).to_string() == "7/2");
  CHECK(w_invariant(BundleSpec({3})).to_string() == "7/2");
  CHECK(w_invariant(BundleSpec({-1})) == HalfInteger::from_twice(-1));
}

TEST_CASE("property: w is additive and adjunction is w = 7/2 in odd rank") {
  SplitMix64 rng(2024);
  for (int t = 0; t < 500; ++t) {
    const BundleSpec E = random_spec(rng), G = random_spec(rng);
    CHECK(w_invariant(E + G) == w_invariant(E) + w_invariant(G));
    if (E.rank() % 2 == 1) CHECK(adjunction_check(E) == (w_invariant(E) == HalfInteger::from_twice(7)));
    else CHECK_FALSE(adjunction_check(E));
  }
}

TEST_CASE("bundle specs") {
  const BundleSpec B({1, -1, 1, 1, -1});
  CHECK(B.a == std::vector<int>{-1, -1, 1, 1, 1});
  CHECK(B.rank() == 5);
  CHECK(B.u() == 2);
  CHECK(B.c1() == 1);
  CHECK(B.to_string() == "3 O(1) + 2 O(-1)");
  CHECK(BundleSpec({1}, {0}).to_string() == "Omega^1(1) + O(1)");
  CHECK(BundleSpec({1}, {0}).rank() == 7);
  CHECK(BundleSpec({}, {0}).c1() == -1);
  CHECK_FALSE(BundleSpec({1}, {0}).decomposable());
}

TEST_CASE("sequence pairs") {
  const SequencePair s = sequence_pair(BundleSpec({1, 1, 1, -1, -1}));
  CHECK(s.l == std::vector<int>{-1, -1});
  CHECK(s.k == std::vector<int>{1, 1, 1});
  const SequencePair t = sequence_pair(BundleSpec({2, 0, 3}, {-1}));
  CHECK(t.n_neg() == 6);
  CHECK(t.k == std::vector<int>{3, 2});
}

TEST_CASE("lemma and rule verdicts") {
  CHECK(lemma_filters(BundleSpec({0, 0})).label.rfind("adjunction", 0) == 0);
  CHECK(lemma_filters(BundleSpec({3})).label.rfind("rank", 0) == 0);
  // n_neg >= n_pos
  CHECK(lemma_filters(BundleSpec({-1, -1, 4})).label.rfind("lemma", 0) == 0);
  // l_1 + k_2 < 0
  CHECK(lemma_filters(BundleSpec({-3, 2, 3})).label.rfind("lemma", 0) == 0);
  const Verdict x11 = lemma_filters(BundleSpec({1, 1, 1, -1, -1}));
  CHECK(x11.kind == Verdict::Kind::Excluded);
  CHECK(x11.label == "excluded:singular");
  CHECK_FALSE(x11.evidence.empty());
  CHECK(lemma_filters(BundleSpec({1, 1, 0, 0, -1})).label == "excluded:degenerate");
  CHECK(lemma_filters(BundleSpec({1}, {0})).label == "2a");
  CHECK(lemma_filters(BundleSpec({0, 0, 0}, {0})).label == "2b");
  CHECK(lemma_filters(BundleSpec({-2, 2, 2})).label == "1a");
  CHECK(lemma_filters(BundleSpec({0, 1, 1})).description == "CI(2,2,3)");
  CHECK(lemma_filters(BundleSpec({0, 0, 0, 0, 0, 0, 0})).label == "1f");
}

TEST_CASE("classification is stable for bounds 2..5") {
  CHECK_THROWS(enumerate_classification(1));
  const Classification base = enumerate_classification(2);
  CHECK(base.accepted.size() == 10);
  std::size_t accepted = 0, excluded = 0;
  for (const auto& e : base.accepted) {
    if (e.verdict.kind == Verdict::Kind::Accepted) ++accepted;
    if (e.verdict.kind == Verdict::Kind::Excluded) ++excluded;
    CHECK(adjunction_check(e.spec));
    CHECK(e.spec.rank() <= kMaxRank);
  }
  CHECK(accepted == 8);
  CHECK(excluded == 2);
  CHECK(base.candidates == base.failed + base.accepted.size());
  for (int bound = 3; bound <= 5; ++bound) {
    const Classification c = enumerate_classification(bound);
    CHECK(labels(c) == labels(base));
    CHECK(c.candidates > base.candidates);
    std::uint64_t total = 0;
    for (const auto& [rule, n] : c.failures_by_rule) total += n;
    CHECK(total == c.failed);
  }
}

TEST_CASE("generator degrees") {
  CHECK(generator_degrees(BundleSpec({0, 0, 0, 0, 1})) == std::vector<int>{2, 3, 3, 3, 3});
  CHECK(generator_degrees(BundleSpec({1, 1, 1, -1, -1})) == std::vector<int>{2, 2, 2, 4, 4});
  CHECK(generator_degrees(BundleSpec({0, 1, 1})) == std::vector<int>{2, 2, 3});
}

TEST_CASE("decomposable models have the predicted degrees") {
  const std::vector<std::pair<std::vector<int>, std::int64_t>> cases{
      {{-2, 2, 2}, 5}, {{-1, 1, 2}, 8}, {{0, 0, 2}, 9}, {{0, 1, 1}, 12}, {{0, 0, 0, 0, 1}, 13}, {{0, 0, 0, 0, 0, 0, 0}, 14}};
  for (const auto& [a, degree] : cases) {
    const HilbertData h = hilbert_data(bundle_model(BundleSpec(a), 1));
    CHECK(h.codim() == 3);
    CHECK(h.degree() == degree);
  }
  CHECK_THROWS(bundle_model(BundleSpec({1}, {0}), 1));
}

TEST_CASE("degenerate shape evidence") {
  const DegenerateEvidence e = degenerate_shape_evidence(1);
  CHECK(e.holds());
  CHECK(e.codim == 3);
  CHECK(e.degenerate_component_degree > 0);
  CHECK(e.degenerate_component_span < 6);
}
