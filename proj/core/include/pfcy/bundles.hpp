#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfcy/field.hpp"
#include "pfcy/groebner.hpp"

namespace pfcy {

// Exact element of (1/2)Z, stored as twice its value.
struct HalfInteger {
  std::int64_t twice = 0;

  static HalfInteger from_twice(std::int64_t t) { return {t}; }
  static HalfInteger integer(std::int64_t v) { return {2 * v}; }
  HalfInteger operator+(HalfInteger o) const { return {twice + o.twice}; }
  HalfInteger operator-(HalfInteger o) const { return {twice - o.twice}; }
  bool operator==(const HalfInteger& o) const = default;
  auto operator<=>(const HalfInteger& o) const = default;
  std::string to_string() const;
};

// E = sum O(a_i) + sum Omega^1(b_j + 1) on P^6.
struct BundleSpec {
  std::vector<int> a;  // sorted ascending
  std::vector<int> b;  // sorted ascending

  BundleSpec() = default;
  BundleSpec(std::vector<int> a_, std::vector<int> b_ = {});

  int rank() const { return static_cast<int>(a.size() + 6 * b.size()); }
  // rank = 2u + 1
  int u() const { return (rank() - 1) / 2; }
  std::int64_t c1() const;
  bool decomposable() const { return b.empty(); }
  BundleSpec operator+(const BundleSpec& o) const;
  bool operator==(const BundleSpec& o) const = default;
  auto operator<=>(const BundleSpec& o) const = default;
  std::string to_string() const;
};

// w(F) = c1(F) + rk(F)/2.
HalfInteger w_invariant(const BundleSpec& F);

// u + sum(-1 + 6 b_i) + sum a_j = 3, i.e. w(E) = 7/2. False for even rank.
bool adjunction_check(const BundleSpec& B);

struct SequencePair {
  std::vector<int> l;  // negative twists, weakly increasing, negative b's six times
  std::vector<int> k;  // positive a's, weakly decreasing
  int n_neg() const { return static_cast<int>(l.size()); }
  int n_pos() const { return static_cast<int>(k.size()); }
};
SequencePair sequence_pair(const BundleSpec& B);

struct Verdict {
  enum class Kind { Accepted, Excluded, Failed };
  Kind kind = Kind::Failed;
  // Accepted: theorem case "1a".."1f", "2a", "2b".
  // Excluded: "excluded:singular" or "excluded:degenerate".
  // Failed: "<rule>: <reason>".
  std::string label;
  // Accepted decomposable cases: complete intersection type or model name.
  std::string description;
  // Excluded shapes: the computation that backs the exclusion.
  std::string evidence;
};

// Applies the lemma conditions and the deduction rules rule1..rule8 in order
// and reports the first violation, or the case reached.
Verdict lemma_filters(const BundleSpec& B);

struct ClassifiedBundle {
  BundleSpec spec;
  Verdict verdict;
};

struct Classification {
  int bound = 0;
  std::vector<ClassifiedBundle> accepted;  // accepted and excluded, sorted by label
  std::uint64_t candidates = 0;            // specs passing adjunction
  std::uint64_t failed = 0;
  std::vector<std::pair<std::string, std::uint64_t>> failures_by_rule;
};

inline constexpr int kMaxRank = 13;

// All specs with twists in [-bound, bound], odd rank <= 13, at most two
// Omega^1 summands, passing adjunction.
Classification enumerate_classification(int bound);

// {3 - a_i}, sorted ascending.
std::vector<int> generator_degrees(const BundleSpec& B);

// Pfaffian ideal of a random section of wedge^2 E(1) for decomposable E.
GradedIdeal bundle_model(const BundleSpec& B, std::uint64_t seed, const PrimeField& field = PrimeField());

struct DegenerateEvidence {
  int codim = 0;
  std::int64_t degree = 0;
  std::uint64_t linear_forms = 0;  // h^0(I_X(1)) of the saturation
  bool calabi_yau_hilbert_polynomial = false;
  // A threefold component spanning only a linear P^k (k < 6), or 0.
  std::int64_t degenerate_component_degree = 0;
  int degenerate_component_span = 6;
  bool holds() const {
    return codim != 3 || linear_forms > 0 || !calabi_yau_hilbert_polynomial || degenerate_component_degree > 0;
  }
};

// O(-1) + 2 O(1) + 2 O with the constant entries of the section set to zero.
DegenerateEvidence degenerate_shape_evidence(std::uint64_t seed, const PrimeField& field = PrimeField());

}  // namespace pfcy
