#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfcy/groebner.hpp"

namespace pfcy {

class NotCalabiYau : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CodimCheck {
  bool ok = false;
  int codim = 0;
};

CodimCheck expected_codim_check(const GradedIdeal& I, int expected = 3);

struct SingularScheme {
  GradedIdeal ideal;
  HilbertData hilbert;
  // Every c x c minor of the full Jacobian lies in `ideal`, so it is the
  // saturation of I + (minors), not just a superset of its zero set.
  bool certified = false;
  std::size_t minors_used = 0;
  std::size_t minors_certified = 0;

  bool empty() const { return hilbert.krull_dim == 0; }
  int dim() const { return hilbert.dim(); }
  std::int64_t degree() const { return hilbert.degree(); }
};

// saturate(I + c x c minors of the Jacobian of the minimal generators). The
// minors are taken of L J R for seeded random L (within each generator degree,
// at most 6 rows per degree) and R (6 columns), then checked against the full
// Jacobian by arithmetic in the quotient ring. I must be saturated.
SingularScheme singular_scheme(const GradedIdeal& I, int c, std::uint64_t seed);

struct NodeCount {
  enum class Kind { Smooth, Nodes, PositiveDimensional };
  Kind kind = Kind::Smooth;
  int dim = -1;
  std::int64_t degree = 0;

  std::string label() const;
};

NodeCount node_count(const SingularScheme& s);
NodeCount node_count(const GradedIdeal& I, std::uint64_t seed, int c = 3);

// h^1(I_X(k)) for k = 1..kmax, via the Calabi-Yau Riemann-Roch polynomial.
// Throws NotCalabiYau when the Hilbert polynomial is not (1/6) m d (m^2-1) + 7m.
std::vector<std::int64_t> rao_h1_profile(const GradedIdeal& saturated, int kmax);

// Pull back along a seeded generic linear embedding P^{n-1-k} -> P^{n-1}.
GradedIdeal generic_linear_section(const GradedIdeal& I, int k, std::uint64_t seed);

struct ReportOptions {
  std::uint64_t seed = 1;
  int kmax = 4;
  bool singular = false;
  bool rao = true;
  // Trust the input as saturated (e.g. perfect codim 3 Pfaffian ideals).
  bool assume_saturated = false;
};

struct VarietyReport {
  int nvars = 0;
  int codim = 0;
  int dim = 0;
  std::int64_t degree = 0;
  HilbertData hilbert;
  std::vector<std::uint64_t> graded_pieces;  // h^0(I(k)), k = 0..kmax
  std::optional<std::vector<std::int64_t>> rao_h1;
  std::string rao_error;
  std::optional<SingularScheme> singular;
  std::size_t saturated_generators = 0;
  std::vector<int> generator_degrees;
};

// Saturates I (unless flagged saturated) and collects every invariant.
VarietyReport variety_report(const GradedIdeal& I, const ReportOptions& options);

}  // namespace pfcy
