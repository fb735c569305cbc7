#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pfcy/groebner.hpp"
#include "pfcy/polynomial.hpp"

namespace pfcy {

class ConstraintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Required degree of each off-diagonal entry; negative means the entry is 0.
class DegreePattern {
 public:
  explicit DegreePattern(int size = 0, int fill = -1);
  // entry (i,j) has degree a_i + a_j + 1
  static DegreePattern from_bundle(const std::vector<int>& a);
  static DegreePattern uniform(int size, int degree) { return DegreePattern(size, degree); }

  int size() const { return size_; }
  int degree(int i, int j) const;
  void set_degree(int i, int j, int d);
  bool operator==(const DegreePattern& o) const { return size_ == o.size_ && deg_ == o.deg_; }

 private:
  int size_;
  std::vector<int> deg_;
};

// Alternating matrix of forms: only entries above the diagonal are stored.
class SkewPolyMatrix {
 public:
  SkewPolyMatrix() = default;
  SkewPolyMatrix(const PrimeField& field, int nvars, int size);

  const PrimeField& field() const { return field_; }
  int nvars() const { return nvars_; }
  int size() const { return size_; }

  // m_ij with m_ji = -m_ij and m_ii = 0.
  Polynomial entry(int i, int j) const;
  void set(int i, int j, const Polynomial& p);

  SkewPolyMatrix principal(const std::vector<int>& indices) const;
  SkewPolyMatrix operator+(const SkewPolyMatrix& o) const;
  SkewPolyMatrix scaled(PrimeField::Element c) const;
  // Every nonzero entry (i<j) is homogeneous of the pattern degree.
  bool matches(const DegreePattern& pattern) const;
  // Entrywise evaluation at a point.
  std::vector<std::vector<PrimeField::Element>> evaluate(const std::vector<PrimeField::Element>& point) const;

 private:
  std::size_t slot(int i, int j) const;
  PrimeField field_;
  int nvars_ = 0;
  int size_ = 0;
  std::vector<Polynomial> upper_;
};

// Pfaffian by signed expansion along the first row (even size only).
Polynomial pfaffian(const SkewPolyMatrix& M);

// Pfaffians of all principal 2k x 2k submatrices, subsets in lexicographic
// order. For size 2k+1 the i-th entry is the Pfaffian with row and column i
// deleted.
std::vector<Polynomial> sub_pfaffians(const SkewPolyMatrix& M, int k);
GradedIdeal sub_pfaffian_ideal(const SkewPolyMatrix& M, int k);

// Entries random_homogeneous of the pattern degree, drawn row by row from one
// SplitMix64 stream seeded with `seed`.
SkewPolyMatrix random_section(const DegreePattern& pattern, std::uint64_t seed, const PrimeField& field,
                              int nvars = 7);

// N x N linear alternating A and a column c of N quadrics subject to
// A * phi_k^T = 0 and phi_k . c = 0 for every constraint row phi_k.
struct BorderedModel {
  int N = 0;
  std::vector<std::vector<Polynomial>> phi;
  SkewPolyMatrix A;
  std::vector<Polynomial> c;
  int pfaffian_size = 0;
  std::size_t a_space_dim = 0;
  std::size_t c_space_dim = 0;

  // [[A, c], [-c^T, 0]]
  SkewPolyMatrix bordered() const;
};

BorderedModel bordered_model(int N, const std::vector<std::vector<Polynomial>>& phi, std::uint64_t seed,
                             const PrimeField& field);
GradedIdeal pfaffian_ideal_of_bordered(const BorderedModel& B);

// For phi = (x_0..x_6): the quadric Q with Pf(A without row/column i) = +-x_i Q.
Polynomial euler_quadric(const BorderedModel& B);

// Linear alternating B' with B' phi_0^T = c; its existence is the surjectivity
// needed for the degeneration.
SkewPolyMatrix degeneration_lift(const BorderedModel& B);
// lambda != 0: sub-Pfaffians of A + lambda B'; lambda = 0: the bordered ideal.
GradedIdeal degeneration_fiber(const BorderedModel& B, const SkewPolyMatrix& lift, PrimeField::Element lambda);
GradedIdeal degeneration_family(const BorderedModel& B, PrimeField::Element lambda);

}  // namespace pfcy
