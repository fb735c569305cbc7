#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pfcy/field.hpp"
#include "pfcy/rng.hpp"

namespace pfcy {

// Dense matrix over GF(p), row-major.
class ModMatrix {
 public:
  using Element = PrimeField::Element;

  ModMatrix(const PrimeField& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static ModMatrix identity(const PrimeField& f, std::size_t n);
  static ModMatrix random(const PrimeField& f, std::size_t rows, std::size_t cols, SplitMix64& rng);
  // Uniform random invertible matrix (resampled until the determinant is nonzero).
  static ModMatrix random_invertible(const PrimeField& f, std::size_t n, SplitMix64& rng);

  const PrimeField& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Element& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Element* row(std::size_t r) { return a_.data() + r * cols_; }
  const Element* row(std::size_t r) const { return a_.data() + r * cols_; }

  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix transpose() const;

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  Element determinant() const;
  std::optional<ModMatrix> inverse() const;
  // Basis of {x : A x = 0}, one vector per free column.
  std::vector<std::vector<Element>> nullspace() const;
  // Some x with A x = b (free variables set to zero), or nothing.
  std::optional<std::vector<Element>> solve(const std::vector<Element>& b) const;

  std::vector<std::vector<Element>> to_rows() const;

 private:
  PrimeField f_;
  std::size_t rows_, cols_;
  std::vector<Element> a_;
};

}  // namespace pfcy
