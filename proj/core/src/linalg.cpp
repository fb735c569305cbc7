#include "pfcy/linalg.hpp"

#include <stdexcept>

namespace pfcy {

ModMatrix ModMatrix::identity(const PrimeField& f, std::size_t n) {
  ModMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ModMatrix ModMatrix::random(const PrimeField& f, std::size_t rows, std::size_t cols, SplitMix64& rng) {
  ModMatrix m(f, rows, cols);
  for (auto& v : m.a_) v = static_cast<Element>(rng.below(f.characteristic()));
  return m;
}

ModMatrix ModMatrix::random_invertible(const PrimeField& f, std::size_t n, SplitMix64& rng) {
  for (;;) {
    ModMatrix m = random(f, n, n, rng);
    if (m.determinant() != 0) return m;
  }
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shapes do not match");
  ModMatrix r(f_, rows_, o.cols_);
  const std::uint64_t p = f_.characteristic();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc = (acc + static_cast<std::uint64_t>((*this)(i, k)) * o(k, j)) % p;
      r(i, j) = static_cast<Element>(acc);
    }
  return r;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix r(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

std::vector<std::size_t> ModMatrix::rref() {
  const std::uint64_t p = f_.characteristic();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if ((*this)(i, c)) {
        piv = i;
        break;
      }
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(r, k), (*this)(piv, k));
    Element inv = f_.inv((*this)(r, c));
    Element* pr = row(r);
    for (std::size_t k = c; k < cols_; ++k) pr[k] = static_cast<Element>(static_cast<std::uint64_t>(pr[k]) * inv % p);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Element* ri = row(i);
      Element fac = ri[c];
      if (!fac) continue;
      std::uint64_t m = p - fac;
      for (std::size_t k = c; k < cols_; ++k)
        if (pr[k]) ri[k] = static_cast<Element>((ri[k] + m * pr[k]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t ModMatrix::rank() const {
  ModMatrix c = *this;
  return c.rref().size();
}

ModMatrix::Element ModMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  ModMatrix m = *this;
  const std::uint64_t p = f_.characteristic();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = rows_;
    for (std::size_t i = c; i < rows_; ++i)
      if (m(i, c)) {
        piv = i;
        break;
      }
    if (piv == rows_) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(c, k), m(piv, k));
      det = (p - det) % p;
    }
    det = det * m(c, c) % p;
    Element inv = f_.inv(m(c, c));
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (!m(i, c)) continue;
      std::uint64_t fac = static_cast<std::uint64_t>(m(i, c)) * inv % p;
      for (std::size_t k = c; k < cols_; ++k) m(i, k) = static_cast<Element>((m(i, k) + (p - fac) * m(c, k)) % p);
    }
  }
  return static_cast<Element>(det);
}

std::optional<ModMatrix> ModMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  ModMatrix aug(f_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = aug.rref();
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  ModMatrix inv(f_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<std::vector<ModMatrix::Element>> ModMatrix::nullspace() const {
  ModMatrix m = *this;
  auto piv = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Element>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f_.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<ModMatrix::Element>> ModMatrix::solve(const std::vector<Element>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("right-hand side has wrong length");
  ModMatrix aug(f_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto piv = aug.rref();
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  std::vector<Element> x(cols_, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, cols_);
  return x;
}

std::vector<std::vector<ModMatrix::Element>> ModMatrix::to_rows() const {
  std::vector<std::vector<Element>> out(rows_, std::vector<Element>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

}  // namespace pfcy
