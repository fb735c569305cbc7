#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "pfcy/monomial.hpp"

namespace pfcy {

// Hilbert series data of S/J for S = k[x_0..x_{n-1}] and J homogeneous.
struct HilbertData {
  int nvars = 0;
  // HS(t) = numerator(t) / (1-t)^nvars.
  std::vector<std::int64_t> numerator;
  // HS(t) = h_vector(t) / (1-t)^krull_dim with h_vector(1) != 0.
  std::vector<std::int64_t> h_vector;
  int krull_dim = 0;
  // Coefficients of the Hilbert polynomial in m, constant term first.
  std::vector<mpq_class> hilbert_polynomial;

  // Projective dimension; -1 for the empty scheme.
  int dim() const { return krull_dim - 1; }
  // Codimension in P^{nvars-1}.
  int codim() const { return nvars - krull_dim; }
  // Degree of the projective scheme (0 when empty).
  std::int64_t degree() const;
  std::int64_t hf(int k) const;
  mpq_class hp(const mpq_class& m) const;
  // Least k0 with hf(k) == hp(k) for all k >= k0.
  int regularity_index() const;

  static HilbertData from_numerator(std::vector<std::int64_t> numerator, int nvars);
};

// Numerator of the Hilbert series of S/(gens) for a monomial ideal.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, int nvars);

// Drop generators divisible by another generator; result sorted.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

// Binomial coefficient C(n, k) for n possibly negative (zero if k < 0).
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace pfcy
