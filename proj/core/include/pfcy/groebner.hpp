#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "pfcy/hilbert.hpp"
#include "pfcy/polynomial.hpp"

namespace pfcy {

struct GroebnerOptions {
  // Stop after this degree (truncated basis); negative means run to completion.
  int max_degree = -1;
};

// Reduced Groebner basis of a homogeneous ideal: monic elements, listed by
// increasing degree.
struct GroebnerBasis {
  PrimeField field;
  int nvars = 0;
  MonomialOrder order;
  std::vector<Polynomial> elements;
  // Indices into the input list of generators that were not redundant when
  // processed degree by degree; they form a minimal generating set.
  std::vector<std::size_t> minimal_input;
  bool truncated = false;

  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const { return elements.size() == 1 && elements[0].degree() == 0; }
};

// Homogeneous Buchberger with Gebauer-Moeller pair criteria, run degree by
// degree. All inputs must be homogeneous and share ring and order.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const GroebnerOptions& options = {});
GroebnerBasis buchberger(const PrimeField& field, int nvars, const MonomialOrder& order,
                         const std::vector<Polynomial>& gens, const GroebnerOptions& options = {});

// Homogeneous ideal of S = GF(p)[x_0..x_{n-1}], immutable; the Groebner basis is
// computed on first use and shared between copies.
class GradedIdeal {
 public:
  GradedIdeal(const PrimeField& field, int nvars, std::vector<Polynomial> gens,
              MonomialOrder order = MonomialOrder::degrevlex(), bool saturated = false);
  // Ideal with generators gens whose Groebner basis is already known.
  static GradedIdeal with_basis(std::vector<Polynomial> gens, GroebnerBasis basis, bool saturated);

  const PrimeField& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool saturated() const { return saturated_; }
  GradedIdeal with_saturated_flag(bool s) const;

  const GroebnerBasis& basis() const;
  bool has_basis() const;

 private:
  struct Cache {
    std::mutex mu;
    std::shared_ptr<const GroebnerBasis> gb;
  };
  PrimeField field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  bool saturated_;
  std::shared_ptr<Cache> cache_;
};

// Normal form with respect to a reduced Groebner basis, one homogeneous
// component at a time.
class Reducer {
 public:
  explicit Reducer(const GroebnerBasis& gb);
  Polynomial reduce(const Polynomial& p) const;
  bool reduces_to_zero(const Polynomial& p) const { return reduce(p).is_zero(); }

 private:
  const GroebnerBasis* gb_;
  std::vector<Monomial> lms_;
};

Polynomial normal_form(const Polynomial& p, const GradedIdeal& I);
bool ideal_contains(const GradedIdeal& I, const Polynomial& p);

HilbertData hilbert_data(const GroebnerBasis& gb);
HilbertData hilbert_data(const GradedIdeal& I);

// dim_k of the degree-k piece of I.
std::uint64_t graded_piece_dim(const GradedIdeal& I, int k);

// Minimal homogeneous generators of the ideal generated by gens.
std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens);

// I : (x_0,...,x_{n-1})^infinity by Bayer's method: a seeded random change
// of coordinates makes the last variable generic, a degrevlex basis is
// divided by its powers of that variable, and the result is mapped back.
GradedIdeal saturate(const GradedIdeal& I, std::uint64_t seed);

// Apply x -> g x to every generator (g is n x n, row i gives x_i).
std::vector<Polynomial> change_coordinates(const std::vector<Polynomial>& gens,
                                           const std::vector<std::vector<PrimeField::Element>>& g);

}  // namespace pfcy
