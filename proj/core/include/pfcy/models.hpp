#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfcy/groebner.hpp"
#include "pfcy/pfaffian.hpp"

namespace pfcy {

// Named threefold constructions in P^6:
//   ci-12  3x3 skew model of O + 2 O(1), a complete intersection (2,2,3)
//   pf-13  5x5 model of 4 O + O(1)
//   pf-14  7x7 generic linear matrix
//   b14    Euler-bordered model of Omega^1(1) + O(1)
//   x11    5x5 model of 3 O(1) + 2 O(-1)
//   b15    kernel-bordered model of ker(10 O -> 2 O(1)) + O(1)
struct Model {
  std::string name;
  std::uint64_t seed = 0;
  GradedIdeal ideal;
  // Twists a_i for the decomposable models.
  std::vector<int> bundle;
  std::optional<DegreePattern> pattern;
  std::optional<SkewPolyMatrix> matrix;
  std::optional<BorderedModel> bordered;
  // b14: the quadric Q with x_i Q among the sub-Pfaffians of A.
  std::optional<Polynomial> containment_quadric;
  // Maximal Pfaffians of an odd matrix: perfect, hence saturated, once the
  // codimension is 3.
  bool maximal_pfaffian = false;
  std::vector<std::string> provenance;
};

const std::vector<std::string>& model_names();
bool is_model_name(const std::string& name);
Model build_model(const std::string& name, std::uint64_t seed, const PrimeField& field = PrimeField());

// The generic 2 x N linear constraint rows used for b15.
std::vector<std::vector<Polynomial>> random_linear_rows(int rows, int N, std::uint64_t seed, const PrimeField& field,
                                                        int nvars = 7);

}  // namespace pfcy
