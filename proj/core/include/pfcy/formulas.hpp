#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pfcy {

// chi(O_X(m)) = (1/6) m d (m^2 - 1) + 7m for a Calabi-Yau threefold of degree d in P^6.
std::int64_t chi_cy(std::int64_t d, std::int64_t m);
// The same as a polynomial in m, constant term first.
std::vector<mpq_class> chi_cy_polynomial(std::int64_t d);

// H.c_2(X) from 7 = chi(O_X(1)) = H.c_2/12 + d/6.
std::int64_t h_dot_c2(std::int64_t d);

// Topological Euler characteristic from the double point formula: -d^2 + 49d - 588.
std::int64_t euler_dpf(std::int64_t d);

struct DegreeWindow {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::vector<std::pair<std::int64_t, std::string>> exclusions;
};

// Lower bound 11 is the Castelnuovo input (taken as given); the upper bound
// comes from H.c_2 >= 0 and the exclusion of H.c_2 = 0 (which forces
// chi_top = 0) by euler_dpf.
DegreeWindow degree_window();

// Picard rank one: chi_top = 2(h11 - h12) <= 2.
bool picard_rank_one_allows(std::int64_t d);

// Closed form for c_2 of the pushforward in the 6 xi^2 + (d-12) h xi case.
mpq_class pushforward_c2_closed_form(const mpq_class& d);

// Solution sets of the classification equations.
//   smooth4quadric: 2a^2 - 2ad + d^2 - 13d + 84 = 0, a in [-50, 50]
//   smooth5quadric: the same with a = d - a
//   cone:           (a - 6)(a - d + 7) = 0 with d = 2a + 2b, b in {0, 1/2}
//   fiber:          d_y^2 = 10 d_y - 24 (K3) or d_y^2 = 10 d_y (abelian), d_y > 0
struct ClassificationSolution {
  std::int64_t d = 0;
  std::vector<std::int64_t> a;
  mpq_class b = 0;
  std::string label;
};

std::vector<ClassificationSolution> solve_classification_equation(const std::string& kind, std::int64_t dmin = 11,
                                                                  std::int64_t dmax = 41);

inline constexpr std::int64_t kSolverRange = 50;

struct FormulaCheck {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string detail;
};

// Every closed-form identity with its anchor quote.
std::vector<FormulaCheck> check_all_formulas();

}  // namespace pfcy
