#include "pfcy/models.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfcy {

namespace {

constexpr int kAmbient = 7;

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Model decomposable(const std::string& name, std::vector<int> a, std::uint64_t seed, const PrimeField& field) {
  Model m{name, seed, GradedIdeal(field, kAmbient, {}), a, {}, {}, {}, {}, true, {}};
  m.pattern = DegreePattern::from_bundle(a);
  m.matrix = random_section(*m.pattern, seed, field, kAmbient);
  m.ideal = sub_pfaffian_ideal(*m.matrix, static_cast<int>(a.size() - 1) / 2);
  m.provenance.push_back("bundle a=(" + join_ints(a) + ")");
  m.provenance.push_back("pattern entry degrees a_i+a_j+1, section seed " + std::to_string(seed));
  return m;
}

Model bordered(const std::string& name, int N, std::vector<std::vector<Polynomial>> phi, std::uint64_t seed,
               const PrimeField& field) {
  Model m{name, seed, GradedIdeal(field, kAmbient, {}), {}, {}, {}, {}, {}, false, {}};
  m.bordered = bordered_model(N, phi, seed, field);
  m.ideal = pfaffian_ideal_of_bordered(*m.bordered);
  m.provenance.push_back("bordered N=" + std::to_string(N) + " with " + std::to_string(phi.size()) +
                         " constraint rows, " + std::to_string(m.bordered->pfaffian_size) + "x" +
                         std::to_string(m.bordered->pfaffian_size) + " Pfaffians");
  m.provenance.push_back("solution spaces: A " + std::to_string(m.bordered->a_space_dim) + ", c " +
                         std::to_string(m.bordered->c_space_dim) + ", seed " + std::to_string(seed));
  return m;
}

}  // namespace

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names = {"ci-12", "pf-13", "pf-14", "b14", "x11", "b15"};
  return names;
}

bool is_model_name(const std::string& name) {
  const auto& n = model_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<std::vector<Polynomial>> random_linear_rows(int rows, int N, std::uint64_t seed, const PrimeField& field,
                                                        int nvars) {
  SplitMix64 rng(seed ^ 0x5A17C0DEULL);
  std::vector<std::vector<Polynomial>> phi(static_cast<std::size_t>(rows));
  for (auto& row : phi)
    for (int j = 0; j < N; ++j) row.push_back(random_homogeneous(field, nvars, 1, rng));
  return phi;
}

Model build_model(const std::string& name, std::uint64_t seed, const PrimeField& field) {
  if (name == "ci-12") return decomposable(name, {0, 1, 1}, seed, field);
  if (name == "pf-13") return decomposable(name, {0, 0, 0, 0, 1}, seed, field);
  if (name == "pf-14") return decomposable(name, {0, 0, 0, 0, 0, 0, 0}, seed, field);
  if (name == "x11") return decomposable(name, {1, 1, 1, -1, -1}, seed, field);
  if (name == "b14") {
    std::vector<Polynomial> x;
    for (int i = 0; i < kAmbient; ++i) x.push_back(Polynomial::variable(field, kAmbient, i));
    Model m = bordered(name, kAmbient, {x}, seed, field);
    m.containment_quadric = euler_quadric(*m.bordered);
    m.provenance.push_back("constraint row (x0..x6)");
    return m;
  }
  if (name == "b15") {
    Model m = bordered(name, 10, random_linear_rows(2, 10, seed, field), seed, field);
    m.provenance.push_back("constraint rows: generic 2x10 linear matrix");
    return m;
  }
  throw std::invalid_argument("unknown model '" + name + "'");
}

}  // namespace pfcy
