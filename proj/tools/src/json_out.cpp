#include "json_out.hpp"

namespace pfcy::cli {

std::string polynomial_in_m(const std::vector<mpq_class>& coeffs) {
  std::string s;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const mpq_class& c = coeffs[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const mpq_class a = neg ? mpq_class(-c) : c;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    std::string coef = a.get_den() == 1 ? a.get_str() : "(" + a.get_str() + ")";
    if (k == 0) s += coef;
    else s += (a == 1 ? "" : coef) + "m" + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s.empty() ? "0" : s;
}

Json rationals(const std::vector<mpq_class>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.get_str());
  return out;
}

Json to_json(const HilbertData& h) {
  return {{"numerator", h.numerator},
          {"h_vector", h.h_vector},
          {"krull_dim", h.krull_dim},
          {"hilbert_polynomial", rationals(h.hilbert_polynomial)},
          {"hilbert_polynomial_text", polynomial_in_m(h.hilbert_polynomial)}};
}

Json to_json(const VarietyReport& r) {
  Json j{{"nvars", r.nvars},
         {"codim", r.codim},
         {"dim", r.dim},
         {"degree", r.degree},
         {"hilbert", to_json(r.hilbert)},
         {"h0_ideal", r.graded_pieces},
         {"saturated_generators", r.saturated_generators},
         {"generator_degrees", r.generator_degrees}};
  if (r.rao_h1) j["rao_h1"] = *r.rao_h1;
  if (!r.rao_error.empty()) j["rao_error"] = r.rao_error;
  if (r.singular) {
    const auto& s = *r.singular;
    j["singular"] = {{"label", node_count(s).label()},
                     {"dim", s.dim()},
                     {"degree", s.degree()},
                     {"certified", s.certified},
                     {"minors_used", s.minors_used},
                     {"minors_certified", s.minors_certified}};
  }
  return j;
}

Json to_json(const CertificateResult& c) {
  return {{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"got", c.got}, {"anchor", c.anchor}};
}

Json to_json(const BundleSpec& b) {
  return {{"a", b.a},
          {"b", b.b},
          {"rank", b.rank()},
          {"u", b.u()},
          {"c1", b.c1()},
          {"w", w_invariant(b).to_string()},
          {"text", b.to_string()}};
}

Json to_json(const Classification& c) {
  Json list = Json::array();
  for (const auto& x : c.accepted) {
    Json e{{"label", x.verdict.label}, {"bundle", to_json(x.spec)}, {"description", x.verdict.description}};
    if (!x.verdict.evidence.empty()) e["evidence"] = x.verdict.evidence;
    if (x.spec.decomposable()) e["generator_degrees"] = generator_degrees(x.spec);
    list.push_back(std::move(e));
  }
  Json failures = Json::object();
  for (const auto& [rule, n] : c.failures_by_rule) failures[rule] = n;
  return {{"bound", c.bound},
          {"candidates", c.candidates},
          {"failed", c.failed},
          {"failures_by_rule", failures},
          {"classification", list}};
}

Json to_json(const ClassificationSolution& s) {
  Json j{{"d", s.d}, {"label", s.label}};
  if (!s.a.empty()) j["a"] = s.a;
  if (s.b != 0) j["b"] = s.b.get_str();
  return j;
}

Json to_json(const FormulaCheck& f) {
  return {{"name", f.name}, {"anchor", f.anchor}, {"pass", f.pass}, {"detail", f.detail}};
}

Json to_json(const DegenerateEvidence& e) {
  return {{"codim", e.codim},
          {"degree", e.degree},
          {"linear_forms", e.linear_forms},
          {"calabi_yau_hilbert_polynomial", e.calabi_yau_hilbert_polynomial},
          {"degenerate_component_degree", e.degenerate_component_degree},
          {"degenerate_component_span", e.degenerate_component_span},
          {"holds", e.holds()}};
}

}  // namespace pfcy::cli
