#include "pfcy/expectations.hpp"

#include "json.hpp"

namespace pfcy {

namespace detail {
extern const char* const kExpectationsJson;
}

namespace {

template <class T>
std::string join(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    if constexpr (std::is_same_v<T, mpq_class>) s += v[i].get_str();
    else s += std::to_string(v[i]);
  }
  return s + ")";
}

std::map<std::string, ModelExpectation> load() {
  const auto j = nlohmann::json::parse(expectations_text());
  std::map<std::string, ModelExpectation> out;
  for (const auto& [name, m] : j.at("models").items()) {
    ModelExpectation e;
    e.name = name;
    e.anchor = m.at("anchor").get<std::string>();
    if (m.contains("codim")) e.codim = m["codim"].get<int>();
    if (m.contains("degree")) e.degree = m["degree"].get<std::int64_t>();
    if (m.contains("hilbert_polynomial")) {
      std::vector<mpq_class> hp;
      for (const auto& c : m["hilbert_polynomial"]) hp.emplace_back(c.get<std::string>());
      for (auto& c : hp) c.canonicalize();
      e.hilbert_polynomial = hp;
    }
    if (m.contains("h0"))
      for (const auto& [k, v] : m["h0"].items()) e.h0[std::stoi(k)] = v.get<std::uint64_t>();
    if (m.contains("rao_h1")) e.rao_h1 = m["rao_h1"].get<std::vector<std::int64_t>>();
    if (m.contains("singular")) e.singular = m["singular"].get<std::string>();
    if (m.contains("seeds")) e.seeds = m["seeds"].get<std::vector<std::uint64_t>>();
    if (m.contains("singular_seeds")) e.singular_seeds = m["singular_seeds"].get<std::vector<std::uint64_t>>();
    out.emplace(name, std::move(e));
  }
  return out;
}

}  // namespace

const std::string& expectations_text() {
  static const std::string text(detail::kExpectationsJson);
  return text;
}

const std::map<std::string, ModelExpectation>& model_expectations() {
  static const auto table = load();
  return table;
}

const ModelExpectation* expectation_for(const std::string& name) {
  const auto& t = model_expectations();
  auto it = t.find(name);
  return it == t.end() ? nullptr : &it->second;
}

std::vector<CertificateResult> check_report(const VarietyReport& r, const ModelExpectation& e) {
  std::vector<CertificateResult> out;
  auto add = [&](std::string name, bool pass, std::string expected, std::string got) {
    out.push_back({std::move(name), pass, std::move(expected), std::move(got), e.anchor});
  };
  if (e.codim) add("codim", r.codim == *e.codim, std::to_string(*e.codim), std::to_string(r.codim));
  if (e.degree) add("degree", r.degree == *e.degree, std::to_string(*e.degree), std::to_string(r.degree));
  if (e.hilbert_polynomial) {
    auto got = r.hilbert.hilbert_polynomial;
    auto want = *e.hilbert_polynomial;
    got.resize(std::max(got.size(), want.size()), 0);
    want.resize(got.size(), 0);
    add("hilbert_polynomial", got == want, join(want), join(got));
  }
  for (const auto& [k, v] : e.h0) {
    if (k < 0 || static_cast<std::size_t>(k) >= r.graded_pieces.size()) continue;
    const auto got = r.graded_pieces[static_cast<std::size_t>(k)];
    add("h0(I(" + std::to_string(k) + "))", got == v, std::to_string(v), std::to_string(got));
  }
  if (e.rao_h1) {
    if (r.rao_h1) {
      auto want = *e.rao_h1;
      const auto& got = *r.rao_h1;
      want.resize(std::min(want.size(), got.size()));
      std::vector<std::int64_t> g(got.begin(), got.begin() + static_cast<std::ptrdiff_t>(want.size()));
      add("rao_h1", g == want, join(want), join(g));
    } else if (!r.rao_error.empty()) {
      add("rao_h1", false, join(*e.rao_h1), r.rao_error);
    }
  }
  if (e.singular && r.singular) {
    const std::string got = node_count(*r.singular).label();
    const bool certified = r.singular->certified;
    add("singular", got == *e.singular && certified, *e.singular, got + (certified ? "" : " (uncertified)"));
  }
  return out;
}

}  // namespace pfcy
