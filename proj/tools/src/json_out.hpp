#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pfcy/bundles.hpp"
#include "pfcy/chow.hpp"
#include "pfcy/expectations.hpp"
#include "pfcy/formulas.hpp"
#include "pfcy/invariants.hpp"

namespace pfcy::cli {

using Json = nlohmann::json;

// "(7/3)m^3 + (14/3)m"
std::string polynomial_in_m(const std::vector<mpq_class>& coeffs);
Json rationals(const std::vector<mpq_class>& v);

Json to_json(const HilbertData& h);
Json to_json(const VarietyReport& r);
Json to_json(const CertificateResult& c);
Json to_json(const BundleSpec& b);
Json to_json(const Classification& c);
Json to_json(const ClassificationSolution& s);
Json to_json(const FormulaCheck& f);
Json to_json(const DegenerateEvidence& e);

}  // namespace pfcy::cli
