#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pfcy/invariants.hpp"

namespace pfcy {

// Expected invariants of a named model, read from data/expectations.json
// (compiled into the library).
struct ModelExpectation {
  std::string name;
  std::string anchor;
  std::optional<int> codim;
  std::optional<std::int64_t> degree;
  std::optional<std::vector<mpq_class>> hilbert_polynomial;  // constant term first
  std::map<int, std::uint64_t> h0;                           // h^0(I_X(k))
  std::optional<std::vector<std::int64_t>> rao_h1;
  std::optional<std::string> singular;  // NodeCount label
  std::vector<std::uint64_t> seeds;
  // Seeds for which the singular certificate is recorded to hold.
  std::vector<std::uint64_t> singular_seeds;
};

const std::string& expectations_text();
const std::map<std::string, ModelExpectation>& model_expectations();
const ModelExpectation* expectation_for(const std::string& name);

struct CertificateResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string got;
  std::string anchor;
};

// One result per expectation present in both `e` and the report.
std::vector<CertificateResult> check_report(const VarietyReport& r, const ModelExpectation& e);

}  // namespace pfcy
