#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gkz/int_matrix.hpp"
#include "gkz/polyhedral.hpp"
#include "gkz/polynomial.hpp"

namespace gkz {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(std::span<const Rational> v);
Json to_json(std::span<const Integer> v);
Json to_json(const Face& f);
Json to_json(const Exponent& e);
Json to_json(const Polynomial& p);  // {"text", "terms": [{"exponent", "coefficient"}]}

struct ReportOptions {
  std::optional<TermOrder> order;   // default degrevlex
  long filtration_bound = 64;
  long dual_radius = 8;
  std::optional<IntMatrix> family;  // B, when the family index sets are wanted
};

// Whole-pipeline analysis. Sections whose preconditions fail carry
// {"error": code, "message": text} instead of a value.
Json run_report(const IntMatrix& a, std::span<const Rational> beta, const ReportOptions& options = {});

// Indented "key: value" rendering of any report object.
std::string json_to_text(const Json& j);

}  // namespace gkz
