#pragma once

#include <string>

#include <json.hpp>

#include "endosign/lattice/abelian_group.hpp"
#include "endosign/lattice/qmodz.hpp"

namespace endosign::cli {

using Json = nlohmann::ordered_json;

/// Integers become JSON numbers when they fit in a long and decimal strings
/// otherwise; rationals are always "num/den" strings. No floats are emitted.
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const QmodZ& x);
Json to_json(const FiniteAbelianGroup& g);
Json to_json(const AbelianElement& e);

/// One named check with its outcome and the values that decide it.
struct Check {
  std::string name;
  bool pass = true;
  Json witness = Json::object();
};

Json to_json(const Check& c);

/// Report = header (tool, version, timestamp) + deterministic body.
class Report {
 public:
  explicit Report(std::string kind);

  Json& body() { return body_; }
  const Json& body() const { return body_; }
  void add_check(Check c);
  void add_warning(const std::string& text);
  const std::vector<Check>& checks() const { return checks_; }
  std::size_t failures() const;
  /// Fills body["checks"] and body["summary"]; idempotent.
  void finalize();
  /// Header with `timestamp`, then the body.
  Json document(const std::string& timestamp) const;

 private:
  std::string kind_;
  Json body_ = Json::object();
  std::vector<Check> checks_;
  std::vector<std::string> warnings_;
};

/// UTC time as 2024-01-31T12:00:00Z.
std::string utc_timestamp();

}  // namespace endosign::cli
