#include "endosign/cli/json_io.hpp"

#include <chrono>
#include <ctime>

namespace endosign::cli {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const Rational& x) { return Json(rational_to_string(x)); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const QmodZ& x) { return Json(x.to_string()); }

Json to_json(const FiniteAbelianGroup& g) {
  Json out = Json::object();
  out["text"] = g.to_string();
  out["invariant_factors"] = to_json(g.invariant_factors());
  out["free_rank"] = g.free_rank();
  out["torsion_order"] = to_json(g.torsion_order());
  return out;
}

Json to_json(const AbelianElement& e) { return to_json(e.coords()); }

Json to_json(const Check& c) {
  Json out = Json::object();
  out["name"] = c.name;
  out["pass"] = c.pass;
  out["witness"] = c.witness;
  return out;
}

Report::Report(std::string kind) : kind_(std::move(kind)) {}

void Report::add_check(Check c) { checks_.push_back(std::move(c)); }

void Report::add_warning(const std::string& text) { warnings_.push_back(text); }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.pass ? 0 : 1;
  return n;
}

void Report::finalize() {
  Json checks = Json::array();
  for (const auto& c : checks_) checks.push_back(to_json(c));
  body_["checks"] = std::move(checks);
  body_["warnings"] = warnings_;
  Json summary = Json::object();
  summary["checks"] = checks_.size();
  summary["passed"] = checks_.size() - failures();
  summary["failed"] = failures();
  body_["summary"] = std::move(summary);
}

Json Report::document(const std::string& timestamp) const {
  Json doc = Json::object();
  Json header = Json::object();
  header["tool"] = "endosign";
  header["version"] = 1;
  header["kind"] = kind_;
  header["generated_at"] = timestamp;
  doc["header"] = std::move(header);
  doc["body"] = body_;
  return doc;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace endosign::cli
