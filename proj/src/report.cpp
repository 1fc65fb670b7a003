#include "hht/report.hpp"

#include <cmath>
#include <limits>

namespace hht {

std::string to_string(CaseKind k) {
  switch (k) {
    case CaseKind::at_most: return "at_most";
    case CaseKind::at_least: return "at_least";
    case CaseKind::near: return "near";
  }
  return "unknown";
}

const VerificationCase& VerificationReport::add(std::string name, double measured, double bound, double tolerance,
                                                CaseKind kind, std::string note) {
  VerificationCase c{std::move(name), measured, bound, tolerance, kind, false, std::move(note)};
  if (std::isfinite(measured)) {
    switch (kind) {
      case CaseKind::at_most: c.pass = measured <= bound + tolerance; break;
      case CaseKind::at_least: c.pass = measured >= bound - tolerance; break;
      case CaseKind::near: c.pass = std::abs(measured - bound) <= tolerance; break;
    }
  }
  cases_.push_back(std::move(c));
  return cases_.back();
}

void VerificationReport::failure(std::string name, const std::string& what) {
  add(std::move(name), std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0, CaseKind::near, "error: " + what);
}

void VerificationReport::merge(const VerificationReport& other) {
  for (auto c : other.cases_) {
    c.name = other.suite_ + "/" + c.name;
    cases_.push_back(std::move(c));
  }
}

bool VerificationReport::pass() const {
  for (const auto& c : cases_) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : cases_) {
    nlohmann::json j;
    j["name"] = c.name;
    // NaN is not representable in JSON.
    j["measured"] = std::isfinite(c.measured) ? nlohmann::json(c.measured) : nlohmann::json(nullptr);
    j["bound"] = c.bound;
    j["tolerance"] = c.tolerance;
    j["kind"] = to_string(c.kind);
    j["pass"] = c.pass;
    if (!c.note.empty()) j["note"] = c.note;
    cases.push_back(std::move(j));
  }
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["suite"] = suite_;
  doc["pass"] = pass();
  doc["cases"] = std::move(cases);
  doc["wall_time_ms"] = wall_time_ms;
  doc["config"] = config;
  return doc;
}

}  // namespace hht
