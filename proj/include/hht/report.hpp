#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hht {

// at_most: measured <= bound + tolerance; at_least: measured >= bound - tolerance;
// near: |measured - bound| <= tolerance. A NaN measurement always fails.
enum class CaseKind { at_most, at_least, near };

struct VerificationCase {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  double tolerance = 0.0;
  CaseKind kind = CaseKind::near;
  bool pass = false;
  std::string note;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const VerificationCase& add(std::string name, double measured, double bound, double tolerance, CaseKind kind,
                              std::string note = {});
  const VerificationCase& at_most(std::string name, double measured, double bound, double tolerance = 0.0,
                                  std::string note = {}) {
    return add(std::move(name), measured, bound, tolerance, CaseKind::at_most, std::move(note));
  }
  const VerificationCase& at_least(std::string name, double measured, double bound, double tolerance = 0.0,
                                   std::string note = {}) {
    return add(std::move(name), measured, bound, tolerance, CaseKind::at_least, std::move(note));
  }
  const VerificationCase& near(std::string name, double measured, double expected, double tolerance,
                               std::string note = {}) {
    return add(std::move(name), measured, expected, tolerance, CaseKind::near, std::move(note));
  }
  // Records a case that could not be computed.
  void failure(std::string name, const std::string& what);

  // Appends other's cases with "<suite>/" prefixed to their names.
  void merge(const VerificationReport& other);

  bool pass() const;
  const std::string& suite() const { return suite_; }
  const std::vector<VerificationCase>& cases() const { return cases_; }

  long wall_time_ms = 0;
  nlohmann::json config = nlohmann::json::object();

  nlohmann::json to_json() const;

 private:
  std::string suite_;
  std::vector<VerificationCase> cases_;
};

std::string to_string(CaseKind k);

}  // namespace hht
