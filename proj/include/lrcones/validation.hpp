#pragma once

#include <stdexcept>
#include <string>

namespace lrcones {

/// Outcome of a membership test. On failure, names the first violated
/// condition and the indices it was instantiated at.
struct ValidationReport {
  bool ok = true;
  std::string condition;
  int i = 0;
  int j = 0;
  std::string detail;

  explicit operator bool() const { return ok; }

  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string condition, int i, int j, std::string detail = {}) {
    return {false, std::move(condition), i, j, std::move(detail)};
  }

  std::string describe() const {
    if (ok) return "ok";
    std::string s = "violates (" + condition + ") at i=" + std::to_string(i) + ", j=" + std::to_string(j);
    if (!detail.empty()) s += ": " + detail;
    return s;
  }
};

/// Thrown by operations whose precondition is cone or subspace membership.
struct validation_error : std::runtime_error {
  ValidationReport report;
  validation_error(const std::string& what, ValidationReport r)
      : std::runtime_error(what + ": " + r.describe()), report(std::move(r)) {}
};

}  // namespace lrcones
