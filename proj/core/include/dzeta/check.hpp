#pragma once

/// @file check.hpp

#include <string>
#include <vector>

namespace dzeta {

enum class CheckStatus { pass, fail, unknown, skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::unknown: return "unknown";
    case CheckStatus::skip: return "skip";
  }
  return "unknown";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string detail;

  bool passed() const { return status == CheckStatus::pass; }
};

inline bool all_passed(const std::vector<CheckResult>& v) {
  for (const auto& c : v) {
    if (!c.passed()) return false;
  }
  return true;
}

}  // namespace dzeta
