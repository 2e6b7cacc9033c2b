#pragma once

// Command-line front end. run_cli is the whole program minus the process boundary, so
// tests can drive it with captured streams.

#include <iosfwd>
#include <string>
#include <vector>

#include "dzeta/curves.hpp"

namespace dzeta::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

/// Invalid user input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Accepts a JSON file path, inline JSON, "elliptic:q=Q,a=A" or "catalog:<label>".
CurveSpec parse_curve(const std::string& text);
CurveSpec curve_from_json_text(const std::string& text);

/// "2,3" -> {2, 3}; entries must be positive integers.
std::vector<int> parse_tuple(const std::string& text);
/// "2;3;2,2" -> {{2}, {3}, {2, 2}}
std::vector<std::vector<int>> parse_tuples(const std::string& text);

/// "1e-30" or "30" -> 30
int parse_tolerance_exp(const std::string& text);

/// Hex SHA-256 of a string.
std::string sha256_hex(const std::string& data);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dzeta::cli
