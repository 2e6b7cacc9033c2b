#pragma once

/// @file rh.hpp
/// Riemann hypothesis checks for level numerators: exact in genus 1, numeric otherwise.

#include <optional>
#include <string>
#include <vector>

#include "dzeta/invariants.hpp"

namespace dzeta {

enum class RHStatus { holds, fails, unknown };
const char* to_string(RHStatus s);

struct RHVerdict {
  enum class Method { exact_g1, numeric };
  Method method = Method::numeric;
  RHStatus status = RHStatus::unknown;
  bool boundary = false;          // exact: A^2 = 4Q
  int discriminant_sign = 0;      // exact: sign of A^2 - 4Q
  std::vector<std::string> deviations;  // numeric: | |r| sqrt(Q) - 1 | per root, decimal
  std::string max_deviation;      // numeric, decimal
  double max_deviation_approx = 0;
  bool self_inversive = true;     // numeric: A_{2g-i} = Q^{g-i} A_i
  int precision_bits = 0;
  std::string tolerance;
  int iterations = 0;
  std::string diagnostics;
};

const char* to_string(RHVerdict::Method m);

/// holds iff A^2 <= 4Q for P/P(0) = 1 - A T + Q T^2; boundary flagged on equality.
/// Throws std::invalid_argument if genus != 1.
RHVerdict rh_exact_genus1(const InvariantSet& inv);

struct RHNumericOptions {
  int precision_bits = 256;
  /// Decimal exponent e for tolerance 10^-e; default precision_bits*3/20.
  std::optional<int> tolerance_exp;
  int max_iterations = 2000;
  bool escalate = true;
};

/// All 2g roots by simultaneous (Aberth) iteration in MPFR arithmetic, then
/// max | |root| sqrt(Q) - 1 | against the tolerance. A deviation in [tol, 10 tol]
/// is retried at doubled precision once, and otherwise reported unknown.
RHVerdict rh_numeric(const Poly& P, const BigRat& Q, const RHNumericOptions& opt = {});
RHVerdict rh_numeric(const InvariantSet& inv, const RHNumericOptions& opt = {});

/// Exact if genus 1, otherwise numeric.
RHVerdict rh_check(const InvariantSet& inv, const RHNumericOptions& opt = {});

}  // namespace dzeta
