#pragma once

/// @file curves.hpp
/// Complete Artin zeta functions of curves, and the ZetaLevel record.

#include <optional>
#include <string>
#include <vector>

#include "dzeta/check.hpp"
#include "dzeta/ratfunc.hpp"

namespace dzeta {

struct CurveSpec {
  enum class Source { trace, point_counts, numerator };

  std::string label;
  long q = 0;
  int genus = 0;
  Source source = Source::trace;
  long trace = 0;
  std::vector<long> point_counts;
  std::vector<BigRat> numerator;  // A_0..A_{2g}

  static CurveSpec elliptic(long q, long a, std::string label = {});
  static CurveSpec from_counts(long q, int g, std::vector<long> counts, std::string label = {});
  static CurveSpec from_numerator(long q, int g, std::vector<BigRat> A, std::string label = {});
};

/// One rung of the derived tower.
struct ZetaLevel {
  std::vector<int> tuple;  // empty for the Artin base
  BigRat Q;
  int genus = 0;
  RatFunc zeta;  // complete zeta in this level's variable T
  bool normalized = false;
  BigRat norm_const{1};  // the alpha(0) divided out when normalized
};

/// (1 - T)(1 - Q T) T^{g-1}
Poly standard_denominator(const BigRat& Q, int g);

/// P(T) = zeta * (1-T)(1-QT)T^{g-1}; throws std::domain_error if that is not a polynomial.
Poly level_numerator(const ZetaLevel& z);

/// Wraps P as the complete zeta P/((1-T)(1-QT)T^{g-1}).
ZetaLevel level_from_numerator(const Poly& P, const BigRat& Q, int g);

/// (1 - aT + qT^2)/((1-T)(1-qT)); throws std::domain_error on a^2 > 4q.
ZetaLevel artin_elliptic(long q, long a);

/// Numerator from N_1..N_r (r >= g). Counts beyond N_g are checked against the
/// functional-equation reflection. Throws std::invalid_argument on inconsistent counts.
ZetaLevel artin_from_point_counts(long q, int g, const std::vector<long>& counts);

/// Numerator given directly; scaled so A_0 = 1, then checked for A_{2g-i} = q^{g-i} A_i.
ZetaLevel artin_from_numerator(long q, int g, const std::vector<BigRat>& A);

ZetaLevel artin_zeta(const CurveSpec& c);

/// Denominator divisibility, functional equation, paired residues and deg P = 2g.
std::vector<CheckResult> validate_zeta_level(const ZetaLevel& z);

/// Reports the point counts N_1..N_k implied by a numerator (Newton's identities).
std::vector<BigRat> point_counts_from_numerator(const Poly& P, const BigRat& Q, int k);

}  // namespace dzeta
