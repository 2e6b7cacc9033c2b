#pragma once

/// @file mult_struct.hpp
/// Power sums N_k, the B(x) coefficients b_k by two routes, and the elliptic beta recursion.

#include <iosfwd>
#include <string>
#include <vector>

#include "dzeta/invariants.hpp"

namespace dzeta {

struct PowerSums {
  BigRat Q;
  std::vector<BigRat> N;  // N[k-1] = N_k
};

/// N_k = Q^k + 1 - p_k with p_k from Newton's identities on P/P(0).
PowerSums power_sums(const InvariantSet& inv, int K);

struct BSeries {
  enum class Route { exp, recursion };
  BigRat Q;
  std::vector<BigRat> b;  // b_0..b_K
  Route route = Route::exp;
};

/// b = exp(sum_{m<=K} N_m/(Q^m - 1) x^m/m).
BSeries b_series_exp(const PowerSums& ps, int K);

/// Solves Q^k b_k - (Q+1) Q^{k-1} b_{k-1} + Q Q^{k-2} b_{k-2} = sum_l A_l b_{k-l}
/// ascending in k, with A taken from P/P(0), b_0 = 1 and b_{<0} = 0.
BSeries b_series_recursion(const InvariantSet& inv, int K);

/// (Q^n - 1) beta_n = (Q^n + Q^{n-1} - a) beta_{n-1} - (Q^{n-1} - Q) beta_{n-2},
/// beta_0 = 1, beta_{-1} = 0. Returns beta_0..beta_{n_max}.
std::vector<BigRat> elliptic_beta_recursion(const BigRat& a, const BigRat& Q, int n_max);

struct TriangleRow {
  int n = 0;
  BigRat beta_extract;
  BigRat beta_recursion;
  BigRat b_exp;
  bool agree = false;
};

/// For a genus-1 prefix level (normalized here if it is not already): compares, for
/// n = 0..n_max, the residue of derive_step(prefix, n), the elliptic recursion and
/// b_n of the exp route on the prefix.
std::vector<TriangleRow> elliptic_triangle(const ZetaLevel& prefix, int n_max);
CheckResult elliptic_beta_equals_b_check(const ZetaLevel& prefix, int n_max);

struct RatioRow {
  int n = 0;
  BigRat beta;
  BigRat ratio;
  bool lower_ok = false;  // 1 < r
  bool upper_ok = false;  // Q^n (r-1)^2 < (r+1)^2
};

/// Rows n = 1..betas.size()-1 for the ratio r = beta_n/beta_{n-1}.
std::vector<RatioRow> ratio_rows(const std::vector<BigRat>& betas, const BigRat& Q);
CheckResult ratio_bounds_check(const std::vector<BigRat>& betas, const BigRat& Q);

/// CSV with header curve,Q,n,beta,b_n,ratio,bound_ok.
struct RatioCsvRow {
  std::string curve;
  BigRat Q;
  int n = 0;
  BigRat beta;
  BigRat b;
  BigRat ratio;
  bool bound_ok = false;
};
void write_ratio_csv(std::ostream& os, const std::vector<RatioCsvRow>& rows);

/// Genus-1 trace A of a level: P/P(0) = 1 - A T + Q T^2.
BigRat genus1_trace(const InvariantSet& inv);

}  // namespace dzeta
