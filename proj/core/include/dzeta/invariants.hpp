#pragma once

/// @file invariants.hpp
/// Alpha and beta invariants of a level, the closed beta formula, and Gamma polynomials.

#include <vector>

#include "dzeta/derived.hpp"

namespace dzeta {

struct InvariantSet {
  std::vector<BigRat> alphas;  // alpha(0..g-1)
  BigRat beta;
  Poly P;                      // degree 2g numerator
  std::vector<BigRat> A;       // coefficients of P
  BigRat Q;
  int genus = 0;

  /// alpha(l) for 0 <= l <= g-1, zero outside.
  BigRat alpha(int l) const;
  bool positive() const;
};

/// Throws std::domain_error("level violates the alpha/beta numerator shape: ...") when the
/// decomposition does not exist.
InvariantSet extract_invariants(const ZetaLevel& z);

/// P = S(T)(1-T)(1-QT) + (Q-1) beta T^g with S palindromic:
/// s_l = alpha(l), s_{2g-2-l} = Q^{g-1-l} alpha(l).
Poly reconstruct_numerator(const std::vector<BigRat>& alphas, const BigRat& beta, const BigRat& Q, int g);

/// Coefficient A_k of P/alpha(0), written case by case in terms of the normalized
/// alpha' = alpha/alpha(0) and beta' = beta/alpha(0).
BigRat a_table(int k, const std::vector<BigRat>& alphas_norm, const BigRat& beta_norm, const BigRat& Q, int g);

/// Which of the seven cases of a_table applies to k (0..6), for coverage tests.
int a_table_case(int k, int g);

/// Q_prev^{C(n,2)(g-1)} * sum over compositions of n of composition_weight,
/// enumerated directly.
BigRat beta_closed_form(const SpecialValues& sv, int n, int g);

struct MiracleResult {
  BigRat lhs;   // alpha of (prefix, n+1) at 0
  BigRat rhs;   // Q^{n(g-1)} alpha_prev(0) beta of (prefix, n)
  CheckResult check;
};

/// alpha^{(prefix,n+1)}(0) = Q_prev^{n(g-1)} alpha^{prev}(0) beta^{(prefix,n)}.
MiracleResult counting_miracle_check(const ZetaLevel& prev, int n);

struct GammaPoly {
  int n = 0;
  BigRat Q_prev;
  Poly gamma;
  RatFunc delta;
};

/// Delta = sum_k w(k)/(Q^{k_p} T - 1), Gamma = Delta * prod_{l=1}^{n} (Q^l T - 1).
GammaPoly gamma_poly(const SpecialValues& sv, int n);

/// sum_k w(k), the beta closed form without its Q power.
BigRat beta_double_prime(const SpecialValues& sv, int n);

struct GammaCheck {
  std::vector<int> signs;           // sign of Gamma(Q^{-kappa}), kappa = 1..n
  std::vector<int> expected;        // (-1)^{kappa+1}
  bool root_at_sample = false;
  int degree = 0;
  int real_roots = 0;               // distinct real roots, by Sturm sequence
  std::vector<int> interval_roots;  // roots in (Q^{-kappa-1}, Q^{-kappa}), kappa = 1..n-1
  CheckResult check;
};

/// Signs of Gamma at T = Q^{-kappa}, compared with the alternation (-1)^{kappa+1}.
GammaCheck gamma_interlacing_check(const GammaPoly& gp);

/// Number of distinct real roots of p in the open interval (lo, hi).
int sturm_count(const Poly& p, const BigRat& lo, const BigRat& hi);
/// Number of distinct real roots of p.
int sturm_count_all(const Poly& p);

}  // namespace dzeta
