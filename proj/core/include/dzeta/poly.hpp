#pragma once

/// @file poly.hpp
/// Dense univariate polynomials over BigRat.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dzeta/bigrat.hpp"

namespace dzeta {

/// Dense polynomial, coeffs()[i] is the coefficient of T^i.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRat> coeffs);
  Poly(std::initializer_list<BigRat> coeffs) : Poly(std::vector<BigRat>(coeffs)) {}

  static Poly constant(const BigRat& c);
  /// c * T^k
  static Poly monomial(const BigRat& c, int k);
  /// 1 - c*T
  static Poly one_minus(const BigRat& c);

  const std::vector<BigRat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of T^i, zero outside the stored range.
  BigRat coeff(int i) const;
  BigRat leading() const;
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const;

  BigRat eval(const BigRat& t) const;
  Poly derivative() const;
  /// p(c*T)
  Poly scale_var(const BigRat& c) const;
  /// T^d * p(1/(Q*T)); requires d >= degree().
  Poly invert_var(const BigRat& Q, int d) const;
  Poly monic() const;
  Poly shift(int k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const BigRat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigRat& s) { return a *= s; }
  friend Poly operator*(const BigRat& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form, e.g. "1 - 3*T + 2*T^2".
  std::string str() const;

 private:
  void trim();
  std::vector<BigRat> c_;
};

enum class PolyOp { add, sub, mul };
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

/// Euclidean division a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd over Q. Throws std::domain_error("gcd undefined") when both are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// True when b divides a exactly.
bool divides(const Poly& b, const Poly& a);

/// Power sums p_1..p_K of the reciprocal roots of P, i.e. P(T)/P(0) = prod (1 - r_i T).
/// Uses Newton's identities; P(0) must be nonzero. Result index k-1 holds p_k.
std::vector<BigRat> newton_power_sums(const Poly& P, int K);

}  // namespace dzeta
