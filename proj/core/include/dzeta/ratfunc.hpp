#pragma once

/// @file ratfunc.hpp
/// Reduced rational functions in one variable.

#include <string>

#include "dzeta/poly.hpp"

namespace dzeta {

/// num/den with gcd(num, den) = 1 and the lowest nonzero coefficient of den equal to 1.
/// Two RatFunc values are mathematically equal iff they compare equal.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(1)) {}
  RatFunc(const Poly& p) : num_(p), den_(Poly::constant(1)) {}  // NOLINT
  RatFunc(const BigRat& c) : RatFunc(Poly::constant(c)) {}  // NOLINT

  /// Reduces and normalizes. Throws std::domain_error on a zero denominator.
  static RatFunc reduce(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Exact value; throws PoleError when den(t) = 0.
  BigRat eval(const BigRat& t) const;
  /// f(c*T); throws for c = 0.
  RatFunc scale_var(const BigRat& c) const;
  /// f(1/(Q*T))
  RatFunc invert_var(const BigRat& Q) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator*=(const BigRat& s);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator*(RatFunc a, const BigRat& s) { return a *= s; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  RatFunc(Poly n, Poly d, int) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();
  Poly num_;
  Poly den_;
};

RatFunc ratfunc_reduce(const Poly& num, const Poly& den);
RatFunc ratfunc_scale_var(const RatFunc& f, const BigRat& c);
BigRat ratfunc_eval(const RatFunc& f, const BigRat& t);

/// Multiplicity of t0 as a root of p (0 when p(t0) != 0).
int root_multiplicity(const Poly& p, const BigRat& t0);

/// num(t0)/den'(t0). Throws std::domain_error "not a pole" or "pole not simple".
BigRat residue_simple_pole(const RatFunc& f, const BigRat& t0);

}  // namespace dzeta
