#pragma once

/// @file bigrat.hpp
/// Exact rational scalar backed by GMP.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dzeta {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
///
/// Wraps mpq_class instead of exposing it so that GMP expression templates never
/// leak into `auto` declarations of callers.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRat(int v) : v_(static_cast<long>(v)) {}  // NOLINT
  BigRat(const mpz_class& n) : v_(n) {}  // NOLINT
  BigRat(const mpz_class& n, const mpz_class& d);
  explicit BigRat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input or q = 0.
  static BigRat parse(std::string_view text);

  /// Always "p/q", with "/1" for integers, so serialized values read uniformly.
  std::string str() const;

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  BigRat inverse() const;
  BigRat abs() const { return BigRat(mpq_class(::abs(v_))); }
  /// Integer power, negative exponents allowed for nonzero values.
  BigRat pow(long e) const;

  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  BigRat operator-() const { return BigRat(mpq_class(-v_)); }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& r);

/// Binomial coefficient C(n, 2) for small n.
inline long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace dzeta
