#pragma once

// Minimal RAII over mpfr_t with explicit per-value precision. Boost's mpfr_float keeps
// its default precision in a process-wide static, which does not mix with sweep threads.

#include <mpfr.h>

#include <string>
#include <utility>

#include "dzeta/bigrat.hpp"

namespace dzeta::detail {

class Mpf {
 public:
  explicit Mpf(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Mpf(mpfr_prec_t prec, double d) : Mpf(prec) { mpfr_set_d(v_, d, MPFR_RNDN); }
  Mpf(mpfr_prec_t prec, const BigRat& r) : Mpf(prec) { mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN); }
  Mpf(const Mpf& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpf(Mpf&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Mpf& operator=(const Mpf& o) {
    if (this != &o) {
      if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Mpf& operator=(Mpf&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mpf() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  /// Scientific notation with the given number of significant digits.
  std::string sci(int digits) const;

  friend Mpf operator+(const Mpf& a, const Mpf& b);
  friend Mpf operator-(const Mpf& a, const Mpf& b);
  friend Mpf operator*(const Mpf& a, const Mpf& b);
  friend Mpf operator/(const Mpf& a, const Mpf& b);
  Mpf operator-() const;
  friend bool operator<(const Mpf& a, const Mpf& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Mpf& a, const Mpf& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }

  friend Mpf sqrt(const Mpf& a);
  friend Mpf abs(const Mpf& a);

 private:
  mpfr_t v_;
};

/// Complex number over Mpf.
struct Cx {
  Mpf re, im;
  explicit Cx(mpfr_prec_t prec) : re(prec), im(prec) {}
  Cx(Mpf r, Mpf i) : re(std::move(r)), im(std::move(i)) {}

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx& a, const Cx& b);
  Mpf norm2() const { return re * re + im * im; }
  Mpf modulus() const { return sqrt(norm2()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

}  // namespace dzeta::detail
