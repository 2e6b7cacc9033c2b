#include "mpreal.hpp"

#include <algorithm>
#include <cstdlib>

namespace dzeta::detail {

namespace {

mpfr_prec_t wider(const Mpf& a, const Mpf& b) { return std::max(a.prec(), b.prec()); }

}  // namespace

std::string Mpf::sci(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string s = buf ? buf : "nan";
  mpfr_free_str(buf);
  return s;
}

Mpf operator+(const Mpf& a, const Mpf& b) {
  Mpf r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Mpf operator-(const Mpf& a, const Mpf& b) {
  Mpf r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Mpf operator*(const Mpf& a, const Mpf& b) {
  Mpf r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Mpf operator/(const Mpf& a, const Mpf& b) {
  Mpf r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Mpf Mpf::operator-() const {
  Mpf r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Mpf sqrt(const Mpf& a) {
  Mpf r(a.prec());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Mpf abs(const Mpf& a) {
  Mpf r(a.prec());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Cx operator/(const Cx& a, const Cx& b) {
  Mpf d = b.norm2();
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

}  // namespace dzeta::detail
