#include "dzeta/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "dzeta/errors.hpp"

namespace dzeta {

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  BigRat lead = den_.coeff(den_.valuation());
  if (lead != BigRat(1)) {
    BigRat inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::reduce(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return RatFunc();
  Poly g = poly_gcd(num, den);
  RatFunc r;
  if (g.degree() > 0) {
    r = RatFunc(divmod(num, g).first, divmod(den, g).first, 0);
  } else {
    r = RatFunc(num, den, 0);
  }
  r.normalize();
  return r;
}

BigRat RatFunc::eval(const BigRat& t) const {
  BigRat d = den_.eval(t);
  if (d.is_zero()) throw PoleError(t);
  return num_.eval(t) / d;
}

RatFunc RatFunc::scale_var(const BigRat& c) const {
  if (c.is_zero()) throw std::domain_error("scale_var: zero scale collapses the variable");
  // Scaling by a unit keeps coprimality, so only renormalization is needed.
  RatFunc r(num_.scale_var(c), den_.scale_var(c), 0);
  r.normalize();
  return r;
}

RatFunc RatFunc::invert_var(const BigRat& Q) const {
  int d = std::max(num_.degree(), den_.degree());
  if (d < 0) d = 0;
  RatFunc r(num_.invert_var(Q, d), den_.invert_var(Q, d), 0);
  // T^d * p(1/(QT)) may share a power of T with the other side.
  int v = std::min(r.num_.is_zero() ? r.den_.valuation() : r.num_.valuation(), r.den_.valuation());
  if (v > 0) {
    r.num_ = r.num_.shift(-v);
    r.den_ = r.den_.shift(-v);
  }
  r.normalize();
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  Poly g = poly_gcd(den_, o.den_);
  if (g.degree() == 0) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return *this;
    }
    normalize();
    return *this;
  }
  Poly b1 = divmod(den_, g).first;
  Poly d1 = divmod(o.den_, g).first;
  Poly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = RatFunc();
  Poly g2 = poly_gcd(n, g);
  if (g2.degree() > 0) {
    n = divmod(n, g2).first;
    g = divmod(g, g2).first;
  }
  num_ = std::move(n);
  den_ = b1 * d1 * g;
  normalize();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  Poly g1 = poly_gcd(num_, o.den_);
  Poly g2 = poly_gcd(o.num_, den_);
  Poly n1 = divmod(num_, g1).first, d2 = divmod(o.den_, g1).first;
  Poly n2 = divmod(o.num_, g2).first, d1 = divmod(den_, g2).first;
  num_ = n1 * n2;
  den_ = d1 * d2;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const BigRat& s) {
  if (s.is_zero()) return *this = RatFunc();
  num_ *= s;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  return *this *= RatFunc::reduce(o.den_, o.num_);
}

std::string RatFunc::str() const {
  if (den_ == Poly::constant(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc ratfunc_reduce(const Poly& num, const Poly& den) { return RatFunc::reduce(num, den); }
RatFunc ratfunc_scale_var(const RatFunc& f, const BigRat& c) { return f.scale_var(c); }
BigRat ratfunc_eval(const RatFunc& f, const BigRat& t) { return f.eval(t); }

int root_multiplicity(const Poly& p, const BigRat& t0) {
  if (p.is_zero()) throw std::domain_error("root multiplicity of zero polynomial");
  Poly lin({-t0, BigRat(1)});
  Poly cur = p;
  int m = 0;
  while (cur.degree() >= 1) {
    auto [q, r] = divmod(cur, lin);
    if (!r.is_zero()) break;
    cur = std::move(q);
    ++m;
  }
  return m;
}

BigRat residue_simple_pole(const RatFunc& f, const BigRat& t0) {
  int m = root_multiplicity(f.den(), t0);
  if (m == 0) throw std::domain_error("not a pole");
  if (m > 1) throw std::domain_error("pole not simple");
  return f.num().eval(t0) / f.den().derivative().eval(t0);
}

}  // namespace dzeta
