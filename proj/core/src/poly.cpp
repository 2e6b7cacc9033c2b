#include "dzeta/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dzeta {

Poly::Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const BigRat& c) { return Poly(std::vector<BigRat>{c}); }

Poly Poly::monomial(const BigRat& c, int k) {
  if (k < 0) throw std::invalid_argument("negative monomial exponent");
  std::vector<BigRat> v(static_cast<size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::one_minus(const BigRat& c) { return Poly({BigRat(1), -c}); }

BigRat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return BigRat(0);
  return c_[static_cast<size_t>(i)];
}

BigRat Poly::leading() const { return c_.empty() ? BigRat(0) : c_.back(); }

int Poly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

BigRat Poly::eval(const BigRat& t) const {
  BigRat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<BigRat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigRat(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::scale_var(const BigRat& c) const {
  std::vector<BigRat> v(c_);
  BigRat p(1);
  for (auto& x : v) {
    x *= p;
    p *= c;
  }
  return Poly(std::move(v));
}

Poly Poly::invert_var(const BigRat& Q, int d) const {
  if (d < degree()) throw std::invalid_argument("invert_var: d below degree");
  if (is_zero()) return Poly();
  std::vector<BigRat> v(static_cast<size_t>(d) + 1);
  BigRat qi = Q.inverse();
  BigRat p(1);
  for (int i = 0; i <= degree(); ++i) {
    v[static_cast<size_t>(d - i)] = c_[static_cast<size_t>(i)] * p;
    p *= qi;
  }
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  BigRat l = leading().inverse();
  return *this * l;
}

Poly Poly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) {
    if (valuation() < -k) throw std::invalid_argument("shift would drop terms");
    return Poly(std::vector<BigRat>(c_.begin() - k, c_.end()));
  }
  std::vector<BigRat> v(static_cast<size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const BigRat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<BigRat> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const BigRat& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    BigRat a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string mag = a.is_integer() ? a.num().get_str() : a.str();
    if (i == 0) {
      os << mag;
    } else {
      if (a != BigRat(1)) os << mag << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown op");
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<BigRat> r(a.coeffs());
  std::vector<BigRat> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
  BigRat inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    BigRat f = r[static_cast<size_t>(k + db)] * inv;
    q[static_cast<size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] -= f * bc[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
  Poly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    // Keeping remainders monic stops coefficient growth in the rational Euclid loop.
    y = r.monic();
  }
  return x.monic();
}

bool divides(const Poly& b, const Poly& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

std::vector<BigRat> newton_power_sums(const Poly& P, int K) {
  BigRat a0 = P.coeff(0);
  if (a0.is_zero()) throw std::domain_error("newton_power_sums: zero constant term");
  Poly A = P * a0.inverse();
  std::vector<BigRat> p(static_cast<size_t>(std::max(K, 0)));
  // p_k = -k A_k - sum_{i=1}^{k-1} A_i p_{k-i}
  for (int k = 1; k <= K; ++k) {
    BigRat acc = -(BigRat(k) * A.coeff(k));
    for (int i = 1; i < k && i <= A.degree(); ++i) acc -= A.coeff(i) * p[static_cast<size_t>(k - i - 1)];
    p[static_cast<size_t>(k - 1)] = acc;
  }
  return p;
}

}  // namespace dzeta
