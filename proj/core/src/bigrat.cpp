#include "dzeta/bigrat.hpp"

#include <ostream>
#include <stdexcept>

namespace dzeta {

BigRat::BigRat(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

namespace {

mpz_class parse_int(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw std::invalid_argument("empty rational component");
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) throw std::invalid_argument("bad rational: " + t);
  for (size_t k = i; k < t.size(); ++k) {
    if (t[k] < '0' || t[k] > '9') throw std::invalid_argument("bad rational: " + t);
  }
  if (t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

}  // namespace

BigRat BigRat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_int(text));
  mpz_class d = parse_int(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("bad rational: zero denominator");
  return BigRat(parse_int(text.substr(0, slash)), d);
}

std::string BigRat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRat BigRat::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return BigRat(r);
}

BigRat BigRat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return BigRat(n, d);
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.str(); }

}  // namespace dzeta
