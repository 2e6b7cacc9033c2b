#include "dzeta/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace dzeta {

bool prime_power(long q, long* p, int* m) {
  if (q < 2) return false;
  long base = 0;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      base = d;
      break;
    }
  }
  if (base == 0) base = q;
  int e = 0;
  long r = q;
  while (r % base == 0) {
    r /= base;
    ++e;
  }
  if (r != 1) return false;
  if (p) *p = base;
  if (m) *m = e;
  return true;
}

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

GaloisField::GaloisField(long p, int m) : p_(p), m_(m) {
  long pp = 0;
  int pm = 0;
  if (!prime_power(p, &pp, &pm) || pm != 1) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1) throw std::invalid_argument("field degree must be positive");
  long q = ipow(p, m);
  if (q > (1L << 22)) throw std::range_error("field too large for table arithmetic");
  q_ = static_cast<uint32_t>(q);
  const uint32_t n = q_ - 1;

  // Try monic moduli x^m + c_{m-1} x^{m-1} + ... + c_0 until x generates the unit group.
  std::vector<long> c(static_cast<size_t>(m), 0);
  std::vector<long> digits(static_cast<size_t>(m));
  auto encode = [&](const std::vector<long>& d) {
    uint32_t v = 0;
    for (int i = m - 1; i >= 0; --i) v = v * static_cast<uint32_t>(p) + static_cast<uint32_t>(d[static_cast<size_t>(i)]);
    return v;
  };
  for (uint32_t cand = 0; cand < q_; ++cand) {
    uint32_t t = cand;
    for (int i = 0; i < m; ++i) {
      c[static_cast<size_t>(i)] = t % p;
      t /= static_cast<uint32_t>(p);
    }
    if (c[0] == 0) continue;
    exp_.assign(2 * static_cast<size_t>(n), 0);
    std::fill(digits.begin(), digits.end(), 0);
    digits[0] = 1;
    // For m = 1 the generator is the constant -c_0.
    bool ok = true;
    for (uint32_t i = 0; i < n; ++i) {
      uint32_t e = encode(digits);
      if (i > 0 && e == 1) {
        ok = false;
        break;
      }
      exp_[i] = e;
      if (m == 1) {
        digits[0] = (digits[0] * ((p - c[0]) % p)) % p;
      } else {
        long top = digits[static_cast<size_t>(m - 1)];
        for (int j = m - 1; j > 0; --j) {
          digits[static_cast<size_t>(j)] = (digits[static_cast<size_t>(j - 1)] + p * p - top * c[static_cast<size_t>(j)]) % p;
        }
        digits[0] = (p * p - top * c[0]) % p;
      }
    }
    if (ok && encode(digits) == 1) break;
    exp_.clear();
  }
  if (exp_.empty()) throw std::logic_error("no primitive modulus found");
  for (uint32_t i = 0; i < n; ++i) exp_[n + i] = exp_[i];
  log_.assign(q_, 0);
  for (uint32_t i = 0; i < n; ++i) log_[exp_[i]] = i;
}

uint32_t GaloisField::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  uint32_t r = 0, mul = 1;
  const auto p = static_cast<uint32_t>(p_);
  for (int i = 0; i < m_; ++i) {
    r += ((a % p + b % p) % p) * mul;
    a /= p;
    b /= p;
    mul *= p;
  }
  return r;
}

uint32_t GaloisField::neg(uint32_t a) const {
  if (p_ == 2) return a;
  uint32_t r = 0, mul = 1;
  const auto p = static_cast<uint32_t>(p_);
  for (int i = 0; i < m_; ++i) {
    r += ((p - a % p) % p) * mul;
    a /= p;
    mul *= p;
  }
  return r;
}

uint32_t GaloisField::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

uint32_t GaloisField::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const uint32_t n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

uint32_t GaloisField::from_int(long v) const {
  long r = ((v % p_) + p_) % p_;
  return static_cast<uint32_t>(r);
}

const std::vector<PlaneCurve>& curve_catalog() {
  static const std::vector<PlaneCurve> cat = {
      {"y^2+y=x^3/F2", 2, 1, {1}, {0, 0, 0, 1}},
      {"y^2+xy=x^3+1/F2", 2, 1, {0, 1}, {1, 0, 0, 1}},
      {"y^2=x^3+x+1/F3", 3, 1, {}, {1, 1, 0, 1}},
      {"y^2=x^3+x+1/F5", 5, 1, {}, {1, 1, 0, 1}},
      {"y^2+y=x^5/F2", 2, 2, {1}, {0, 0, 0, 0, 0, 1}},
  };
  return cat;
}

const PlaneCurve& catalog_curve(const std::string& label) {
  for (const auto& c : curve_catalog()) {
    if (c.label == label) return c;
  }
  throw std::invalid_argument("unknown catalog curve: " + label);
}

namespace {

int effective_degree(const std::vector<long>& v, long p) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (((v[static_cast<size_t>(i)] % p) + p) % p != 0) return i;
  }
  return -1;
}

uint32_t horner(const GaloisField& F, const std::vector<uint32_t>& c, uint32_t x) {
  uint32_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

}  // namespace

long count_points_bruteforce(const PlaneCurve& curve, long q, int k) {
  long p = 0;
  int m = 0;
  if (!prime_power(q, &p, &m) || p != curve.p) throw std::invalid_argument("q is not a power of the curve characteristic");
  if (k < 1) throw std::invalid_argument("extension degree must be positive");
  if (curve.genus < 1) throw std::invalid_argument("unsupported equation form: genus must be positive");
  if (effective_degree(curve.f, p) != 2 * curve.genus + 1 || effective_degree(curve.h, p) > curve.genus) {
    throw std::invalid_argument("unsupported equation form: need deg f = 2g+1 and deg h <= g");
  }
  long total = 1;
  for (int i = 0; i < m * k; ++i) {
    total *= p;
    if (total > (1L << 20)) throw std::range_error("enumeration bound exceeded: q^k > 2^20");
  }
  GaloisField F(p, m * k);
  std::vector<uint32_t> h, f;
  for (long v : curve.h) h.push_back(F.from_int(v));
  for (long v : curve.f) f.push_back(F.from_int(v));
  const uint32_t n = F.size();

  long affine = 0;
  if (p == 2) {
    // z^2 + z = c has 2 or 0 roots; tabulate by running over z.
    std::vector<uint8_t> as(n, 0);
    for (uint32_t z = 0; z < n; ++z) as[F.add(F.mul(z, z), z)] += 1;
    for (uint32_t x = 0; x < n; ++x) {
      uint32_t hx = horner(F, h, x), fx = horner(F, f, x);
      if (hx == 0) {
        affine += 1;  // squaring is bijective in characteristic 2
      } else {
        uint32_t c = F.mul(fx, F.inv(F.mul(hx, hx)));
        affine += as[c];
      }
    }
  } else {
    std::vector<uint8_t> sq(n, 0);
    for (uint32_t y = 0; y < n; ++y) sq[F.mul(y, y)] += 1;
    const uint32_t four = F.from_int(4);
    for (uint32_t x = 0; x < n; ++x) {
      uint32_t hx = horner(F, h, x), fx = horner(F, f, x);
      uint32_t disc = F.add(F.mul(hx, hx), F.mul(four, fx));
      affine += sq[disc];
    }
  }
  return affine + 1;
}

}  // namespace dzeta
