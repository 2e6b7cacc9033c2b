#pragma once

/// @file finite_field.hpp
/// Small finite fields by log tables, and brute-force point counts on plane models.

#include <cstdint>
#include <string>
#include <vector>

namespace dzeta {

/// q = p^m if q is a prime power (m >= 1).
bool prime_power(long q, long* p = nullptr, int* m = nullptr);

/// GF(p^m) with elements encoded as base-p integers of their coefficient vectors
/// over a primitive modulus. Only meant for fields of at most a few million elements.
class GaloisField {
 public:
  GaloisField(long p, int m);

  long p() const { return p_; }
  int m() const { return m_; }
  uint32_t size() const { return q_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  /// Image of an integer in the prime subfield.
  uint32_t from_int(long v) const;

 private:
  long p_;
  int m_;
  uint32_t q_;
  std::vector<uint32_t> exp_;  // length 2(q-1)
  std::vector<uint32_t> log_;  // log_[0] unused
};

/// y^2 + h(x) y = f(x) with h, f over the prime field, deg f = 2g+1 odd,
/// so the smooth model has exactly one point at infinity.
struct PlaneCurve {
  std::string label;
  long p = 2;
  int genus = 1;
  std::vector<long> h;  // coefficients, index = power of x
  std::vector<long> f;
};

/// The fixed catalog of countable curves.
const std::vector<PlaneCurve>& curve_catalog();
/// Throws std::invalid_argument for an unknown label.
const PlaneCurve& catalog_curve(const std::string& label);

/// #X(F_{q^k}) for the smooth projective model, with q a power of curve.p.
/// Throws std::invalid_argument for unsupported forms and std::range_error when q^k > 2^20.
long count_points_bruteforce(const PlaneCurve& curve, long q, int k);

}  // namespace dzeta
