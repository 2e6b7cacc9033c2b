#pragma once

/// @file series.hpp
/// Truncated formal power series with exact coefficients.

#include <vector>

#include "dzeta/bigrat.hpp"

namespace dzeta {

/// Coefficients c_0..c_K of a series known modulo x^{K+1}.
class FormalSeries {
 public:
  explicit FormalSeries(int order);
  FormalSeries(std::vector<BigRat> coeffs, int order);

  int order() const { return order_; }
  const std::vector<BigRat>& coeffs() const { return c_; }
  const BigRat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  BigRat& operator[](int i) { return c_[static_cast<size_t>(i)]; }

  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  int order_;
  std::vector<BigRat> c_;
};

/// exp(g) via exp(g)' = g' exp(g). Throws std::domain_error if g(0) != 0.
FormalSeries series_exp(const FormalSeries& g);

}  // namespace dzeta
