#include "dzeta/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace dzeta {

FormalSeries::FormalSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  c_.resize(static_cast<size_t>(order) + 1);
}

FormalSeries::FormalSeries(std::vector<BigRat> coeffs, int order) : FormalSeries(order) {
  for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
  FormalSeries r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i) r[i] = a[i] + b[i];
  return r;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  FormalSeries r(std::min(a.order_, b.order_));
  for (int i = 0; i <= r.order_; ++i) {
    for (int j = 0; j <= i; ++j) r[i] += a[j] * b[i - j];
  }
  return r;
}

FormalSeries series_exp(const FormalSeries& g) {
  if (!g[0].is_zero()) throw std::domain_error("series_exp: nonzero constant term");
  int K = g.order();
  FormalSeries e(K);
  e[0] = BigRat(1);
  // n e_n = sum_{k=1}^n k g_k e_{n-k}
  for (int n = 1; n <= K; ++n) {
    BigRat acc(0);
    for (int k = 1; k <= n; ++k) {
      if (g[k].is_zero()) continue;
      acc += BigRat(k) * g[k] * e[n - k];
    }
    e[n] = acc / BigRat(n);
  }
  return e;
}

}  // namespace dzeta
