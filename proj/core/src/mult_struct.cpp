#include "dzeta/mult_struct.hpp"

#include <ostream>
#include <stdexcept>

#include "dzeta/series.hpp"

namespace dzeta {

PowerSums power_sums(const InvariantSet& inv, int K) {
  PowerSums ps;
  ps.Q = inv.Q;
  std::vector<BigRat> p = newton_power_sums(inv.P, K);
  ps.N.resize(p.size());
  for (int k = 1; k <= K; ++k) ps.N[static_cast<size_t>(k - 1)] = inv.Q.pow(k) + BigRat(1) - p[static_cast<size_t>(k - 1)];
  return ps;
}

BSeries b_series_exp(const PowerSums& ps, int K) {
  if (ps.Q == BigRat(1)) throw std::domain_error("b_series_exp: Q = 1");
  if (static_cast<int>(ps.N.size()) < K) throw std::invalid_argument("b_series_exp: not enough power sums");
  FormalSeries g(K);
  for (int m = 1; m <= K; ++m) {
    g[m] = ps.N[static_cast<size_t>(m - 1)] / ((ps.Q.pow(m) - BigRat(1)) * BigRat(m));
  }
  BSeries out;
  out.Q = ps.Q;
  out.b = series_exp(g).coeffs();
  out.route = BSeries::Route::exp;
  return out;
}

BSeries b_series_recursion(const InvariantSet& inv, int K) {
  const BigRat& Q = inv.Q;
  if (Q == BigRat(1)) throw std::domain_error("b_series_recursion: Q = 1");
  Poly A = inv.P * inv.P.coeff(0).inverse();
  std::vector<BigRat> b(static_cast<size_t>(K) + 1);
  b[0] = BigRat(1);
  auto at = [&](int i) { return i < 0 ? BigRat(0) : b[static_cast<size_t>(i)]; };
  for (int k = 1; k <= K; ++k) {
    BigRat rhs = (Q + BigRat(1)) * Q.pow(k - 1) * at(k - 1) - Q.pow(k - 1) * at(k - 2);
    for (int l = 1; l <= k && l <= A.degree(); ++l) rhs += A.coeff(l) * at(k - l);
    b[static_cast<size_t>(k)] = rhs / (Q.pow(k) - BigRat(1));
  }
  BSeries out;
  out.Q = Q;
  out.b = std::move(b);
  out.route = BSeries::Route::recursion;
  return out;
}

std::vector<BigRat> elliptic_beta_recursion(const BigRat& a, const BigRat& Q, int n_max) {
  std::vector<BigRat> beta(static_cast<size_t>(n_max) + 1);
  beta[0] = BigRat(1);
  BigRat prev2(0);
  for (int n = 1; n <= n_max; ++n) {
    BigRat Qn = Q.pow(n), Qn1 = Q.pow(n - 1);
    BigRat rhs = (Qn + Qn1 - a) * beta[static_cast<size_t>(n - 1)] - (Qn1 - Q) * (n >= 2 ? beta[static_cast<size_t>(n - 2)] : prev2);
    beta[static_cast<size_t>(n)] = rhs / (Qn - BigRat(1));
  }
  return beta;
}

BigRat genus1_trace(const InvariantSet& inv) {
  if (inv.genus != 1) throw std::invalid_argument("genus1_trace: genus must be 1");
  return -(inv.P.coeff(1) / inv.P.coeff(0));
}

std::vector<TriangleRow> elliptic_triangle(const ZetaLevel& prefix, int n_max) {
  if (prefix.genus != 1) throw std::invalid_argument("elliptic triangle needs genus 1");
  ZetaLevel pn = normalize_level(prefix);
  InvariantSet inv = extract_invariants(pn);
  std::vector<BigRat> rec = elliptic_beta_recursion(genus1_trace(inv), pn.Q, n_max);
  BSeries bs = b_series_exp(power_sums(inv, n_max), n_max);
  std::vector<TriangleRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    TriangleRow r;
    r.n = n;
    // The n = 0 value is the shared initial condition.
    r.beta_extract = n == 0 ? BigRat(1) : extract_invariants(derive_step(pn, n)).beta;
    r.beta_recursion = rec[static_cast<size_t>(n)];
    r.b_exp = bs.b[static_cast<size_t>(n)];
    r.agree = r.beta_extract == r.beta_recursion && r.beta_recursion == r.b_exp;
    rows.push_back(std::move(r));
  }
  return rows;
}

CheckResult elliptic_beta_equals_b_check(const ZetaLevel& prefix, int n_max) {
  for (const auto& r : elliptic_triangle(prefix, n_max)) {
    if (!r.agree) {
      return {"beta_equals_b", CheckStatus::fail,
              "n=" + std::to_string(r.n) + " extract=" + r.beta_extract.str() + " recursion=" + r.beta_recursion.str() +
                  " b=" + r.b_exp.str()};
    }
  }
  return {"beta_equals_b", CheckStatus::pass, ""};
}

std::vector<RatioRow> ratio_rows(const std::vector<BigRat>& betas, const BigRat& Q) {
  std::vector<RatioRow> rows;
  for (size_t n = 1; n < betas.size(); ++n) {
    RatioRow r;
    r.n = static_cast<int>(n);
    r.beta = betas[n];
    if (betas[n - 1].is_zero()) {
      rows.push_back(std::move(r));
      continue;
    }
    r.ratio = betas[n] / betas[n - 1];
    r.lower_ok = r.ratio > BigRat(1);
    BigRat lhs = Q.pow(static_cast<long>(n)) * (r.ratio - BigRat(1)) * (r.ratio - BigRat(1));
    BigRat rhs = (r.ratio + BigRat(1)) * (r.ratio + BigRat(1));
    // The squared form is equivalent to the bound only when r > 1.
    r.upper_ok = r.lower_ok && lhs < rhs;
    rows.push_back(std::move(r));
  }
  return rows;
}

CheckResult ratio_bounds_check(const std::vector<BigRat>& betas, const BigRat& Q) {
  for (const auto& r : ratio_rows(betas, Q)) {
    if (!r.lower_ok || !r.upper_ok) {
      return {"ratio_bounds", CheckStatus::fail,
              "n=" + std::to_string(r.n) + " ratio=" + r.ratio.str() + (r.lower_ok ? " above upper bound" : " not > 1")};
    }
  }
  return {"ratio_bounds", CheckStatus::pass, ""};
}

void write_ratio_csv(std::ostream& os, const std::vector<RatioCsvRow>& rows) {
  os << "curve,Q,n,beta,b_n,ratio,bound_ok\n";
  for (const auto& r : rows) {
    os << '"' << r.curve << '"' << ',' << r.Q.str() << ',' << r.n << ',' << r.beta.str() << ',' << r.b.str() << ','
       << r.ratio.str() << ',' << (r.bound_ok ? "true" : "false") << '\n';
  }
}

}  // namespace dzeta
