#include "dzeta/rh.hpp"

#include <cmath>
#include <stdexcept>

#include "mpreal.hpp"

namespace dzeta {

using detail::Cx;
using detail::Mpf;

const char* to_string(RHStatus s) {
  switch (s) {
    case RHStatus::holds: return "holds";
    case RHStatus::fails: return "fails";
    case RHStatus::unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(RHVerdict::Method m) { return m == RHVerdict::Method::exact_g1 ? "exact_g1" : "numeric"; }

RHVerdict rh_exact_genus1(const InvariantSet& inv) {
  if (inv.genus != 1) throw std::invalid_argument("rh_exact_genus1: genus must be 1");
  BigRat a0 = inv.P.coeff(0);
  BigRat A = -(inv.P.coeff(1) / a0);
  BigRat disc = A * A - BigRat(4) * inv.Q;
  RHVerdict v;
  v.method = RHVerdict::Method::exact_g1;
  v.discriminant_sign = disc.sign();
  v.status = disc.sign() <= 0 ? RHStatus::holds : RHStatus::fails;
  v.boundary = disc.is_zero();
  v.diagnostics = "A=" + A.str() + " A^2-4Q=" + disc.str();
  return v;
}

namespace {

struct RootRun {
  std::vector<Cx> roots;
  bool converged = false;
  int iterations = 0;
};

Cx horner(const std::vector<Mpf>& c, const Cx& z, Cx* deriv) {
  const mpfr_prec_t prec = z.re.prec();
  Cx p(prec), d(prec);
  for (size_t i = c.size(); i-- > 0;) {
    d = d * z + p;
    p = p * z + Cx(c[i], Mpf(prec));
  }
  *deriv = d;
  return p;
}

// sum |c_i| |z|^i, the scale of rounding error in evaluating p at z.
Mpf abs_horner(const std::vector<Mpf>& c, const Mpf& r) {
  Mpf acc(r.prec());
  for (size_t i = c.size(); i-- > 0;) acc = acc * r + abs(c[i]);
  return acc;
}

RootRun aberth(const std::vector<Mpf>& c, std::vector<Cx> z, mpfr_prec_t prec, int max_iter) {
  const size_t d = z.size();
  RootRun run;
  Mpf eps(prec);
  mpfr_set_ui_2exp(eps.get(), 1, -static_cast<mpfr_exp_t>(prec / 2), MPFR_RNDN);
  Mpf unit(prec);
  mpfr_set_ui_2exp(unit.get(), 1, -static_cast<mpfr_exp_t>(prec), MPFR_RNDN);
  Mpf backward = unit * Mpf(prec, 8.0 * static_cast<double>(d));
  int polish = -1;
  for (int it = 1; it <= max_iter; ++it) {
    run.iterations = it;
    Mpf max_rel(prec);
    bool all_small_residual = true;
    for (size_t i = 0; i < d; ++i) {
      Cx dp(prec);
      Cx p = horner(c, z[i], &dp);
      Mpf zmod = z[i].modulus();
      if (abs(p.modulus()) > backward * abs_horner(c, zmod)) all_small_residual = false;
      if (p.is_zero()) continue;
      Cx ratio = p / dp;
      Cx s(prec);
      for (size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        Cx diff = z[i] - z[j];
        if (diff.is_zero()) continue;
        s = s + Cx(Mpf(prec, 1.0), Mpf(prec)) / diff;
      }
      Cx denom = Cx(Mpf(prec, 1.0), Mpf(prec)) - ratio * s;
      Cx corr = denom.is_zero() ? ratio : ratio / denom;
      if (!corr.re.is_finite() || !corr.im.is_finite()) return run;
      z[i] = z[i] - corr;
      Mpf rel = zmod.is_zero() ? corr.modulus() : corr.modulus() / zmod;
      if (rel > max_rel) max_rel = rel;
    }
    if (polish < 0 && (max_rel < eps || all_small_residual)) polish = 3;
    if (polish >= 0 && polish-- == 0) {
      run.converged = true;
      break;
    }
  }
  run.roots = std::move(z);
  return run;
}

std::vector<Cx> circle_start(size_t d, const BigRat& Q, mpfr_prec_t prec) {
  // radius Q^{-1/2} (1 + 1/8); the angle offset keeps guesses off the real axis.
  Mpf r = Mpf(prec, 1.125) / sqrt(Mpf(prec, Q));
  std::vector<Cx> z;
  const double two_pi = 6.283185307179586;
  for (size_t k = 0; k < d; ++k) {
    double th = two_pi * static_cast<double>(k) / static_cast<double>(d) + 0.4;
    z.emplace_back(r * Mpf(prec, std::cos(th)), r * Mpf(prec, std::sin(th)));
  }
  return z;
}

std::vector<Cx> scattered_start(size_t d, const BigRat& Q, mpfr_prec_t prec) {
  Mpf base = Mpf(prec, 1.0) / sqrt(Mpf(prec, Q));
  std::vector<Cx> z;
  for (size_t k = 0; k < d; ++k) {
    double rad = 0.3 + 1.7 * static_cast<double>((k * 7 + 3) % (d + 1)) / static_cast<double>(d + 1);
    double th = 2.399963229728653 * static_cast<double>(k + 1);  // golden angle
    Mpf r = base * Mpf(prec, rad);
    z.emplace_back(r * Mpf(prec, std::cos(th)), r * Mpf(prec, std::sin(th)));
  }
  return z;
}

bool symmetric(const Poly& P, const BigRat& Q) {
  int d = P.degree();
  if (d % 2 != 0) return false;
  int g = d / 2;
  for (int i = 0; i <= g; ++i) {
    if (P.coeff(d - i) != Q.pow(g - i) * P.coeff(i)) return false;
  }
  return true;
}

RHVerdict numeric_once(const Poly& P, const BigRat& Q, int prec_bits, int tol_exp, int max_iter) {
  const auto prec = static_cast<mpfr_prec_t>(prec_bits);
  RHVerdict v;
  v.method = RHVerdict::Method::numeric;
  v.precision_bits = prec_bits;
  v.tolerance = "1e-" + std::to_string(tol_exp);
  v.self_inversive = symmetric(P, Q);

  std::vector<Mpf> c;
  for (const auto& a : P.coeffs()) c.emplace_back(prec, a);
  const size_t d = static_cast<size_t>(P.degree());

  RootRun run = aberth(c, circle_start(d, Q, prec), prec, max_iter);
  if (!run.converged) {
    v.diagnostics = "circle start did not converge; retried from scattered start";
    run = aberth(c, scattered_start(d, Q, prec), prec, max_iter);
  }
  v.iterations = run.iterations;
  if (!run.converged) {
    v.status = RHStatus::unknown;
    v.diagnostics += (v.diagnostics.empty() ? "" : "; ") + std::string("no convergence after iteration cap");
    return v;
  }
  Mpf sq = sqrt(Mpf(prec, Q));
  Mpf one(prec, 1.0);
  Mpf worst(prec);
  for (const auto& r : run.roots) {
    Mpf dev = abs(r.modulus() * sq - one);
    v.deviations.push_back(dev.sci(6));
    if (dev > worst) worst = dev;
  }
  Mpf tol(prec);
  mpfr_ui_pow_ui(tol.get(), 10, static_cast<unsigned long>(tol_exp), MPFR_RNDN);
  tol = one / tol;
  Mpf tol10 = tol * Mpf(prec, 10.0);
  v.max_deviation = worst.sci(6);
  v.max_deviation_approx = worst.to_double();
  if (worst < tol) {
    v.status = RHStatus::holds;
  } else if (worst > tol10) {
    v.status = RHStatus::fails;
  } else {
    v.status = RHStatus::unknown;
    v.diagnostics += (v.diagnostics.empty() ? "" : "; ") + std::string("deviation in escalation band");
  }
  return v;
}

}  // namespace

RHVerdict rh_numeric(const Poly& P, const BigRat& Q, const RHNumericOptions& opt) {
  if (P.degree() < 2 || P.degree() % 2 != 0) {
    throw std::invalid_argument("rh_numeric: numerator degree must be even and at least 2");
  }
  if (Q.sign() <= 0) throw std::invalid_argument("rh_numeric: Q must be positive");
  if (opt.precision_bits < 32) throw std::invalid_argument("rh_numeric: precision below 32 bits");
  int tol_exp = opt.tolerance_exp.value_or(opt.precision_bits * 3 / 20);
  RHVerdict v = numeric_once(P, Q, opt.precision_bits, tol_exp, opt.max_iterations);
  if (v.status == RHStatus::unknown && opt.escalate) {
    RHVerdict again = numeric_once(P, Q, opt.precision_bits * 2, tol_exp, opt.max_iterations * 2);
    again.diagnostics = "escalated from " + std::to_string(opt.precision_bits) + " bits (" + v.diagnostics + ")" +
                        (again.diagnostics.empty() ? "" : "; " + again.diagnostics);
    return again;
  }
  return v;
}

RHVerdict rh_numeric(const InvariantSet& inv, const RHNumericOptions& opt) { return rh_numeric(inv.P, inv.Q, opt); }

RHVerdict rh_check(const InvariantSet& inv, const RHNumericOptions& opt) {
  return inv.genus == 1 ? rh_exact_genus1(inv) : rh_numeric(inv, opt);
}

}  // namespace dzeta
