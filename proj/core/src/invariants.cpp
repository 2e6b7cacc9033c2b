#include "dzeta/invariants.hpp"

#include <stdexcept>

namespace dzeta {

BigRat InvariantSet::alpha(int l) const {
  if (l < 0 || l >= static_cast<int>(alphas.size())) return BigRat(0);
  return alphas[static_cast<size_t>(l)];
}

bool InvariantSet::positive() const {
  if (beta.sign() <= 0) return false;
  for (const auto& a : alphas) {
    if (a.sign() <= 0) return false;
  }
  return true;
}

InvariantSet extract_invariants(const ZetaLevel& z) {
  const int g = z.genus;
  InvariantSet inv;
  inv.Q = z.Q;
  inv.genus = g;
  inv.beta = residue_simple_pole(z.zeta, BigRat(1));
  inv.P = level_numerator(z);
  if (inv.P.degree() != 2 * g) {
    throw std::domain_error("level violates the alpha/beta numerator shape: deg P = " + std::to_string(inv.P.degree()));
  }
  inv.A = inv.P.coeffs();
  Poly rest = inv.P - Poly::monomial((z.Q - BigRat(1)) * inv.beta, g);
  auto [S, r] = divmod(rest, Poly::one_minus(1) * Poly::one_minus(z.Q));
  if (!r.is_zero() || S.degree() > 2 * g - 2) {
    throw std::domain_error("level violates the alpha/beta numerator shape: inexact division");
  }
  for (int l = 0; l <= g - 1; ++l) {
    if (S.coeff(2 * g - 2 - l) != z.Q.pow(g - 1 - l) * S.coeff(l)) {
      throw std::domain_error("level violates the alpha/beta numerator shape: S not palindromic");
    }
    inv.alphas.push_back(S.coeff(l));
  }
  return inv;
}

Poly reconstruct_numerator(const std::vector<BigRat>& alphas, const BigRat& beta, const BigRat& Q, int g) {
  if (static_cast<int>(alphas.size()) != g) throw std::invalid_argument("need g alpha values");
  std::vector<BigRat> s(static_cast<size_t>(2 * g - 1));
  for (int l = 0; l <= g - 1; ++l) {
    s[static_cast<size_t>(l)] = alphas[static_cast<size_t>(l)];
    s[static_cast<size_t>(2 * g - 2 - l)] = Q.pow(g - 1 - l) * alphas[static_cast<size_t>(l)];
  }
  return Poly(s) * Poly::one_minus(1) * Poly::one_minus(Q) + Poly::monomial((Q - BigRat(1)) * beta, g);
}

int a_table_case(int k, int g) {
  if (k == 0) return 0;
  if (k == 2 * g) return 6;
  if (k == g) return 3;
  if (k == 1) return 1;
  if (k == g + 1) return 4;
  if (k >= 2 && k <= g - 1) return 2;
  if (k >= g + 2 && k <= 2 * g - 1) return 5;
  throw std::out_of_range("a_table: index outside 0..2g");
}

BigRat a_table(int k, const std::vector<BigRat>& an, const BigRat& bn, const BigRat& Q, int g) {
  auto a = [&](int l) { return (l < 0 || l >= static_cast<int>(an.size())) ? BigRat(0) : an[static_cast<size_t>(l)]; };
  const BigRat one(1);
  switch (a_table_case(k, g)) {
    case 0: return a(0);
    case 1: return a(1) - (Q + one) * a(0);
    case 2: return a(k) - (one + Q) * a(k - 1) + Q * a(k - 2);
    case 3: return (Q - one) * bn - (one + Q) * a(g - 1) + BigRat(2) * Q * a(g - 2);
    case 4: return Q * Q * a(g - 3) - (Q + one) * Q * a(g - 2) + Q * a(g - 1);
    case 5:
      return Q.pow(k - g + 1) * a(2 * g - 2 - k) - (one + Q) * Q.pow(k - g) * a(2 * g - 1 - k) +
             Q.pow(k - g) * a(2 * g - k);
    default: return Q.pow(g);
  }
}

BigRat beta_double_prime(const SpecialValues& sv, int n) {
  BigRat sum(0);
  for (const auto& k : compositions(n)) sum += composition_weight(k, sv);
  return sum;
}

BigRat beta_closed_form(const SpecialValues& sv, int n, int g) {
  if (n < 1) throw std::invalid_argument("beta_closed_form: n must be positive");
  return sv.Q.pow(choose2(n) * (g - 1)) * beta_double_prime(sv, n);
}

MiracleResult counting_miracle_check(const ZetaLevel& prev, int n) {
  MiracleResult r;
  const int g = prev.genus;
  InvariantSet ip = extract_invariants(prev);
  InvariantSet in = extract_invariants(derive_step(prev, n));
  InvariantSet in1 = extract_invariants(derive_step(prev, n + 1));
  r.lhs = in1.alphas[0];
  r.rhs = prev.Q.pow(static_cast<long>(n) * (g - 1)) * ip.alphas[0] * in.beta;
  bool ok = r.lhs == r.rhs;
  r.check = {"miracle", ok ? CheckStatus::pass : CheckStatus::fail,
             "alpha(0)=" + r.lhs.str() + " expected " + r.rhs.str()};
  return r;
}

GammaPoly gamma_poly(const SpecialValues& sv, int n) {
  if (n < 1 || n > sv.depth()) throw std::invalid_argument("gamma_poly: n outside special value depth");
  GammaPoly gp;
  gp.n = n;
  gp.Q_prev = sv.Q;
  std::vector<Poly> f(static_cast<size_t>(n) + 1);
  for (int l = 1; l <= n; ++l) f[static_cast<size_t>(l)] = Poly({BigRat(-1), sv.Q.pow(l)});
  for (const auto& k : compositions(n)) {
    BigRat w = composition_weight(k, sv);
    Poly term = Poly::constant(w);
    for (int l = 1; l <= n; ++l) {
      if (l != k.back()) term = term * f[static_cast<size_t>(l)];
    }
    gp.gamma += term;
    gp.delta += RatFunc::reduce(Poly::constant(w), f[static_cast<size_t>(k.back())]);
  }
  Poly full = Poly::constant(1);
  for (int l = 1; l <= n; ++l) full = full * f[static_cast<size_t>(l)];
  RatFunc check = gp.delta * RatFunc(full);
  if (!(check == RatFunc(gp.gamma)) || gp.gamma.degree() > n - 1) {
    throw std::logic_error("gamma_poly: Delta * prod does not match the polynomial form");
  }
  return gp;
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<Poly>& chain, const BigRat& x) {
  std::vector<int> s;
  for (const auto& q : chain) s.push_back(q.eval(x).sign());
  return variations(s);
}

int variations_at_infinity(const std::vector<Poly>& chain, bool positive) {
  std::vector<int> s;
  for (const auto& q : chain) {
    int sg = q.leading().sign();
    if (!positive && q.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

}  // namespace

int sturm_count(const Poly& p, const BigRat& lo, const BigRat& hi) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(p);
  // Counts roots in (lo, hi]; drop hi itself to get the open interval.
  int c = variations_at(chain, lo) - variations_at(chain, hi);
  if (p.eval(hi).is_zero()) --c;
  return c;
}

int sturm_count_all(const Poly& p) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(p);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

GammaCheck gamma_interlacing_check(const GammaPoly& gp) {
  GammaCheck gc;
  const int n = gp.n;
  gc.degree = gp.gamma.degree();
  for (int kappa = 1; kappa <= n; ++kappa) {
    int s = gp.gamma.eval(gp.Q_prev.pow(-kappa)).sign();
    if (s == 0) gc.root_at_sample = true;
    gc.signs.push_back(s);
    gc.expected.push_back(kappa % 2 == 1 ? 1 : -1);
  }
  gc.real_roots = sturm_count_all(gp.gamma);
  for (int kappa = 1; kappa <= n - 1; ++kappa) {
    gc.interval_roots.push_back(sturm_count(gp.gamma, gp.Q_prev.pow(-kappa - 1), gp.Q_prev.pow(-kappa)));
  }
  auto fmt = [](const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::string(v[i] > 0 ? "+" : (v[i] < 0 ? "-" : "0"));
    return s + ")";
  };
  bool ok = !gc.root_at_sample && gc.signs == gc.expected;
  std::string detail = "signs " + fmt(gc.signs) + " expected " + fmt(gc.expected);
  if (gc.root_at_sample) detail += "; root at sample point";
  gc.check = {"interlacing", ok ? CheckStatus::pass : CheckStatus::fail, detail};
  return gc;
}

}  // namespace dzeta
