#include "dzeta/curves.hpp"

#include <stdexcept>

#include "dzeta/errors.hpp"
#include "dzeta/finite_field.hpp"
#include "dzeta/series.hpp"

namespace dzeta {

CurveSpec CurveSpec::elliptic(long q, long a, std::string label) {
  CurveSpec c;
  c.label = label.empty() ? "elliptic:q=" + std::to_string(q) + ",a=" + std::to_string(a) : std::move(label);
  c.q = q;
  c.genus = 1;
  c.source = Source::trace;
  c.trace = a;
  return c;
}

CurveSpec CurveSpec::from_counts(long q, int g, std::vector<long> counts, std::string label) {
  CurveSpec c;
  c.label = std::move(label);
  c.q = q;
  c.genus = g;
  c.source = Source::point_counts;
  c.point_counts = std::move(counts);
  return c;
}

CurveSpec CurveSpec::from_numerator(long q, int g, std::vector<BigRat> A, std::string label) {
  CurveSpec c;
  c.label = std::move(label);
  c.q = q;
  c.genus = g;
  c.source = Source::numerator;
  c.numerator = std::move(A);
  return c;
}

Poly standard_denominator(const BigRat& Q, int g) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1");
  return (Poly::one_minus(1) * Poly::one_minus(Q)).shift(g - 1);
}

Poly level_numerator(const ZetaLevel& z) {
  Poly D = standard_denominator(z.Q, z.genus);
  auto [cof, rem] = divmod(D, z.zeta.den());
  if (!rem.is_zero()) throw std::domain_error("zeta denominator does not divide (1-T)(1-QT)T^(g-1)");
  return z.zeta.num() * cof;
}

ZetaLevel level_from_numerator(const Poly& P, const BigRat& Q, int g) {
  ZetaLevel z;
  z.Q = Q;
  z.genus = g;
  z.zeta = RatFunc::reduce(P, standard_denominator(Q, g));
  return z;
}

namespace {

void check_base(long q, int g) {
  if (g < 1) throw std::invalid_argument("genus 0 is not supported");
  if (!prime_power(q)) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
}

// A_{2g-i} = q^{g-i} A_i for i = 0..g-1, filling the upper half from the lower.
std::vector<BigRat> reflect(const std::vector<BigRat>& low, const BigRat& q, int g) {
  std::vector<BigRat> A(static_cast<size_t>(2 * g) + 1);
  for (int i = 0; i <= g; ++i) A[static_cast<size_t>(i)] = low[static_cast<size_t>(i)];
  for (int i = 0; i < g; ++i) A[static_cast<size_t>(2 * g - i)] = q.pow(g - i) * low[static_cast<size_t>(i)];
  return A;
}

}  // namespace

ZetaLevel artin_elliptic(long q, long a) {
  check_base(q, 1);
  BigRat a2 = BigRat(a) * BigRat(a);
  if (a2 > BigRat(4) * BigRat(q)) {
    throw std::domain_error("Hasse bound violated: a^2 = " + a2.num().get_str() + " > 4q = " + std::to_string(4 * q));
  }
  return level_from_numerator(Poly({BigRat(1), BigRat(-a), BigRat(q)}), BigRat(q), 1);
}

ZetaLevel artin_from_point_counts(long q, int g, const std::vector<long>& counts) {
  check_base(q, g);
  const int r = static_cast<int>(counts.size());
  if (r < g) throw std::invalid_argument("need at least g point counts");
  FormalSeries s(r);
  for (int k = 1; k <= r; ++k) s[k] = BigRat(counts[static_cast<size_t>(k - 1)]) / BigRat(k);
  FormalSeries e = series_exp(s);
  FormalSeries lin({BigRat(1), BigRat(-(q + 1)), BigRat(q)}, r);
  FormalSeries A = e * lin;
  for (int i = 0; i <= r; ++i) {
    if (!A[i].is_integer()) throw std::invalid_argument("point counts inconsistent: non-integral numerator coefficient");
  }
  std::vector<BigRat> low(static_cast<size_t>(g) + 1);
  for (int i = 0; i <= g; ++i) low[static_cast<size_t>(i)] = A[i];
  std::vector<BigRat> full = reflect(low, BigRat(q), g);
  for (int i = g + 1; i <= r; ++i) {
    BigRat expect = i <= 2 * g ? full[static_cast<size_t>(i)] : BigRat(0);
    if (A[i] != expect) {
      throw std::invalid_argument("point counts inconsistent with the functional equation at N_" + std::to_string(i));
    }
  }
  return level_from_numerator(Poly(full), BigRat(q), g);
}

ZetaLevel artin_from_numerator(long q, int g, const std::vector<BigRat>& A) {
  check_base(q, g);
  if (static_cast<int>(A.size()) != 2 * g + 1) throw std::invalid_argument("numerator must have 2g+1 coefficients");
  if (A[0].is_zero()) throw std::invalid_argument("numerator constant term must be nonzero");
  BigRat inv = A[0].inverse();
  std::vector<BigRat> B(A.size());
  for (size_t i = 0; i < A.size(); ++i) B[i] = A[i] * inv;
  BigRat Q(q);
  for (int i = 0; i <= g; ++i) {
    if (B[static_cast<size_t>(2 * g - i)] != Q.pow(g - i) * B[static_cast<size_t>(i)]) {
      throw std::invalid_argument("numerator violates A_{2g-i} = q^{g-i} A_i at i=" + std::to_string(i));
    }
  }
  return level_from_numerator(Poly(B), Q, g);
}

ZetaLevel artin_zeta(const CurveSpec& c) {
  switch (c.source) {
    case CurveSpec::Source::trace:
      if (c.genus != 1) throw std::invalid_argument("trace input requires genus 1");
      return artin_elliptic(c.q, c.trace);
    case CurveSpec::Source::point_counts:
      return artin_from_point_counts(c.q, c.genus, c.point_counts);
    case CurveSpec::Source::numerator:
      return artin_from_numerator(c.q, c.genus, c.numerator);
  }
  throw std::invalid_argument("unknown curve source");
}

std::vector<CheckResult> validate_zeta_level(const ZetaLevel& z) {
  std::vector<CheckResult> out;
  if (z.genus < 1) {
    out.push_back({"genus", CheckStatus::fail, "genus must be at least 1"});
    return out;
  }
  Poly D = standard_denominator(z.Q, z.genus);
  bool den_ok = divides(z.zeta.den(), D);
  out.push_back({"denominator", den_ok ? CheckStatus::pass : CheckStatus::fail,
                 den_ok ? "" : "denominator " + z.zeta.den().str() + " does not divide " + D.str()});

  bool fe = z.zeta.invert_var(z.Q) == z.zeta;
  out.push_back({"functional_equation", fe ? CheckStatus::pass : CheckStatus::fail,
                 fe ? "" : "zeta(1/(QT)) != zeta(T)"});

  // In this variable Res_{T=1/Q} = -(1/Q) Res_{T=1}; the residues in s are negatives.
  try {
    BigRat r1 = residue_simple_pole(z.zeta, BigRat(1));
    BigRat rq = residue_simple_pole(z.zeta, z.Q.inverse());
    bool ok = r1 == -(z.Q * rq);
    out.push_back({"residues", ok ? CheckStatus::pass : CheckStatus::fail,
                   "Res_1=" + r1.str() + " Res_1/Q=" + rq.str()});
  } catch (const std::exception& e) {
    out.push_back({"residues", CheckStatus::fail, e.what()});
  }

  if (den_ok) {
    Poly P = level_numerator(z);
    bool ok = P.degree() == 2 * z.genus;
    out.push_back({"numerator_degree", ok ? CheckStatus::pass : CheckStatus::fail,
                   "deg P = " + std::to_string(P.degree())});
  } else {
    out.push_back({"numerator_degree", CheckStatus::fail, "numerator undefined"});
  }
  return out;
}

std::vector<BigRat> point_counts_from_numerator(const Poly& P, const BigRat& Q, int k) {
  std::vector<BigRat> p = newton_power_sums(P, k);
  std::vector<BigRat> N(p.size());
  for (int i = 1; i <= k; ++i) N[static_cast<size_t>(i - 1)] = Q.pow(i) + BigRat(1) - p[static_cast<size_t>(i - 1)];
  return N;
}

}  // namespace dzeta
