#include "dzeta/derived.hpp"

#include <functional>
#include <stdexcept>

#include "dzeta/errors.hpp"

namespace dzeta {

std::vector<Composition> compositions(int total) {
  if (total < 0) throw std::invalid_argument("compositions: negative total");
  std::vector<Composition> out;
  if (total == 0) {
    out.emplace_back();
    return out;
  }
  Composition cur;
  // Parts-count outer loop gives the (number of parts, lexicographic) order.
  for (int parts = 1; parts <= total; ++parts) {
    std::function<void(int, int)> rec = [&](int remaining, int left) {
      if (left == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
      }
      for (int first = 1; first <= remaining - (left - 1); ++first) {
        cur.push_back(first);
        rec(remaining - first, left - 1);
        cur.pop_back();
      }
    };
    rec(total, parts);
  }
  return out;
}

SpecialValues special_values(const ZetaLevel& z, int n_max) {
  if (n_max < 1) throw std::invalid_argument("special_values: depth must be positive");
  SpecialValues sv;
  sv.Q = z.Q;
  sv.zeta1 = residue_simple_pole(z.zeta, BigRat(1));
  sv.values.assign(static_cast<size_t>(n_max) + 1, BigRat(0));
  sv.vhats.assign(static_cast<size_t>(n_max) + 1, BigRat(1));
  sv.values[1] = sv.zeta1;
  for (int k = 2; k <= n_max; ++k) sv.values[static_cast<size_t>(k)] = z.zeta.eval(z.Q.pow(-k));
  for (int k = 1; k <= n_max; ++k) {
    sv.vhats[static_cast<size_t>(k)] = sv.vhats[static_cast<size_t>(k - 1)] * sv.values[static_cast<size_t>(k)];
  }
  return sv;
}

BigRat composition_weight(const Composition& k, const SpecialValues& sv) {
  BigRat w(1);
  for (int part : k) {
    if (part > sv.depth()) throw std::out_of_range("special values too shallow");
    w *= sv.vhats[static_cast<size_t>(part)];
  }
  for (size_t j = 0; j + 1 < k.size(); ++j) w /= BigRat(1) - sv.Q.pow(k[j] + k[j + 1]);
  return w;
}

std::vector<std::vector<BigRat>> grouped_weights(const SpecialValues& sv, int t_max) {
  if (t_max > sv.depth()) throw std::out_of_range("special values too shallow");
  std::vector<std::vector<BigRat>> W(static_cast<size_t>(t_max) + 1);
  for (int t = 0; t <= t_max; ++t) W[static_cast<size_t>(t)].assign(static_cast<size_t>(t) + 1, BigRat(0));
  for (int t = 1; t <= t_max; ++t) {
    for (int j = 1; j <= t; ++j) {
      const BigRat& vj = sv.vhats[static_cast<size_t>(j)];
      if (j == t) {
        W[static_cast<size_t>(t)][static_cast<size_t>(j)] = vj;
        continue;
      }
      BigRat acc(0);
      for (int i = 1; i <= t - j; ++i) {
        acc += W[static_cast<size_t>(t - j)][static_cast<size_t>(i)] / (BigRat(1) - sv.Q.pow(i + j));
      }
      W[static_cast<size_t>(t)][static_cast<size_t>(j)] = acc * vj;
    }
  }
  return W;
}

namespace {

void validate_or_throw(const ZetaLevel& z) {
  std::string bad;
  for (const auto& c : validate_zeta_level(z)) {
    if (!c.passed()) bad += " " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  }
  if (!bad.empty()) throw InconsistencyError("derivation inconsistency:" + bad);
}

ZetaLevel extend(const ZetaLevel& z, int n) {
  ZetaLevel out;
  out.tuple = z.tuple;
  out.tuple.push_back(n);
  out.Q = z.Q.pow(n);
  out.genus = z.genus;
  return out;
}

}  // namespace

ZetaLevel derive_step(const ZetaLevel& z, int n) {
  if (n < 1) throw std::invalid_argument("derive_step: n must be positive");
  const int g = z.genus;
  const BigRat& Qp = z.Q;
  const Poly P = level_numerator(z);
  const SpecialValues sv = special_values(z, n);
  const auto W = grouped_weights(sv, n - 1);

  // Every term's denominator is a product of distinct factors 1 - Qp^j T, j = 0..n,
  // times T^{g-1}: the shifted zeta uses j = n-a, n-a+1, the right block j < n-a
  // and the left block j > n-a+1. Summing numerators over that common denominator
  // needs no gcd until the single reduction at the end.
  std::vector<Poly> f(static_cast<size_t>(n) + 1);
  std::vector<BigRat> Qj(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Qj[static_cast<size_t>(j)] = Qp.pow(j);
    f[static_cast<size_t>(j)] = Poly::one_minus(Qj[static_cast<size_t>(j)]);
  }
  auto product_except = [&](int lo, int hi, int skip) {
    Poly r = Poly::constant(1);
    for (int j = lo; j <= hi; ++j) {
      if (j != skip) r = r * f[static_cast<size_t>(j)];
    }
    return r;
  };

  Poly num;
  for (int a = 1; a <= n; ++a) {
    const int s = n - a;
    const BigRat& c = Qj[static_cast<size_t>(s)];
    Poly Zs = P.scale_var(c) * c.pow(-(g - 1));

    // T/(T - Qp^{-m}) = -Qp^m T / (1 - Qp^m T), with m = n - a - k_p.
    Poly R = Poly::constant(1);
    if (s > 0) {
      R = Poly();
      for (int kp = 1; kp <= s; ++kp) {
        int m = s - kp;
        Poly term = Poly::monomial(-Qj[static_cast<size_t>(m)], 1) * product_except(0, s - 1, m);
        R += term * W[static_cast<size_t>(s)][static_cast<size_t>(kp)];
      }
    }
    Poly L = Poly::constant(1);
    if (a > 1) {
      L = Poly();
      for (int l1 = 1; l1 <= a - 1; ++l1) {
        L += product_except(s + 2, n, s + 1 + l1) * W[static_cast<size_t>(a - 1)][static_cast<size_t>(l1)];
      }
    }
    num += Zs * R * L;
  }
  num *= Qp.pow(choose2(n) * (g - 1));
  Poly den = product_except(0, n, -1).shift(g - 1);

  ZetaLevel out = extend(z, n);
  out.zeta = RatFunc::reduce(num, den);
  validate_or_throw(out);
  return out;
}

ZetaLevel derive_step_naive(const ZetaLevel& z, int n) {
  if (n < 1) throw std::invalid_argument("derive_step: n must be positive");
  const int g = z.genus;
  const BigRat& Qp = z.Q;
  const SpecialValues sv = special_values(z, n);
  RatFunc sum;
  for (int a = 1; a <= n; ++a) {
    RatFunc Zs = z.zeta.scale_var(Qp.pow(n - a));
    for (const auto& k : compositions(n - a)) {
      RatFunc right(composition_weight(k, sv));
      if (!k.empty()) {
        right *= RatFunc::reduce(Poly::monomial(1, 1), Poly({-Qp.pow(a + k.back() - n), BigRat(1)}));
      }
      for (const auto& l : compositions(a - 1)) {
        RatFunc left(composition_weight(l, sv));
        if (!l.empty()) {
          left *= RatFunc::reduce(Poly::constant(1), Poly::one_minus(Qp.pow(n - a + 1 + l.front())));
        }
        sum += right * Zs * left;
      }
    }
  }
  sum *= Qp.pow(choose2(n) * (g - 1));
  ZetaLevel out = extend(z, n);
  out.zeta = sum;
  validate_or_throw(out);
  return out;
}

ZetaLevel normalize_level(const ZetaLevel& z) {
  BigRat a0 = level_numerator(z).coeff(0);
  if (a0.is_zero()) throw std::domain_error("cannot normalize: alpha(0) = 0");
  ZetaLevel out = z;
  out.zeta *= a0.inverse();
  out.normalized = true;
  out.norm_const = a0;
  return out;
}

std::vector<ZetaLevel> derive_tower(const ZetaLevel& base, const std::vector<int>& tuple, bool normalize) {
  if (tuple.empty()) throw std::invalid_argument("derive_tower: empty tuple");
  std::vector<ZetaLevel> out;
  ZetaLevel cur = normalize ? normalize_level(base) : base;
  for (int n : tuple) {
    if (n < 1) throw std::invalid_argument("tuple entries must be positive");
    ZetaLevel next = derive_step(cur, n);
    if (normalize) next = normalize_level(next);
    out.push_back(next);
    cur = std::move(next);
  }
  return out;
}

std::vector<ZetaLevel> derive_tower(const CurveSpec& c, const std::vector<int>& tuple, bool normalize) {
  return derive_tower(artin_zeta(c), tuple, normalize);
}

}  // namespace dzeta
