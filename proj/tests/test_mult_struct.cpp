#include <gtest/gtest.h>

#include <sstream>

#include "dzeta/finite_field.hpp"
#include "dzeta/mult_struct.hpp"
#include "gen.hpp"

using namespace dzeta;
using dzeta::testing::R;

namespace {

ZetaLevel genus2_base() {
  const PlaneCurve& c = catalog_curve("y^2+y=x^5/F2");
  return artin_from_point_counts(2, 2, {count_points_bruteforce(c, 2, 1), count_points_bruteforce(c, 2, 2)});
}

}  // namespace

TEST(PowerSums, Examples) {
  PowerSums ps = power_sums(extract_invariants(artin_elliptic(2, 0)), 2);
  EXPECT_EQ(ps.N[0], BigRat(3));
  EXPECT_EQ(ps.N[1], BigRat(9));

  ZetaLevel d = derive_step(artin_elliptic(2, 0), 2);
  InvariantSet inv = extract_invariants(d);
  BigRat A1 = inv.P.coeff(1) / inv.P.coeff(0);
  EXPECT_EQ(power_sums(inv, 1).N[0], BigRat(4) + BigRat(1) + A1);
}

TEST(PowerSums, BruteForceCatalog) {
  for (const auto& c : curve_catalog()) {
    std::vector<long> counts;
    for (int k = 1; k <= c.genus; ++k) counts.push_back(count_points_bruteforce(c, c.p, k));
    PowerSums ps = power_sums(extract_invariants(artin_from_point_counts(c.p, c.genus, counts)), 3);
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(ps.N[static_cast<size_t>(k - 1)], BigRat(count_points_bruteforce(c, c.p, k))) << c.label << " k=" << k;
    }
  }
}

TEST(BSeries, Examples) {
  InvariantSet inv = extract_invariants(artin_elliptic(2, 0));
  BSeries e = b_series_exp(power_sums(inv, 3), 3);
  EXPECT_EQ(e.b[0], BigRat(1));
  EXPECT_EQ(e.b[1], BigRat(3));
  EXPECT_EQ(e.b[1], inv.beta);
  BSeries r = b_series_recursion(inv, 3);
  EXPECT_EQ(r.b, e.b);
  EXPECT_EQ(r.route, BSeries::Route::recursion);
}

TEST(BSeries, FirstCoefficientClosedForm) {
  for (long q : {2L, 3L, 5L, 7L}) {
    for (long a = -2; a <= 2; ++a) {
      InvariantSet inv = extract_invariants(artin_elliptic(q, a));
      BSeries r = b_series_recursion(inv, 1);
      EXPECT_EQ(r.b[1], BigRat(q + 1 - a) / BigRat(q - 1));
    }
  }
}

TEST(BSeries, DegenerateTraceStillWellPosed) {
  InvariantSet inv;
  inv.Q = BigRat(4);
  inv.genus = 1;
  inv.P = Poly({BigRat(1), BigRat(5), BigRat(4)});  // A_1 = Q + 1
  BSeries r = b_series_recursion(inv, 6);
  EXPECT_EQ(r.b.size(), 7u);
  EXPECT_EQ(r.b[1], BigRat(10) / BigRat(3));
}

TEST(BSeries, PropertyRoutesAgreeOrder12) {
  std::vector<ZetaLevel> levels;
  for (const auto& c : curve_catalog()) {
    std::vector<long> counts;
    for (int k = 1; k <= c.genus; ++k) counts.push_back(count_points_bruteforce(c, c.p, k));
    ZetaLevel base = artin_from_point_counts(c.p, c.genus, counts);
    levels.push_back(base);
    for (const auto& t : std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {3, 2}}) {
      for (const auto& lv : derive_tower(base, t, true)) levels.push_back(lv);
    }
  }
  for (const auto& lv : levels) {
    InvariantSet inv = extract_invariants(normalize_level(lv));
    EXPECT_EQ(b_series_recursion(inv, 12).b, b_series_exp(power_sums(inv, 12), 12).b) << "Q=" << lv.Q;
  }
}

TEST(EllipticRecursion, Examples) {
  auto b = elliptic_beta_recursion(BigRat(0), BigRat(2), 2);
  EXPECT_EQ(b[0], BigRat(1));
  EXPECT_EQ(b[1], BigRat(3));
  EXPECT_EQ(b[2], BigRat(6));
  for (long a = -2; a <= 2; ++a) {
    EXPECT_EQ(elliptic_beta_recursion(BigRat(a), BigRat(3), 1)[1], BigRat(4 - a) / BigRat(2));
  }
}

TEST(EllipticTriangle, SmallGrid) {
  for (long q : {2L, 3L}) {
    for (long a = -3; a <= 3; ++a) {
      if (a * a > 4 * q) continue;
      auto rows = elliptic_triangle(artin_elliptic(q, a), 6);
      ASSERT_EQ(rows.size(), 7u);
      EXPECT_EQ(rows[0].beta_extract, BigRat(1));
      for (const auto& r : rows) {
        EXPECT_TRUE(r.agree) << "q=" << q << " a=" << a << " n=" << r.n << " " << r.beta_extract << " "
                             << r.beta_recursion << " " << r.b_exp;
      }
      EXPECT_TRUE(elliptic_beta_equals_b_check(artin_elliptic(q, a), 4).passed());
    }
  }
  auto rows = elliptic_triangle(artin_elliptic(2, 0), 2);
  EXPECT_EQ(rows[2].beta_extract, BigRat(6));
  EXPECT_EQ(rows[1].b_exp, residue_simple_pole(artin_elliptic(2, 0).zeta, BigRat(1)));
}

TEST(EllipticTriangle, DerivedPrefix) {
  ZetaLevel prefix = derive_tower(CurveSpec::elliptic(2, 1), {2}, true).back();
  EXPECT_TRUE(elliptic_beta_equals_b_check(prefix, 4).passed());
  EXPECT_THROW(elliptic_triangle(genus2_base(), 2), std::invalid_argument);
}

TEST(RatioBounds, Examples) {
  auto rows = ratio_rows(elliptic_beta_recursion(BigRat(0), BigRat(2), 2), BigRat(2));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].ratio, BigRat(3));
  EXPECT_TRUE(rows[0].lower_ok && rows[0].upper_ok);
  EXPECT_EQ(rows[1].ratio, BigRat(2));
  EXPECT_TRUE(rows[1].lower_ok && rows[1].upper_ok);
}

TEST(RatioBounds, NegativeControls) {
  CheckResult flat = ratio_bounds_check({BigRat(1), BigRat(2), BigRat(2)}, BigRat(2));
  EXPECT_EQ(flat.status, CheckStatus::fail);
  // r = 10 at n = 1, Q = 2: 2 * 81 > 121.
  CheckResult high = ratio_bounds_check({BigRat(1), BigRat(10)}, BigRat(2));
  EXPECT_EQ(high.status, CheckStatus::fail);
}

TEST(RatioBounds, EllipticGrid) {
  // From n = 2 on the bounds hold everywhere. At n = 1 the ratio is (Q+1-a)/(Q-1), which
  // is not above 1 once a >= 2 and meets the upper bound exactly at a = -2 sqrt(Q).
  for (long q : {2L, 3L, 4L, 5L}) {
    for (long a = -4; a <= 4; ++a) {
      if (a * a > 4 * q) continue;
      auto rows = ratio_rows(elliptic_beta_recursion(BigRat(a), BigRat(q), 8), BigRat(q));
      ASSERT_EQ(rows.size(), 8u);
      for (const auto& r : rows) {
        bool expected = r.n >= 2 || (a < 2 && a * a < 4 * q);
        EXPECT_EQ(r.lower_ok && r.upper_ok, expected) << "q=" << q << " a=" << a << " n=" << r.n << " r=" << r.ratio;
      }
    }
  }
}

TEST(RatioCsv, Format) {
  std::ostringstream os;
  write_ratio_csv(os, {{"elliptic:q=2,a=0", BigRat(2), 1, BigRat(3), BigRat(3), BigRat(3), true}});
  EXPECT_EQ(os.str(), "curve,Q,n,beta,b_n,ratio,bound_ok\n\"elliptic:q=2,a=0\",2/1,1,3/1,3/1,3/1,true\n");
}
