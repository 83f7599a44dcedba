#include <delannoy/identities.hpp>

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace delannoy;

namespace {

ExactInt as_int(const IdentitySide& s) { return std::get<ExactInt>(s); }

}  // namespace

TEST(TripleSums, TheoremFormulaExamples) {
  EXPECT_EQ(rhs_theorem12(1, 3), IntPolynomial({1}));
  EXPECT_EQ(rhs_theorem12(1, 4), IntPolynomial({1}));
  EXPECT_EQ(rhs_theorem12(2, 3).evaluate(1), 41);
  EXPECT_EQ(rhs_theorem12(2, 4).evaluate(1), 122);
  EXPECT_THROW(rhs_theorem12(0, 3), std::invalid_argument);
  EXPECT_THROW(rhs_theorem12(2, 5), std::invalid_argument);
}

TEST(TripleSums, AlternatingFormulaExamples) {
  EXPECT_EQ(rhs_lemma41(1, 3), IntPolynomial({1}));
  EXPECT_EQ(rhs_lemma41(2, 3).evaluate(1), 40);
  EXPECT_EQ(rhs_lemma41(2, 4).evaluate(1), 121);
}

// Pointwise check against the brute-force power sums, independent of the
// polynomial-level path.
TEST(TripleSums, EvaluationMatchesIntegerPowerSums) {
  const oracle::Binomials c(60);
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (unsigned m : {3U, 4U}) {
      const IntPolynomial plus = rhs_theorem12(n, m);
      const IntPolynomial minus = rhs_lemma41(n, m);
      for (long x = -3; x <= 3; ++x) {
        ASSERT_EQ(plus.evaluate(x) * n, oracle::power_sum(c, n, m, 1, x)) << n << "," << m << "," << x;
        // (-1)^(n-k-1) = (-1)^(n-1) (-1)^k
        const mpz_class alt = oracle::power_sum(c, n, m, -1, x);
        ASSERT_EQ(minus.evaluate(x) * n, (n % 2 == 1) ? alt : mpz_class(-alt)) << n << "," << m << "," << x;
      }
    }
  }
}

TEST(PowerSumIdentity, Examples) {
  EXPECT_TRUE(verify_power_sum_identity(1, 3, Sign::plus).holds);
  EXPECT_TRUE(verify_power_sum_identity(7, 3, Sign::plus).holds);
  EXPECT_TRUE(verify_power_sum_identity(7, 4, Sign::minus).holds);
  const auto v = verify_power_sum_identity(7, 4, Sign::minus);
  EXPECT_EQ(v.id, IdentityId::sum12);
  EXPECT_EQ(std::get<IntPolynomial>(v.lhs), std::get<IntPolynomial>(v.rhs));
  EXPECT_EQ(std::get<IntPolynomial>(v.lhs).degree(), 4 * 6);
}

TEST(PowerSumIdentity, SmallRange) {
  for (std::int64_t n = 1; n <= 15; ++n) {
    for (unsigned m : {3U, 4U}) {
      for (Sign s : {Sign::plus, Sign::minus}) ASSERT_TRUE(verify_power_sum_identity(n, m, s).holds) << n << "," << m;
    }
  }
}

TEST(PowerSumIdentity, DetectsCorruptedFormula) {
  // The alternating formula must not match the plain power sum.
  const IntPolynomial lhs = *weighted_power_sum_polynomial(5, 3, Sign::plus).divide_exact(5);
  EXPECT_NE(lhs, rhs_lemma41(5, 3));
  EXPECT_EQ(lhs, rhs_theorem12(5, 3));
}

TEST(ProductExpansion, Examples) {
  const auto v = check_product_expansion(2, 1, 1);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(as_int(v.lhs), 36);
  EXPECT_EQ(as_int(v.rhs), 36);
  for (std::int64_t l = 0; l <= 5; ++l) EXPECT_EQ(as_int(check_product_expansion(l, 0, 0).lhs), 1);
  EXPECT_TRUE(check_product_expansion(3, 2, 1).holds);
  EXPECT_THROW(check_product_expansion(2, 3, 0), std::invalid_argument);
}

TEST(ProductExpansion, MatchesBruteForce) {
  const oracle::Binomials c(40);
  for (std::int64_t l = 0; l <= 12; ++l) {
    for (std::int64_t i = 0; i <= l; ++i) {
      for (std::int64_t j = 0; j <= l; ++j) {
        const auto v = check_product_expansion(l, i, j);
        ASSERT_TRUE(v.holds);
        ASSERT_EQ(as_int(v.lhs), c(l, i) * c(l + i, i) * c(l, j) * c(l + j, j));
      }
    }
  }
}

TEST(TriangleSum, Examples) {
  auto v = check_weighted_triangle_sum(2, 0, Sign::plus);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(as_int(v.lhs), 4);
  v = check_weighted_triangle_sum(2, 1, Sign::plus);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(as_int(v.rhs), 6);
  v = check_weighted_triangle_sum(2, 1, Sign::minus);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(as_int(v.lhs), 6);
  EXPECT_THROW(check_weighted_triangle_sum(2, 2, Sign::plus), std::invalid_argument);
}

TEST(TriangleSum, BothSignsUpTo30) {
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t k = 0; k < n; ++k) {
      ASSERT_TRUE(check_weighted_triangle_sum(n, k, Sign::plus).holds) << n << "," << k;
      ASSERT_TRUE(check_weighted_triangle_sum(n, k, Sign::minus).holds) << n << "," << k;
    }
  }
}

TEST(ChuVandermonde, Examples) {
  for (std::int64_t j = 0; j <= 5; ++j) EXPECT_EQ(as_int(check_chu_vandermonde(0, j).lhs), 1);
  EXPECT_EQ(as_int(check_chu_vandermonde(1, 2).lhs), -1);
  EXPECT_EQ(as_int(check_chu_vandermonde(2, 1).lhs), 1);
  for (std::int64_t i = 0; i <= 20; ++i)
    for (std::int64_t j = 0; j <= 20; ++j) ASSERT_TRUE(check_chu_vandermonde(i, j).holds);
}

TEST(SquareFormulaPoly, Examples) {
  EXPECT_TRUE(check_square_formula_poly(0).holds);
  const auto v = check_square_formula_poly(2);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(std::get<IntPolynomial>(v.lhs).degree(), 4);
  EXPECT_TRUE(check_square_formula_poly(15).holds);
}

TEST(Zeil, Anchors) {
  EXPECT_EQ(zeil_lhs(0), 1);
  EXPECT_EQ(zeil_rhs(0), 1);
  EXPECT_EQ(zeil_lhs(1), 4);
  EXPECT_EQ(zeil_rhs(1), 4);
  EXPECT_EQ(zeil_lhs(2), 20);
  EXPECT_EQ(zeil_rhs(2), 20);
  EXPECT_TRUE(check_zeil(2).holds);
}

TEST(Zeil, RhsMatchesLiteralSum) {
  // The rhs skips k < n/2 where C(k, n-k) = 0; compare with the full sum.
  const oracle::Binomials c(200);
  for (std::int64_t n = 0; n <= 60; ++n) {
    mpz_class s = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
      mpz_class t = c(2 * k, k) * c(2 * k, k) * c(k, n - k);
      for (std::int64_t r = 0; r < n - k; ++r) t *= -4;
      s += t;
    }
    ASSERT_EQ(zeil_rhs(n), s) << n;
  }
}

TEST(Zeil, Recurrence) {
  EXPECT_TRUE(check_zeil_recurrence(ZeilSide::lhs, 0));
  EXPECT_TRUE(check_zeil_recurrence(ZeilSide::rhs, 0));
  EXPECT_TRUE(check_zeil_recurrence(ZeilSide::lhs, 10));
  EXPECT_EQ(zeil_recurrence_residual(1, 4, 20, 0), 0);
  // A perturbed sequence must fail.
  EXPECT_NE(zeil_recurrence_residual(1, 4, 21, 0), 0);
}

TEST(IdentitySuite, SortedAndAllHold) {
  const auto verdicts = run_identity_suite(IdentityBounds::uniform(6), 3);
  ASSERT_FALSE(verdicts.empty());
  EXPECT_TRUE(std::is_sorted(verdicts.begin(), verdicts.end()));
  for (const auto& v : verdicts) EXPECT_TRUE(v.holds) << to_string(v.id);
  // 4 power-sum families x 6, from_gz sum_{l<=6}(l+1)^2, triangles 2*sum n, chu 7^2,
  // squares 7, zeil 7, recurrences 2*5.
  EXPECT_EQ(verdicts.size(), 24U + 140U + 42U + 49U + 7U + 7U + 10U);
  const auto again = run_identity_suite(IdentityBounds::uniform(6), 1);
  ASSERT_EQ(again.size(), verdicts.size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    EXPECT_EQ(again[i].id, verdicts[i].id);
    EXPECT_TRUE(again[i].params == verdicts[i].params);
  }
}
