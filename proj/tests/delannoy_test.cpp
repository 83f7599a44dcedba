#include <delannoy/delannoy.hpp>

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace delannoy;

TEST(DelannoyPoly, Examples) {
  EXPECT_EQ(delannoy_poly(0, 17), 1);
  EXPECT_EQ(delannoy_poly(0, -3), 1);
  EXPECT_EQ(delannoy_poly(2, 1), 13);
  EXPECT_EQ(delannoy_poly(4, 1), 321);
  EXPECT_EQ(delannoy_poly(1, -1), -1);
  EXPECT_THROW(delannoy_poly(-1, 1), std::invalid_argument);
}

TEST(DelannoyPoly, RecurrenceAgreesWithDefiningSum) {
  for (long x = -5; x <= 5; ++x) {
    const auto seq = delannoy_sequence(301, x);
    ASSERT_EQ(seq.size(), 301U);
    for (std::int64_t n = 0; n <= 300; ++n) {
      ASSERT_EQ(seq[n], delannoy_poly(n, x)) << "n=" << n << " x=" << x;
    }
  }
  EXPECT_EQ(delannoy_poly_recurrence(4, 1), 321);
  EXPECT_TRUE(delannoy_sequence(0, 3).empty());
}

TEST(DelannoyPoly, DefiningSumMatchesOracle) {
  const oracle::Binomials c(120);
  for (long x : {-7L, -2L, 0L, 3L, 11L}) {
    for (std::int64_t n = 0; n <= 60; ++n) ASSERT_EQ(delannoy_poly(n, x), oracle::delannoy(c, n, x));
  }
}

TEST(DelannoyPoly, ModularExamples) {
  EXPECT_EQ(delannoy_poly_mod(4, 1, PrimePower(5, 2)).value(), 21U);
  EXPECT_EQ(delannoy_poly_mod(3, 0, PrimePower(7, 1)).value(), 1U);
  EXPECT_EQ(delannoy_poly_mod(2, 1, PrimePower(3, 1)).value(), 1U);
}

TEST(DelannoyPoly, ModularAgreesWithExactReduction) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 13ULL}) {
    for (unsigned e = 1; e <= 3; ++e) {
      const PrimePower pp(p, e);
      for (long x = -5; x <= 5; ++x) {
        const auto seq = delannoy_sequence(301, x);
        // Every 7th n keeps the O(n^2) modular tables affordable.
        for (std::int64_t n = 0; n <= 300; n += 7) {
          ASSERT_EQ(delannoy_poly_mod(n, x, pp), Residue::reduce(seq[n], pp)) << n << "," << x << " mod " << pp.modulus();
        }
      }
    }
  }
}

TEST(DelannoyPoly, LegendreSpecializations) {
  const auto at_minus_one = delannoy_sequence(301, -1);
  const auto at_zero = delannoy_sequence(301, 0);
  for (std::int64_t n = 0; n <= 300; ++n) {
    ASSERT_EQ(at_minus_one[n], (n % 2 == 0) ? 1 : -1);
    ASSERT_EQ(at_zero[n], 1);
  }
}

TEST(CentralDelannoy, Examples) {
  EXPECT_EQ(central_delannoy(0), 1);
  EXPECT_EQ(central_delannoy(2), 13);
  EXPECT_EQ(central_delannoy(3), 63);
  for (std::int64_t n = 0; n <= 200; ++n) ASSERT_EQ(central_delannoy(n), delannoy_poly(n, 1)) << n;
}

TEST(PowerSum, Examples) {
  EXPECT_EQ(power_sum(5, 3, Sign::plus, 1), parse_int("299446845"));
  EXPECT_EQ(power_sum(5, 4, Sign::plus, 1), parse_int("95667442905"));
  EXPECT_EQ(power_sum(3, 4, Sign::minus, 1), 142563);
  EXPECT_EQ(power_sum(4, 2, Sign::plus, 1), 28656);
  for (unsigned m = 1; m <= 5; ++m) {
    for (long x : {-9L, 0L, 4L}) {
      EXPECT_EQ(power_sum(1, m, Sign::plus, x), 1);
      EXPECT_EQ(power_sum(1, m, Sign::minus, x), 1);
    }
  }
  EXPECT_THROW(power_sum(0, 1, Sign::plus, 1), std::invalid_argument);
  EXPECT_THROW(power_sum(1, 0, Sign::plus, 1), std::invalid_argument);
}

TEST(PowerSum, MatchesOracle) {
  const oracle::Binomials c(80);
  for (std::int64_t n : {1, 2, 7, 20, 40}) {
    for (unsigned m = 1; m <= 4; ++m) {
      for (long x : {-6L, -1L, 2L, 5L}) {
        ASSERT_EQ(power_sum(n, m, Sign::plus, x), oracle::power_sum(c, n, m, 1, x));
        ASSERT_EQ(power_sum(n, m, Sign::minus, x), oracle::power_sum(c, n, m, -1, x));
      }
    }
  }
}

TEST(PowerSum, TelescopesByOneTerm) {
  for (long x = -4; x <= 4; ++x) {
    const auto d = delannoy_sequence(40, x);
    for (unsigned m = 1; m <= 4; ++m) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        for (std::int64_t n = 1; n < 40; ++n) {
          ExactInt step = ExactInt(2 * n + 1) * pow(d[n], m);
          if (s == Sign::minus && (n & 1)) step = -step;
          ASSERT_EQ(power_sum(n + 1, m, s, x) - power_sum(n, m, s, x), step);
        }
      }
    }
  }
}

TEST(PowerSum, DivisibleByN) {
  for (std::int64_t n = 1; n <= 100; n += 3) {
    for (unsigned m = 1; m <= 6; ++m) {
      for (long x = -10; x <= 10; x += 3) {
        const ExactInt s = power_sum(n, m, Sign::plus, x);
        ASSERT_TRUE(mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(n))) << n << "," << m << "," << x;
      }
    }
  }
}

TEST(PowerSum, TermwiseModularPathAgreesWithExact) {
  for (std::uint64_t p : {3ULL, 5ULL, 11ULL, 29ULL}) {
    for (unsigned e = 1; e <= 4; ++e) {
      const PrimePower pp(p, e);
      for (long x = -3; x <= 3; ++x) {
        for (unsigned m : {1U, 3U, 4U}) {
          const auto n = static_cast<std::int64_t>(p);
          ASSERT_EQ(power_sum_mod(n, m, Sign::plus, x, pp), Residue::reduce(power_sum(n, m, Sign::plus, x), pp));
          ASSERT_EQ(power_sum_mod(n, m, Sign::minus, x, pp), Residue::reduce(power_sum(n, m, Sign::minus, x), pp));
        }
      }
    }
  }
}

TEST(SquareFormula, Examples) {
  EXPECT_EQ(square_formula_rhs(2, 1), 169);
  EXPECT_EQ(square_formula_rhs(1, -1), 1);
  for (std::int64_t n = 0; n < 10; ++n) EXPECT_EQ(square_formula_rhs(n, 0), 1);
}

TEST(SquareFormula, EqualsSquareOfDelannoy) {
  for (long x = -10; x <= 10; ++x) {
    const auto d = delannoy_sequence(101, x);
    for (std::int64_t n = 0; n <= 100; ++n) ASSERT_EQ(square_formula_rhs(n, x), d[n] * d[n]) << n << "," << x;
  }
}

TEST(DelannoyPolynomial, CoefficientsEvaluateToValues) {
  for (std::int64_t n = 0; n <= 30; ++n) {
    const IntPolynomial p = delannoy_polynomial(n);
    EXPECT_EQ(p.degree(), n);
    for (long x = -3; x <= 3; ++x) ASSERT_EQ(p.evaluate(x), delannoy_poly(n, x));
  }
}
