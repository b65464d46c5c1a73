#include <gtest/gtest.h>

#include <cmath>

#include "mimcount/errors.hpp"
#include "mimcount/formulas.hpp"

namespace mimcount {
namespace {

BigInt exact(const BoundValue& b) {
  EXPECT_TRUE(b.exact.has_value());
  return b.exact.value_or(-1);
}

long double approx(const Rational& r) {
  return static_cast<long double>(numerator(r)) / static_cast<long double>(denominator(r));
}

TEST(Formulas, FifthRoot) {
  for (std::int64_t x = 0; x < 5000; ++x) {
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) * (r + 1) * (r + 1) * (r + 1) <= x) ++r;
    ASSERT_EQ(integer_fifth_root(x), r) << x;
  }
  const BigInt big = pow(BigInt(10), 100);
  EXPECT_EQ(integer_fifth_root(big), pow(BigInt(10), 20));
  EXPECT_EQ(integer_fifth_root(big - 1), pow(BigInt(10), 20) - 1);
}

TEST(Formulas, IntegerValues) {
  EXPECT_EQ(exact(eval_f(1)), 0);
  EXPECT_EQ(exact(eval_f(2)), 1);
  EXPECT_EQ(exact(eval_f(8)), 28);
  EXPECT_EQ(exact(eval_f(9)), 49);
  EXPECT_EQ(exact(eval_f(31)), 1046656);
  EXPECT_EQ(exact(eval_g(0)), 1);
  EXPECT_EQ(exact(eval_g(5)), 10);
  EXPECT_THROW(eval_g(-1), DomainError);
}

TEST(Formulas, QValues) {
  EXPECT_EQ(eval_q(8), 36);
  EXPECT_EQ(eval_q(9), 60);
  EXPECT_EQ(eval_q(10), 100);
  EXPECT_THROW(eval_q(7), DomainError);
}

TEST(Formulas, ConjectureValues) {
  EXPECT_EQ(exact(eval_conjecture_I(8)), 28);
  EXPECT_EQ(exact(eval_conjecture_I(16)), 1192);
  EXPECT_EQ(exact(eval_conjecture_I(20)), 6972);
}

TEST(Formulas, F1) {
  EXPECT_EQ(exact(eval_f1(16)), 192);
  EXPECT_THROW(eval_f1(13), DomainError);
}

TEST(Formulas, DomainErrors) {
  EXPECT_THROW(eval_f(0), DomainError);
  EXPECT_THROW(eval_p(1, 10), DomainError);
  EXPECT_THROW(eval_p(9, 10), DomainError);
}

TEST(Formulas, BracketsAreSoundAndNarrow) {
  for (long n = 1; n <= 80; ++n) {
    const BoundValue b = eval_f(n);
    EXPECT_LE(b.lo, b.hi);
    EXPECT_LE(b.hi - b.lo, kDefaultResolution) << n;
    const long double x = approx((b.lo + b.hi) / 2);
    const long double ref = std::pow(10.0L, n / 5.0L);
    // Loose cross-check against floating point: from n = 3 on, f(n) stays
    // within a small factor of g(n).
    if (n < 3) continue;
    EXPECT_GT(x, 0.4L * ref) << n;
    EXPECT_LT(x, 1.01L * ref) << n;
  }
}

TEST(Formulas, GBracketBracketsFloatingPoint) {
  for (long n = -10; n <= 60; ++n) {
    const BoundValue b = g_expr(n).bracket(Rational(1, 1000000));
    const long double ref = std::pow(10.0L, n / 5.0L);
    const long double tol = 1e-12L * ref + 1e-15L;
    EXPECT_LE(approx(b.lo), ref + tol) << n;
    EXPECT_GE(approx(b.hi), ref - tol) << n;
    EXPECT_EQ(b.exact.has_value(), n >= 0 && n % 5 == 0) << n;
  }
}

TEST(Formulas, SumBracketMatchesLongDouble) {
  const RadicalExpr e = RadicalExpr::power(10, 3) + RadicalExpr::power(6, 7, Rational(-2, 3)) +
                        RadicalExpr::constant(Rational(5, 2));
  const long double ref = std::pow(10.0L, 0.6L) - (2.0L / 3) * std::pow(6.0L, 1.4L) + 2.5L;
  const BoundValue b = e.bracket(Rational(1, 1 << 20));
  EXPECT_LE(approx(b.lo), ref + 1e-12L);
  EXPECT_GE(approx(b.hi), ref - 1e-12L);
  EXPECT_LE(b.hi - b.lo, Rational(1, 1 << 20));
}

TEST(Formulas, RadicalNormalisation) {
  // 10^(7/5) = 10 * 10^(2/5); 32^(1/5) = 2.
  const RadicalExpr a = RadicalExpr::power(10, 7);
  ASSERT_EQ(a.terms().size(), 1u);
  EXPECT_EQ(a.terms()[0].coef, 10);
  EXPECT_EQ(a.terms()[0].radicand, 100);
  EXPECT_EQ(RadicalExpr::power(2, 5).rational_value(), Rational(2));
  EXPECT_EQ(RadicalExpr::power(10, -5).rational_value(), Rational(1, 10));

  const RadicalExpr cancel = RadicalExpr::power(10, 2) - RadicalExpr::power(10, 2);
  EXPECT_TRUE(cancel.terms().empty());
  EXPECT_EQ(cancel.rational_value(), Rational(0));

  // 10^(2/5) * 10^(3/5) = 10.
  EXPECT_EQ((RadicalExpr::power(10, 2) * RadicalExpr::power(10, 3)).rational_value(), Rational(10));
}

TEST(Formulas, CompareCount) {
  EXPECT_EQ(compare_count(28, eval_f(8)), Verdict::AtExactBound);
  EXPECT_EQ(compare_count(27, eval_f(8)), Verdict::StrictlyBelow);
  EXPECT_EQ(compare_count(29, eval_f(8)), Verdict::Above);
  // f(14) lies strictly between 490 and 491.
  EXPECT_EQ(compare_count(490, f_expr(14)), Verdict::StrictlyBelow);
  EXPECT_EQ(compare_count(491, f_expr(14)), Verdict::Above);
  BoundValue wide{Rational(10), Rational(12), std::nullopt};
  EXPECT_EQ(compare_count(11, wide), Verdict::Unresolved);
  EXPECT_EQ(compare_count(12, wide), Verdict::Above);
  EXPECT_EQ(compare_count(10, wide), Verdict::StrictlyBelow);
}

TEST(Formulas, CertifiedSign) {
  EXPECT_EQ(certified_sign(RadicalExpr::power(10, 1) - RadicalExpr::constant(1)), Sign::Positive);
  EXPECT_EQ(certified_sign(RadicalExpr::constant(Rational(-1, 3))), Sign::Negative);
  EXPECT_EQ(certified_sign(RadicalExpr{}), Sign::Zero);
  // 2^(1/5) vs 1.148698354997035: differs only in the 16th digit.
  const RadicalExpr close = RadicalExpr::power(2, 1) - RadicalExpr::constant(Rational(1148698354997035, 1000000000000000));
  EXPECT_EQ(certified_sign(close), Sign::Positive);
}

TEST(Formulas, PIsMaximisedAtThree) {
  const BoundValue p3 = eval_p(3, 20);
  EXPECT_LT(eval_p(2, 20).hi, p3.lo);
  EXPECT_LT(eval_p(4, 20).hi, p3.lo);
}

TEST(Formulas, Choose2) {
  EXPECT_EQ(choose2(0), 0);
  EXPECT_EQ(choose2(1), 0);
  EXPECT_EQ(choose2(8), 28);
}

TEST(Formulas, DecimalFormatting) {
  EXPECT_EQ(decimal_floor(Rational(1, 3), 3), "0.333");
  EXPECT_EQ(decimal_ceil(Rational(1, 3), 3), "0.334");
  EXPECT_EQ(decimal_floor(Rational(-1, 3), 2), "-0.34");
  EXPECT_EQ(decimal_ceil(Rational(7), 2), "7.00");
}

TEST(Formulas, LedgerHolds) {
  LedgerOptions o;
  o.ratio_max = 60;
  o.inequality_max = 40;
  o.p_max = 30;
  const auto ledger = formula_ledger(o);
  EXPECT_GT(ledger.size(), 100u);
  for (const InequalityCheck& c : ledger)
    EXPECT_TRUE(c.holds) << c.family << " n=" << c.n << " param=" << c.param << " param2=" << c.param2;
}

}  // namespace
}  // namespace mimcount
