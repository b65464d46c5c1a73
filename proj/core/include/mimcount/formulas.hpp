#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mimcount/bigint.hpp"

namespace mimcount {

/// Certified bracket lo <= value <= hi. `exact` is present iff the value is
/// an integer, in which case lo == hi == exact.
struct BoundValue {
  Rational lo;
  Rational hi;
  std::optional<BigInt> exact;

  bool is_rational() const { return lo == hi; }
};

/// Default bracket width. Counts are integers, so anything below 1/2
/// separates them from an irrational bound; 1/4 leaves room.
inline const Rational kDefaultResolution{1, 4};

/// Finite sum of terms coef * radicand^(1/5) with rational coefficients and
/// fifth-power-free integer radicands, so distinct radicands are linearly
/// independent and a sum with no radicand other than 1 is rational. Every
/// closed form used here (powers 10^(k/5), 6^(k/5) and their products) lives
/// in this class, and all comparisons reduce to integer fifth roots.
class RadicalExpr {
 public:
  struct Term {
    Rational coef;
    BigInt radicand{1};
  };

  RadicalExpr() = default;

  static RadicalExpr constant(const Rational& c);
  /// coef * base^(k/5); k may be negative.
  static RadicalExpr power(long base, long k, const Rational& coef = 1);

  RadicalExpr& operator+=(const RadicalExpr& o);
  RadicalExpr& operator-=(const RadicalExpr& o);
  RadicalExpr& operator*=(const Rational& c);
  friend RadicalExpr operator+(RadicalExpr a, const RadicalExpr& b) { return a += b; }
  friend RadicalExpr operator-(RadicalExpr a, const RadicalExpr& b) { return a -= b; }
  friend RadicalExpr operator*(RadicalExpr a, const Rational& c) { return a *= c; }
  friend RadicalExpr operator*(const Rational& c, RadicalExpr a) { return a *= c; }
  friend RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b);

  const std::vector<Term>& terms() const { return terms_; }
  /// Rational value when no irrational term survives normalisation.
  std::optional<Rational> rational_value() const;

  /// Bracket of width at most `resolution`.
  BoundValue bracket(const Rational& resolution = kDefaultResolution) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// floor(x^(1/5)) for x >= 0.
BigInt integer_fifth_root(const BigInt& x);

BigInt choose2(long n);

// Closed forms as expressions.
RadicalExpr f_expr(long n);            // n >= 1
RadicalExpr g_expr(long n);            // 10^(n/5), any integer n
RadicalExpr f1_expr(long n);           // n >= 14
RadicalExpr conjecture_expr(long n);   // I(n), n >= 1
RadicalExpr p_expr(long x, long n);    // (x-1) g(n-1-x) + g(n-2-x), 2 <= x <= n-2

BoundValue eval_f(long n, const Rational& resolution = kDefaultResolution);
BoundValue eval_g(long n, const Rational& resolution = kDefaultResolution);
BoundValue eval_f1(long n, const Rational& resolution = kDefaultResolution);
BoundValue eval_conjecture_I(long n, const Rational& resolution = kDefaultResolution);
BoundValue eval_p(long x, long n, const Rational& resolution = kDefaultResolution);
/// Bound for all (not necessarily connected) graphs of order n >= 8.
BigInt eval_q(long n);

enum class Verdict { StrictlyBelow, AtExactBound, Above, Unresolved };
std::string to_string(Verdict v);

/// Unresolved only when lo < count < hi and the bound is not an integer.
Verdict compare_count(const BigInt& count, const BoundValue& bound);
/// Halves the bracket width up to `refinements` times while unresolved.
Verdict compare_count(const BigInt& count, const RadicalExpr& bound, int refinements = 8,
                      const Rational& resolution = kDefaultResolution);

enum class Sign { Negative, Zero, Positive, Unresolved };
std::string to_string(Sign s);
/// Sign of an expression, refining the bracket until it excludes zero.
Sign certified_sign(const RadicalExpr& e, int max_refinements = 64);

enum class Relation { Less, LessEqual, Equal };

/// One certified instance of an inequality between closed forms.
struct InequalityCheck {
  std::string family;  // e.g. "ratio<0.9510", "pendant-a", "f1-recurrence"
  long n = 0;
  long param = 0;      // r, x or t depending on the family; 0 when unused
  long param2 = 0;     // s for the f1 recurrences
  Relation relation = Relation::Less;
  Sign sign = Sign::Unresolved;  // sign of lhs - rhs
  bool holds = false;
};

struct LedgerOptions {
  long ratio_max = 200;
  long inequality_max = 100;
  long p_min = 10;
  long p_max = 50;
};

/// Every numeric inequality the extremal argument relies on, each decided
/// by bracket arithmetic: f/g ratio bounds, the four pendant-clique
/// inequality families, the f1 recurrences, the maximality of p(3), and the
/// agreement of I(n) with f(n) where their definitions coincide.
std::vector<InequalityCheck> formula_ledger(const LedgerOptions& options = {});

/// lo rounded down / hi rounded up to `digits` decimal places.
std::string decimal_floor(const Rational& x, int digits);
std::string decimal_ceil(const Rational& x, int digits);

}  // namespace mimcount
