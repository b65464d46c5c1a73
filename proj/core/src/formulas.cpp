#include "mimcount/formulas.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "mimcount/errors.hpp"

namespace mimcount {

namespace {

BigInt pow_int(long base, long k) {
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r *= base;
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt floor_of(const Rational& x) {
  return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

BigInt ceil_of(const Rational& x) { return -floor_of(-x); }

Rational abs_of(const Rational& x) { return x < 0 ? Rational(-x) : x; }

std::optional<BigInt> as_integer(const Rational& x) {
  if (boost::multiprecision::denominator(x) != 1) return std::nullopt;
  return BigInt(boost::multiprecision::numerator(x));
}

BoundValue exact_bound(const Rational& v) { return {v, v, as_integer(v)}; }

long floor_div5(long k) { return k >= 0 ? k / 5 : -((-k + 4) / 5); }

}  // namespace

BigInt integer_fifth_root(const BigInt& x) {
  if (x < 0) throw DomainError("fifth root of a negative number");
  if (x < 2) return x;
  // Newton from above: start at a power of two >= the root.
  const auto bits = boost::multiprecision::msb(x) + 1;
  BigInt r = BigInt(1) << ((bits + 4) / 5);
  while (true) {
    BigInt r4 = r * r * r * r;
    BigInt next = (4 * r + x / r4) / 5;
    if (next >= r) break;
    r = next;
  }
  while (r * r * r * r * r > x) --r;
  while ((r + 1) * (r + 1) * (r + 1) * (r + 1) * (r + 1) <= x) ++r;
  return r;
}

BigInt choose2(long n) {
  if (n < 2) return 0;
  return BigInt(n) * (n - 1) / 2;
}

RadicalExpr RadicalExpr::constant(const Rational& c) {
  RadicalExpr e;
  e.terms_.push_back({c, 1});
  e.normalize();
  return e;
}

RadicalExpr RadicalExpr::power(long base, long k, const Rational& coef) {
  if (base <= 0) throw DomainError("radical base must be positive");
  const long whole = floor_div5(k);
  const long rest = k - 5 * whole;
  Rational c = coef;
  if (whole >= 0) c *= Rational(pow_int(base, whole));
  else c /= Rational(pow_int(base, -whole));
  RadicalExpr e;
  e.terms_.push_back({c, pow_int(base, rest)});
  e.normalize();
  return e;
}

void RadicalExpr::normalize() {
  static constexpr std::array<long, 8> kPrimes{2, 3, 5, 7, 11, 13, 17, 19};
  std::map<BigInt, Rational> merged;
  for (Term& t : terms_) {
    if (t.coef == 0) continue;
    BigInt rad = t.radicand;
    Rational coef = t.coef;
    for (long p : kPrimes) {
      const BigInt p5 = pow_int(p, 5);
      while (rad % p5 == 0) {
        rad /= p5;
        coef *= p;
      }
    }
    const BigInt root = integer_fifth_root(rad);
    if (root * root * root * root * root == rad) {
      coef *= Rational(root);
      rad = 1;
    }
    merged[rad] += coef;
  }
  terms_.clear();
  for (auto& [rad, coef] : merged)
    if (coef != 0) terms_.push_back({coef, rad});
}

RadicalExpr& RadicalExpr::operator+=(const RadicalExpr& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

RadicalExpr& RadicalExpr::operator-=(const RadicalExpr& o) {
  for (const Term& t : o.terms_) terms_.push_back({-t.coef, t.radicand});
  normalize();
  return *this;
}

RadicalExpr& RadicalExpr::operator*=(const Rational& c) {
  for (Term& t : terms_) t.coef *= c;
  normalize();
  return *this;
}

RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b) {
  RadicalExpr r;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) r.terms_.push_back({x.coef * y.coef, x.radicand * y.radicand});
  r.normalize();
  return r;
}

std::optional<Rational> RadicalExpr::rational_value() const {
  Rational sum = 0;
  for (const Term& t : terms_) {
    if (t.radicand != 1) return std::nullopt;
    sum += t.coef;
  }
  return sum;
}

BoundValue RadicalExpr::bracket(const Rational& resolution) const {
  if (resolution <= 0) throw DomainError("bracket resolution must be positive");
  if (auto v = rational_value()) return exact_bound(*v);

  std::size_t irrational = 0;
  for (const Term& t : terms_)
    if (t.radicand != 1) ++irrational;
  const Rational per_term = resolution / static_cast<long>(irrational);

  Rational lo = 0;
  Rational hi = 0;
  for (const Term& t : terms_) {
    if (t.radicand == 1) {
      lo += t.coef;
      hi += t.coef;
      continue;
    }
    // radicand^(1/5) lies in [r, r+1] / 2^s with r = iroot5(radicand * 2^(5s))
    const Rational mag = abs_of(t.coef);
    unsigned s = 0;
    while (mag / Rational(BigInt(1) << s) > per_term) ++s;
    const BigInt r = integer_fifth_root(t.radicand << (5 * s));
    const Rational scale = Rational(BigInt(1) << s);
    const Rational a = t.coef * Rational(r) / scale;
    const Rational b = t.coef * Rational(r + 1) / scale;
    lo += std::min(a, b);
    hi += std::max(a, b);
  }
  return {lo, hi, std::nullopt};
}

RadicalExpr g_expr(long n) { return RadicalExpr::power(10, n); }

RadicalExpr f_expr(long n) {
  if (n < 1) throw DomainError("f(n) requires n >= 1");
  if (n <= 8) return RadicalExpr::constant(Rational(choose2(n)));
  if (n <= 13) {
    const long a = n / 2;
    const long b = n - a;
    return RadicalExpr::constant(Rational(choose2(a) * choose2(b) - BigInt(a - 1) * (b - 1) + 1));
  }
  return RadicalExpr::power(10, n - 1) + f1_expr(n);
}

RadicalExpr f1_expr(long n) {
  if (n < 14) throw DomainError("f1(n) requires n >= 14");
  const Rational coef = n <= 30 ? Rational(n + 144, 30) : Rational(n - 1, 5);
  return RadicalExpr::power(6, n - 6, coef);
}

RadicalExpr conjecture_expr(long n) {
  if (n < 1) throw DomainError("I(n) requires n >= 1");
  if (n <= 13) return f_expr(n);
  using R = Rational;
  switch (n % 5) {
    case 4:
      return RadicalExpr::power(10, n - 9, 36) +
             RadicalExpr::power(6, n - 14, n <= 44 ? R(3 * n + 363, 5) : R(9 * n + 99, 5));
    case 0:
      return RadicalExpr::power(10, n - 5, 6) +
             RadicalExpr::power(6, n - 10, n <= 50 ? R(n + 115, 5) : R(3 * n + 15, 5));
    case 1:
      return RadicalExpr::power(10, n - 1) +
             RadicalExpr::power(6, n - 6, n <= 30 ? R(n + 144, 30) : R(n - 1, 5));
    case 2:
      return RadicalExpr::power(10, n - 7, 15) +
             RadicalExpr::power(6, n - 12, n <= 32 ? R(n + 141, 3) : R(2 * n - 8));
    default:
      return RadicalExpr::power(10, n - 13, 225) +
             RadicalExpr::power(6, n - 13, n <= 33 ? R(5 * n + 690, 9) : R(10 * n - 70, 3));
  }
}

RadicalExpr p_expr(long x, long n) {
  if (x < 2 || x > n - 2) throw DomainError("p(x) requires 2 <= x <= n-2");
  return RadicalExpr::power(10, n - 1 - x, x - 1) + g_expr(n - 2 - x);
}

BoundValue eval_f(long n, const Rational& resolution) { return f_expr(n).bracket(resolution); }

BoundValue eval_g(long n, const Rational& resolution) {
  if (n < 0) throw DomainError("g(n) requires n >= 0");
  return g_expr(n).bracket(resolution);
}

BoundValue eval_f1(long n, const Rational& resolution) { return f1_expr(n).bracket(resolution); }

BoundValue eval_conjecture_I(long n, const Rational& resolution) {
  return conjecture_expr(n).bracket(resolution);
}

BoundValue eval_p(long x, long n, const Rational& resolution) { return p_expr(x, n).bracket(resolution); }

BigInt eval_q(long n) {
  if (n < 8) throw DomainError("q(n) requires n >= 8");
  const long t = n / 5;
  switch (n % 5) {
    case 0: return pow_int(10, t);
    case 1: return 15 * pow_int(10, t - 1);
    case 2: return 225 * pow_int(10, t - 2);
    case 3: return 36 * pow_int(10, t - 1);
    default: return 6 * pow_int(10, t);
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::StrictlyBelow: return "StrictlyBelow";
    case Verdict::AtExactBound: return "AtExactBound";
    case Verdict::Above: return "Above";
    case Verdict::Unresolved: return "Unresolved";
  }
  return "?";
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "positive";
    case Sign::Unresolved: return "unresolved";
  }
  return "?";
}

Verdict compare_count(const BigInt& count, const BoundValue& bound) {
  if (bound.exact) {
    if (count < *bound.exact) return Verdict::StrictlyBelow;
    if (count == *bound.exact) return Verdict::AtExactBound;
    return Verdict::Above;
  }
  // Without an exact value the bound is not an integer, so touching a bracket
  // end still decides the comparison strictly.
  const Rational c(count);
  if (c <= bound.lo) return Verdict::StrictlyBelow;
  if (c >= bound.hi) return Verdict::Above;
  return Verdict::Unresolved;
}

Verdict compare_count(const BigInt& count, const RadicalExpr& bound, int refinements,
                      const Rational& resolution) {
  Rational res = resolution;
  Verdict v = compare_count(count, bound.bracket(res));
  for (int i = 0; i < refinements && v == Verdict::Unresolved; ++i) {
    res /= 2;
    v = compare_count(count, bound.bracket(res));
  }
  return v;
}

Sign certified_sign(const RadicalExpr& e, int max_refinements) {
  if (auto v = e.rational_value()) {
    if (*v < 0) return Sign::Negative;
    if (*v > 0) return Sign::Positive;
    return Sign::Zero;
  }
  Rational res = 1;
  for (int i = 0; i <= max_refinements; ++i) {
    const BoundValue b = e.bracket(res);
    if (b.lo > 0) return Sign::Positive;
    if (b.hi < 0) return Sign::Negative;
    res /= 16;
  }
  return Sign::Unresolved;
}

namespace {

struct LedgerBuilder {
  std::vector<InequalityCheck> out;

  void add(std::string family, long n, long param, long param2, Relation rel, const RadicalExpr& lhs,
           const RadicalExpr& rhs) {
    InequalityCheck c;
    c.family = std::move(family);
    c.n = n;
    c.param = param;
    c.param2 = param2;
    c.relation = rel;
    c.sign = certified_sign(lhs - rhs);
    switch (rel) {
      case Relation::Less: c.holds = c.sign == Sign::Negative; break;
      case Relation::LessEqual: c.holds = c.sign == Sign::Negative || c.sign == Sign::Zero; break;
      case Relation::Equal: c.holds = c.sign == Sign::Zero; break;
    }
    out.push_back(std::move(c));
  }
};

}  // namespace

std::vector<InequalityCheck> formula_ledger(const LedgerOptions& o) {
  LedgerBuilder L;

  struct RatioFamily {
    long peak;
    Rational constant;
    Relation relation;
    bool (*applies)(long);
  };
  const RatioFamily ratios[] = {
      {4, Rational(9510, 10000), Relation::Less, [](long n) { return n != 5; }},
      {6, Rational(9465, 10000), Relation::Less, [](long n) { return n != 4 && n != 5; }},
      {10, Rational(85, 100), Relation::LessEqual, [](long n) { return n >= 7; }},
      {14, Rational(7778, 10000), Relation::Less, [](long n) { return n >= 13; }},
      {31, Rational(6604, 10000), Relation::Less, [](long n) { return n >= 31; }},
  };
  for (const RatioFamily& fam : ratios) {
    const std::string c = decimal_floor(fam.constant, 4);
    const std::string cmp = fam.relation == Relation::Less ? "<" : "<=";
    const RadicalExpr fk = f_expr(fam.peak);
    const RadicalExpr gk = g_expr(fam.peak);
    L.add("f(" + std::to_string(fam.peak) + ")/g(" + std::to_string(fam.peak) + ")" + cmp + c, fam.peak, 0,
          0, fam.relation, fk, fam.constant * gk);
    for (long n = 1; n <= o.ratio_max; ++n) {
      if (!fam.applies(n)) continue;
      const RadicalExpr fn = f_expr(n);
      const RadicalExpr gn = g_expr(n);
      L.add("f/g<=f(" + std::to_string(fam.peak) + ")/g(" + std::to_string(fam.peak) + ")", n, 0, 0,
            Relation::LessEqual, fn * gk, fk * gn);
      L.add("f/g" + cmp + c, n, 0, 0, fam.relation, fn, fam.constant * gn);
    }
  }

  const RadicalExpr f4_over_g4 = RadicalExpr::power(10, -4, 6);
  for (long n = 14; n <= o.inequality_max; ++n) {
    const RadicalExpr fn = f_expr(n);
    for (long r : {4L, 5L, 6L}) {
      const Rational c(choose2(r - 1));
      L.add("pendant-a", n, r, 0, Relation::Less,
            c * f_expr(n - r) + Rational(r - 1) * f_expr(n - r - 1) + g_expr(n - r - 2), fn);
      L.add("pendant-b", n, r, 0, Relation::Less,
            c * f_expr(n - r) + Rational(r) * g_expr(n - r - 2) + g_expr(n - r - 3), fn);
      if (r == 5) continue;
      L.add("pendant-c", n, r, 0, Relation::Less,
            c * f_expr(n - r) + Rational(r - 1) * g_expr(n - r - 1) + RadicalExpr::power(6, n - r - 1), fn);
      L.add("pendant-d", n, r, 0, Relation::Less,
            c * f_expr(n - r) + Rational(r - 1) * (f4_over_g4 * g_expr(n - r - 1)) + g_expr(n - r - 3), fn);
    }
  }

  for (long n = 14; n < o.inequality_max; ++n)
    L.add("f1-increasing", n, 0, 0, Relation::Less, f1_expr(n), f1_expr(n + 1));
  const std::pair<long, long> recurrences[] = {{1, 4}, {2, 6}, {3, 7}};
  for (long n = 14; n <= o.inequality_max; ++n) {
    for (auto [s, t_min] : recurrences) {
      for (long t = t_min; n - t >= 14; ++t)
        L.add("f1-recurrence", n, t, s, Relation::Less, f1_expr(n - 1) + Rational(s) * f1_expr(n - t),
              f1_expr(n));
    }
  }

  for (long n = o.p_min; n <= o.p_max; ++n) {
    const RadicalExpr p3 = p_expr(3, n);
    for (long x = 2; x <= n - 2; ++x)
      if (x != 3) L.add("p(x)<p(3)", n, x, 0, Relation::Less, p_expr(x, n), p3);
    for (long x = 3; x + 1 <= n - 2; ++x)
      L.add("p-decreasing", n, x, 0, Relation::Less, p_expr(x + 1, n), p_expr(x, n));
  }

  for (long n = 1; n <= o.ratio_max; ++n) {
    if (n <= 13 || n % 5 == 1)
      L.add("I=f", n, 0, 0, Relation::Equal, conjecture_expr(n), f_expr(n));
  }
  return std::move(L.out);
}

std::string decimal_floor(const Rational& x, int digits) {
  const BigInt scale = pow_int(10, digits);
  const BigInt v = floor_of(x * Rational(scale));
  const bool neg = v < 0;
  const BigInt a = neg ? BigInt(-v) : v;
  std::string whole = BigInt(a / scale).str();
  std::string frac = BigInt(a % scale).str();
  if (digits == 0) return (neg ? "-" : "") + whole;
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return (neg ? "-" : "") + whole + "." + frac;
}

std::string decimal_ceil(const Rational& x, int digits) {
  const BigInt scale = pow_int(10, digits);
  const Rational up(ceil_of(x * Rational(scale)), scale);
  return decimal_floor(up, digits);
}

}  // namespace mimcount
