#include <gtest/gtest.h>

#include <map>

#include "gen.hpp"
#include "modular_gcd.hpp"
#include "trisum/factor.hpp"
#include "trisum/parse.hpp"
#include "trisum/partial_fractions.hpp"
#include "trisum/poly_gcd.hpp"

using namespace trisum;
using trisum::testing::Gen;
using trisum::testing::bit;

namespace {
MultiPoly P(const char* s) { return parse_expr(s).num(); }
}  // namespace

TEST(Parse, Examples) {
  RatFunc f = parse_expr("1/(y+z)");
  EXPECT_EQ(f.num(), MultiPoly(1));
  EXPECT_EQ(f.den(), P("y+z"));
  EXPECT_EQ(parse_expr("(x+y)^2 - x^2 - 2*x*y"), RatFunc(P("y^2")));
  EXPECT_EQ(parse_expr("1/(x+y+z^2)").den(), P("x+y+z^2"));
  EXPECT_EQ(parse_expr("3/6*x"), RatFunc(P("x") / Rational(2)));
  EXPECT_EQ(parse_expr("x/(2*y+4)").den(), P("y+2"));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_expr("2x"), ParseError);
  EXPECT_THROW(parse_expr("x^y"), ParseError);
  EXPECT_THROW(parse_expr("(x+1"), ParseError);
  EXPECT_THROW(parse_expr("x^2^3"), ParseError);
  EXPECT_THROW(parse_expr("1/(x-x)"), ParseError);
  EXPECT_THROW(parse_expr("w+1"), ParseError);
  try {
    parse_expr("x + * y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, FormatRoundTrip) {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    MultiPoly n = g.poly(7, 3, 4, 9);
    MultiPoly d = g.poly(7, 3, 3, 9);
    if (d.is_zero()) continue;
    Rational s(g.uniform(1, 5), g.uniform(1, 7));
    s.canonicalize();
    RatFunc f(n, d * s);
    EXPECT_EQ(parse_expr(f.to_string()), f) << f.to_string();
  }
}

TEST(Shift, Examples) {
  EXPECT_EQ(P("y^2+x+2*z").shifted(ShiftVector{1, -2, 1}), P("y^2+x-4*y+2*z+7"));
  MultiPoly p = P("x*y^3-z+5");
  EXPECT_EQ(p.shifted(ShiftVector{}), p);
  EXPECT_EQ(P("x+y+z^2").shifted(ShiftVector{1, 1, 0}), P("x+y+z^2+2"));
}

TEST(Shift, GroupActionLaw) {
  Gen g(1);
  for (int i = 0; i < 250; ++i) {
    RatFunc f(g.poly(7, 4, 5), g.poly_with(7, 7, 3, 3));
    ShiftVector a = g.shift(5), b = g.shift(5);
    EXPECT_EQ(f.shifted(a).shifted(b), f.shifted(a + b));
    EXPECT_EQ(f.shifted(a).shifted(-a), f);
  }
}

TEST(Gcd, Basics) {
  EXPECT_EQ(gcd(P("(x+y)*(x^2+z)*(y-z)"), P("(x+y)^2*(y-z)*(z+3)")), P("(x+y)*(y-z)"));
  EXPECT_EQ(gcd(P("6*x+6"), P("4*x+4")), P("x+1"));
  EXPECT_EQ(gcd(P("x^2+y"), P("z+1")), MultiPoly(1));
  EXPECT_EQ(content(P("x*y+x+x*z"), Y), P("x"));
}

TEST(Gcd, RandomCommonFactor) {
  Gen g(5);
  for (int i = 0; i < 100; ++i) {
    MultiPoly c = g.poly_with(7, 7, 2, 3);
    MultiPoly a = c * g.poly(7, 2, 3), b = c * g.poly(7, 2, 3);
    MultiPoly h = gcd(a, b);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_TRUE(divide_exact(a, h) && divide_exact(b, h));
    EXPECT_TRUE(divide_exact(h, c.normalized())) << c.to_string() << " / " << h.to_string();
  }
}

TEST(Gcd, ModularAgreesWithCofactors) {
  Gen g(8);
  int coprime = 0;
  for (int i = 0; i < 200; ++i) {
    MultiPoly c = g.poly_with(7, 7, 4, 5, 40);
    MultiPoly a = c * g.poly_with(7, 7, 4, 6, 40), b = c * g.poly_with(7, 7, 4, 6, 40);
    if (g.coin()) a *= c;
    auto h = detail::modular_gcd(a.normalized(), b.normalized());
    ASSERT_TRUE(h) << a.to_string() << " " << b.to_string();
    ASSERT_TRUE(divide_exact(a, *h) && divide_exact(b, *h));
    EXPECT_TRUE(divide_exact(*h, c.normalized()));
    MultiPoly ca = *divide_exact(a, *h), cb = *divide_exact(b, *h);
    auto one = detail::modular_gcd(ca.normalized(), cb.normalized());
    if (!ca.is_constant() && !cb.is_constant()) {
      ASSERT_TRUE(one);
      EXPECT_EQ(*one, MultiPoly(1)) << a.to_string() << " " << b.to_string();
      ++coprime;
    }
  }
  EXPECT_GT(coprime, 150);
  EXPECT_EQ(*detail::modular_gcd(P("(x+y)*(y^2+z)"), P("(y^2+z)*(x-2)")), P("y^2+z"));
}

TEST(Factor, Examples) {
  Factorization f = factor(P("(x+y)*((x+y)^2+z^2)"));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].poly, P("x+y"));
  EXPECT_EQ(f.factors[1].poly, P("x^2+2*x*y+y^2+z^2"));

  f = factor(P("6*x+6*y"));
  EXPECT_EQ(f.content, Rational(6));
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].poly, P("x+y"));

  f = factor(P("y^2+z^2"));
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].multiplicity, 1);

  f = factor(P("x^4+4"));
  ASSERT_EQ(f.factors.size(), 2u);
  f = factor(P("(x*y+z)^2*(y-z+1)"));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.expand(), P("(x*y+z)^2*(y-z+1)"));
}

// y^2 + z^2 is homogeneous, so any factorization has linear homogeneous
// factors and y^2+z^2 would vanish at y = t*z for a rational t. The rational
// root theorem applied to t^2 + 1 leaves only t = +-1, neither of which is a root.
TEST(Factor, SumOfSquaresIrreducibleOracle) {
  MultiPoly p = P("y^2+z^2");
  for (long t : {-1L, 1L}) EXPECT_NE(p.evaluate(Y, t).evaluate(Z, 1).constant_value(), 0);
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c) {
        MultiPoly l = MultiPoly(a) * MultiPoly::var(Y) + MultiPoly(b) * MultiPoly::var(Z) + MultiPoly(c);
        if (l.is_constant()) continue;
        EXPECT_FALSE(divide_exact(p, l));
      }
  EXPECT_EQ(factor(p).factors.size(), 1u);
}

TEST(Factor, Reconstruction) {
  Gen g(2);
  for (int i = 0; i < 220; ++i) {
    MultiPoly p(g.uniform(1, 6));
    int k = static_cast<int>(g.uniform(1, 3));
    for (int j = 0; j < k; ++j) {
      MultiPoly q = g.poly_with(7, 7, static_cast<unsigned>(g.uniform(1, 3)), 3);
      p *= q.pow(static_cast<unsigned>(g.uniform(1, 2)));
    }
    Factorization f = factor(p);
    EXPECT_EQ(f.expand(), p) << p.to_string();
    for (std::size_t a = 0; a < f.factors.size(); ++a) {
      EXPECT_EQ(f.factors[a].poly, f.factors[a].poly.normalized());
      for (std::size_t b = a + 1; b < f.factors.size(); ++b)
        EXPECT_TRUE(gcd(f.factors[a].poly, f.factors[b].poly).is_one()) << p.to_string();
    }
  }
}

TEST(Factor, SplitsKnownIrreducibles) {
  EXPECT_EQ(factor(P("(y^2+1)*(y^2+2*y+2)*(y^2+4)*(y^2+2*y+5)")).factors.size(), 4u);
  // Factors are linear forms or L^2 + c with L linear and c > 0, so each is
  // irreducible and the factor count is known in advance.
  Gen g(7);
  for (int i = 0; i < 220; ++i) {
    std::map<MultiPoly, int> want;
    MultiPoly p(1);
    int k = static_cast<int>(g.uniform(2, 4));
    for (int j = 0; j < k; ++j) {
      MultiPoly l;
      while (l.total_degree() < 1) l = g.poly(i % 2 ? 2 : 7, 1, 3, 2);
      MultiPoly q = g.coin() ? l : l * l + MultiPoly(g.uniform(1, 5));
      int e = static_cast<int>(g.uniform(1, 2));
      want[q.normalized()] += e;
      p *= q.pow(static_cast<unsigned>(e));
    }
    Factorization f = factor(p);
    std::map<MultiPoly, int> got;
    for (auto& fa : f.factors) got[fa.poly] += fa.multiplicity;
    EXPECT_EQ(got, want) << p.to_string();
  }
}

TEST(PartialFractions, Examples) {
  PartialFractions pf = partial_fractions(parse_expr("1/((y+z)*(y+z+1))"), Z);
  EXPECT_TRUE(pf.poly_part.is_zero());
  ASSERT_EQ(pf.terms.size(), 2u);
  EXPECT_EQ(pf.value(), parse_expr("1/((y+z)*(y+z+1))"));
  for (auto& t : pf.terms) {
    if (t.d == P("y+z")) EXPECT_EQ(t.a, RatFunc(1));
    else EXPECT_EQ(t.a, RatFunc(-1));
  }

  pf = partial_fractions(parse_expr("y^2+z"), Z);
  EXPECT_EQ(pf.poly_part, parse_expr("y^2+z"));
  EXPECT_TRUE(pf.terms.empty());

  pf = partial_fractions(parse_expr("(y+z)/(x+y+z^2)^2"), Z);
  ASSERT_EQ(pf.terms.size(), 1u);
  EXPECT_EQ(pf.terms[0].a, parse_expr("y+z"));
  EXPECT_EQ(pf.terms[0].d, P("x+y+z^2"));
  EXPECT_EQ(pf.terms[0].j, 2);
}

TEST(PartialFractions, Reconstruction) {
  Gen g(3);
  for (int i = 0; i < 220; ++i) {
    int var = g.coin() ? Z : Y;
    MultiPoly den(1);
    int k = static_cast<int>(g.uniform(1, 3));
    for (int j = 0; j < k; ++j) {
      MultiPoly q = g.poly_with(7, 6, static_cast<unsigned>(g.uniform(1, 2)), 3);
      den *= q.pow(static_cast<unsigned>(g.uniform(1, 2)));
    }
    RatFunc f(g.poly(7, 4, 5), den);
    PartialFractions pf = partial_fractions(f, var);
    EXPECT_EQ(pf.value(), f) << f.to_string();
    EXPECT_FALSE(pf.poly_part.den().contains(var));
    for (auto& t : pf.terms) {
      EXPECT_LT(t.a.num().degree(var), t.d.degree(var));
      EXPECT_FALSE(t.a.den().contains(var));
      EXPECT_EQ(factor(t.d).factors.size(), 1u);
    }
  }
}

TEST(PartialFractions, HintedFactors) {
  std::vector<MultiPoly> hints{P("y+z"), P("y^2+z^2")};
  RatFunc f = parse_expr("(x*z+1)/(x*(y+z)^2*(y^2+z^2))");
  PartialFractions pf = partial_fractions(f, Z, &hints);
  EXPECT_EQ(pf.value(), f);
  EXPECT_EQ(pf.terms.size(), 3u);
  std::vector<MultiPoly> bad{P("y+z"), P("(y+z)*(y-z)")};
  EXPECT_THROW(partial_fractions(parse_expr("1/((y+z)^2*(y-z))"), Z, &bad), std::invalid_argument);
}

TEST(IntegerLinear, Examples) {
  auto d = integer_linear_test(P("y+z"));
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, (ShiftVector{0, 1, 1}));
  EXPECT_FALSE(integer_linear_test(P("x+y+z^2")));
  EXPECT_FALSE(integer_linear_test(P("(x+y)^2+z^2")));
  d = integer_linear_test(P("(2*x-4*y+6*z)^3+7"));
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, (ShiftVector{1, -2, 3}));
  d = integer_linear_test(P("(-y/2+z/3)^2"));
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, (ShiftVector{0, 3, -2}));
  EXPECT_TRUE(is_proper(parse_expr("1/((x+y)*(y+z)^2)")));
  EXPECT_FALSE(is_proper(parse_expr("1/(x+y+z^2)")));
}

TEST(IntegerLinear, ShiftInvariant) {
  Gen g(4);
  for (int i = 0; i < 200; ++i) {
    MultiPoly p;
    if (g.coin()) {
      MultiPoly l = g.poly_with(7, 7, 1, 3);
      l -= MultiPoly(l.constant_term());
      p = l.pow(static_cast<unsigned>(g.uniform(1, 3))) + MultiPoly(g.uniform(-3, 3)) * l;
      if (p.is_constant()) continue;
      ASSERT_TRUE(integer_linear_test(p)) << p.to_string();
    } else {
      p = g.poly_with(7, 7, 3, 4);
    }
    EXPECT_EQ(integer_linear_test(p.shifted(g.shift(4))), integer_linear_test(p)) << p.to_string();
  }
}
