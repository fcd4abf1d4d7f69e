#include <gtest/gtest.h>

#include "riley/bipoly.hpp"
#include "riley/laurent.hpp"
#include "riley/polynomial.hpp"
#include "test_support.hpp"

namespace riley {
namespace {

using testing::bipoly;
using testing::Gen;
using testing::poly;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational(" -6/4 "), Rational(-3, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(parse_rational("-8")), "-8");
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "3/", "/3", "--1"}) {
    EXPECT_THROW(parse_rational(bad), AlgebraError) << bad;
  }
}

TEST(Rational, AlwaysReduced) {
  const Rational r = parse_rational("-12/18");
  EXPECT_EQ(r.get_num(), -2);
  EXPECT_EQ(r.get_den(), 3);
}

TEST(UniPoly, RingExamples) {
  EXPECT_EQ(poly({1, 1}) * poly({-1, 1}), poly({-1, 0, 1}));
  const UniPoly p = poly({3, -3, 1});
  EXPECT_EQ(p + UniPoly{}, p);
  EXPECT_EQ(poly({3, -3, 1}) + poly({-3, 3}), poly({0, 0, 1}));
  EXPECT_EQ(-p, poly({-3, 3, -1}));
}

TEST(UniPoly, TrimmedCanonicalForm) {
  const UniPoly p(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_TRUE((poly({1, 2}) - poly({1, 2})).is_zero());
  EXPECT_EQ((poly({1, 2}) - poly({1, 2})).degree(), -1);
  EXPECT_TRUE(UniPoly::constant(0).is_zero());
}

TEST(UniPoly, DivRemExamples) {
  auto [q1, r1] = divrem(poly({-1, 0, 1}), poly({-1, 1}));
  EXPECT_EQ(q1, poly({1, 1}));
  EXPECT_TRUE(r1.is_zero());

  auto [q2, r2] = divrem(poly({0, 0, 1}), poly({1, 1}));
  EXPECT_EQ(q2, poly({-1, 1}));
  EXPECT_EQ(r2, poly({1}));

  auto [q3, r3] = divrem(poly({5}), poly({0, 1}));
  EXPECT_TRUE(q3.is_zero());
  EXPECT_EQ(r3, poly({5}));

  EXPECT_THROW(divrem(poly({1, 1}), UniPoly{}), AlgebraError);
}

TEST(UniPoly, GcdExamples) {
  EXPECT_EQ(gcd(poly({-1, 0, 1}), poly({-1, 1})), poly({-1, 1}));
  EXPECT_EQ(gcd(poly({4, 2}), UniPoly{}), poly({2, 1}));
  EXPECT_EQ(gcd(poly({1, 0, 1}), poly({-1, 0, 1})), poly({1}));
  EXPECT_THROW(gcd(UniPoly{}, UniPoly{}), AlgebraError);
}

TEST(UniPoly, SquarefreeExamples) {
  EXPECT_EQ(squarefree_part(poly({1, -2, 1})), poly({-1, 1}));
  EXPECT_EQ(squarefree_part(poly({3, -3, 1})), poly({3, -3, 1}));
  // (y-1)^2 (y-2) = y^3 - 4y^2 + 5y - 2
  EXPECT_EQ(squarefree_part(poly({-2, 5, -4, 1})), poly({2, -3, 1}));
  EXPECT_THROW(squarefree_part(UniPoly{}), AlgebraError);
}

TEST(UniPoly, EvalExamples) {
  EXPECT_EQ(eval(poly({3, -3, 1}), Rational(2)), 1);
  EXPECT_EQ(eval(poly({0, 1, 1}), Rational(1, 2)), Rational(3, 4));
}

TEST(BiPoly, EvalAndCompose) {
  // x^2 - 1 - y at x = 2 is 3 - y.
  const BiPoly trefoil = bipoly({{-1, 0, 1}, {-1}});
  EXPECT_EQ(eval_bi(trefoil, Rational(2)), poly({3, -1}));

  const BiPoly y_plus_one = BiPoly::y() + BiPoly::constant(1);
  EXPECT_EQ(compose(poly({0, 0, 1}), y_plus_one), bipoly({{1}, {2}, {1}}));

  const BiPoly x2 = BiPoly::x() * BiPoly::x();
  const BiPoly t = BiPoly::constant(2) + (BiPoly::y() - BiPoly::constant(2)) * (BiPoly::y() + BiPoly::constant(2) - x2);
  EXPECT_EQ(compose(poly({0, 1}), t), t);
}

TEST(BiPoly, SubstituteY) {
  // (x^2 - 1 - y) with y := x^2 - 2 gives 1.
  const BiPoly trefoil = bipoly({{-1, 0, 1}, {-1}});
  EXPECT_EQ(substitute_y(trefoil, poly({-2, 0, 1})), poly({1}));
  EXPECT_EQ(eval_y(trefoil, Rational(2)), poly({-3, 0, 1}));
}

TEST(SymLaurent, SymmetrizeExamples) {
  const UniPoly one = poly({1});
  const SymLaurent x_form = SymLaurent::monomial(1, one) + SymLaurent::monomial(-1, one);
  EXPECT_EQ(symmetrize_to_xy(x_form), BiPoly::x());

  const Rational c(7, 3);
  const SymLaurent second = SymLaurent::monomial(2, one) + SymLaurent::constant(c) + SymLaurent::monomial(-2, one);
  const BiPoly expected = BiPoly::x() * BiPoly::x() + BiPoly::constant(c - 2);
  EXPECT_EQ(symmetrize_to_xy(second), expected);

  EXPECT_EQ(symmetrize_to_xy(SymLaurent::monomial(0, poly({0, 1}))), BiPoly::y());
}

TEST(SymLaurent, AsymmetricInputReportsExponent) {
  const SymLaurent f = SymLaurent::monomial(3, poly({1})) + SymLaurent::monomial(-3, poly({2}));
  try {
    (void)symmetrize_to_xy(f);
    FAIL() << "expected SymmetryError";
  } catch (const SymmetryError& e) {
    EXPECT_EQ(e.exponent(), 3);
  }
}

TEST(SymLaurent, NoZeroTermsStored) {
  const SymLaurent a = SymLaurent::monomial(2, poly({1, 1}));
  const SymLaurent diff = a - a;
  EXPECT_TRUE(diff.is_zero());
  EXPECT_EQ(diff, SymLaurent{});
}

TEST(SymLaurent, EvalAtPoint) {
  // (s^2 + s^-2) y at s = 2: (4 + 1/4) y.
  const SymLaurent f = SymLaurent::monomial(2, poly({0, 1})) + SymLaurent::monomial(-2, poly({0, 1}));
  EXPECT_EQ(eval_s(f, Rational(2)), UniPoly({Rational(0), Rational(17, 4)}));
  EXPECT_THROW(eval_s(f, Rational(0)), AlgebraError);
}

// Property checks with seeded generators.

TEST(UniPolyProperty, RingAxioms) {
  Gen g(1234);
  for (int i = 0; i < 60; ++i) {
    const UniPoly a = g.uni(12), b = g.uni(12), c = g.uni(12);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(UniPolyProperty, DivRemIdentity) {
  Gen g(99);
  for (int i = 0; i < 60; ++i) {
    const UniPoly a = g.uni(12);
    UniPoly b = g.uni(6);
    if (b.is_zero()) continue;
    auto [q, r] = divrem(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(UniPolyProperty, GcdContainsCommonFactor) {
  Gen g(7);
  for (int i = 0; i < 40; ++i) {
    const UniPoly a = g.uni(5, true), b = g.uni(5, true), common = g.uni(4, true);
    if (common.is_zero() || (a.is_zero() && b.is_zero())) continue;
    const UniPoly d = gcd(a * common, b * common);
    EXPECT_TRUE(divrem(d, monic(common)).second.is_zero());
  }
}

TEST(UniPolyProperty, SquarefreeCoprimeWithDerivative) {
  Gen g(21);
  for (int i = 0; i < 40; ++i) {
    const UniPoly a = g.uni(4, true), b = g.uni(3, true);
    if (a.is_zero() || b.is_zero()) continue;
    const UniPoly f = a * a * b;
    const UniPoly sf = squarefree_part(f);
    if (sf.degree() < 1) continue;
    EXPECT_EQ(gcd(sf, derivative(sf)), poly({1}));
  }
}

TEST(SymLaurentProperty, SymmetrizeIsMultiplicative) {
  Gen g(5);
  auto random_symmetric = [&g]() {
    SymLaurent f;
    const int top = static_cast<int>(g.integer(0, 4));
    for (int e = 0; e <= top; ++e) {
      const UniPoly c = g.uni(3, true);
      f += SymLaurent::monomial(e, c);
      if (e != 0) f += SymLaurent::monomial(-e, c);
    }
    return f;
  };
  for (int i = 0; i < 30; ++i) {
    const SymLaurent f = random_symmetric(), h = random_symmetric();
    EXPECT_EQ(symmetrize_to_xy(f * h), symmetrize_to_xy(f) * symmetrize_to_xy(h));
    EXPECT_EQ(symmetrize_to_xy(f + h), symmetrize_to_xy(f) + symmetrize_to_xy(h));
  }
}

}  // namespace
}  // namespace riley
