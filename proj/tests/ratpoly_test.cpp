#include "lucaskit/ratpoly.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace lucaskit {
namespace {

using testing::PolyGen;
using testing::X;
using testing::Y;

TEST(RationalTest, MakeRationalReduces) {
  Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(make_rational(0, 5).get_den(), 1);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(RationalTest, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(-2, 1), 0);
  EXPECT_EQ(binomial(100, 50), Integer("100891344545564193334812497256"));
  for (long a = 0; a <= 30; ++a) {
    for (long b = 1; b < a; ++b) {
      EXPECT_EQ(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b)) << a << " " << b;
    }
  }
}

TEST(RationalTest, Pow) {
  EXPECT_EQ(rational_pow(2, -1), make_rational(1, 2));
  EXPECT_EQ(rational_pow(make_rational(-2, 3), 3), make_rational(-8, 27));
  EXPECT_EQ(rational_pow(0, 0), 1);
  EXPECT_THROW(rational_pow(0, -2), std::domain_error);
}

TEST(RatPolyTest, Add) {
  EXPECT_EQ((X() + Y()) + (X() - Y()), X().scaled(2));
  const RatPoly p = RatPoly::monomial(3, 2, 1);
  EXPECT_EQ(p + RatPoly(), p);
  EXPECT_EQ((X().pow(2) + Y().scaled(2)) + (X().pow(2) + Y().scaled(4)), X().pow(2).scaled(2) + Y().scaled(6));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_TRUE((p - p).terms().empty());
}

TEST(RatPolyTest, Mul) {
  EXPECT_EQ(X() * Y(), RatPoly::monomial(1, 1, 1));
  EXPECT_EQ((X() + Y()) * (X() - Y()), X().pow(2) - Y().pow(2));
  EXPECT_TRUE((RatPoly() * (X() + 3)).is_zero());
}

TEST(RatPolyTest, Scale) {
  const RatPoly p = X().pow(2) + Y().scaled(2);
  EXPECT_EQ(p.scaled(make_rational(1, 2)), RatPoly::monomial(make_rational(1, 2), 2, 0) + Y());
  EXPECT_EQ(p.scaled(1), p);
  EXPECT_TRUE(p.scaled(0).is_zero());
}

TEST(RatPolyTest, Pow) {
  EXPECT_EQ((X().pow(2) + Y().scaled(4)).pow(0), RatPoly(1));
  EXPECT_EQ((X() + Y()).pow(2), X().pow(2) + (X() * Y()).scaled(2) + Y().pow(2));
  EXPECT_EQ(X().pow(3), RatPoly::monomial(1, 3, 0));
  EXPECT_EQ(RatPoly().pow(0), RatPoly(1));
  EXPECT_TRUE(RatPoly().pow(3).is_zero());
}

TEST(RatPolyTest, Subst) {
  const RatPoly p = X().pow(2) + Y();
  EXPECT_EQ(p.subst(X(), Y()), p);
  EXPECT_EQ(X().subst(X().pow(2) + Y().scaled(2), X() - 7), X().pow(2) + Y().scaled(2));
  // F_3(3x, y - 2x^2)
  EXPECT_EQ(p.subst(X().scaled(3), Y() - RatPoly::monomial(2, 2, 0)), RatPoly::monomial(7, 2, 0) + Y());
  EXPECT_TRUE(RatPoly().subst(X(), Y()).is_zero());
  EXPECT_EQ(RatPoly(5).subst(X(), Y()), RatPoly(5));
}

TEST(RatPolyTest, Eval) {
  EXPECT_EQ((X().pow(2) + Y().scaled(2)).eval(1, 1), 3);
  EXPECT_EQ(RatPoly().eval(make_rational(3, 7), -2), 0);
  EXPECT_EQ(X().eval(2, 1), 2);
}

TEST(RatPolyTest, Equal) {
  EXPECT_EQ(X() + Y(), Y() + X());
  EXPECT_NE(X(), Y());
  EXPECT_EQ((X() + Y()).pow(2), X().pow(2) + (X() * Y()).scaled(2) + Y().pow(2));
}

TEST(RatPolyTest, Render) {
  EXPECT_EQ(RatPoly().to_string(), "0");
  EXPECT_EQ((X().pow(2) + Y().scaled(2)).to_string(), "x^2 + 2*y");
  EXPECT_EQ((X().pow(3) + (X() * Y()).scaled(2)).to_string(), "x^3 + 2*x*y");
  EXPECT_EQ((-X() + RatPoly(-3)).to_string(), "-x - 3");
  EXPECT_EQ(RatPoly::monomial(make_rational(-1, 2), 1, 2).to_string(), "-1/2*x*y^2");
  EXPECT_EQ((Y().pow(3) + X()).to_string(), "x + y^3");
}

TEST(RatPolyTest, CanonicalOrderIsDescendingLex) {
  const RatPoly p = Y() + X() * Y() + RatPoly(1) + X().pow(2) + Y().pow(2);
  std::vector<Monomial> order;
  for (const auto& [m, c] : p.terms()) {
    order.push_back(m);
  }
  const std::vector<Monomial> expected{{2, 0}, {1, 1}, {0, 2}, {0, 1}, {0, 0}};
  EXPECT_EQ(order, expected);
  EXPECT_EQ(p.degree_x(), 2U);
  EXPECT_EQ(p.degree_y(), 2U);
}

TEST(RatPolyProperty, RingAxioms) {
  PolyGen gen(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    const RatPoly a = gen.poly();
    const RatPoly b = gen.poly();
    const RatPoly c = gen.poly();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a * RatPoly(1), a);
  }
}

TEST(RatPolyProperty, CanonicalForm) {
  PolyGen gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const RatPoly p = gen.poly() * gen.poly() - gen.poly();
    for (const auto& [m, c] : p.terms()) {
      ASSERT_NE(c, 0);
      ASSERT_GT(c.get_den(), 0);
    }
    // Rebuilding term by term is idempotent.
    RatPoly rebuilt;
    for (const auto& [m, c] : p.terms()) {
      rebuilt.add_term(m, c);
    }
    ASSERT_EQ(rebuilt, p);
  }
}

TEST(RatPolyProperty, EqualityMatchesZeroDifference) {
  PolyGen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const RatPoly a = gen.poly(2);
    const RatPoly b = gen.poly(2);
    ASSERT_EQ(a == b, (a - b).is_zero());
  }
}

TEST(RatPolyProperty, IdentitySubstitution) {
  PolyGen gen(3);
  for (int trial = 0; trial < 100; ++trial) {
    const RatPoly p = gen.poly();
    ASSERT_EQ(p.subst(X(), Y()), p);
  }
}

TEST(RatPolyProperty, SubstIsAHomomorphism) {
  PolyGen gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    const RatPoly a = gen.poly(4);
    const RatPoly b = gen.poly(4);
    const RatPoly px = gen.poly(3);
    const RatPoly py = gen.poly(3);
    ASSERT_EQ((a * b).subst(px, py), a.subst(px, py) * b.subst(px, py));
    ASSERT_EQ((a + b).subst(px, py), a.subst(px, py) + b.subst(px, py));
  }
}

TEST(RatPolyProperty, EvalCommutesWithArithmetic) {
  PolyGen gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const RatPoly a = gen.poly();
    const RatPoly b = gen.poly();
    const Rational x0 = gen.rational();
    const Rational y0 = gen.rational();
    ASSERT_EQ((a * b).eval(x0, y0), a.eval(x0, y0) * b.eval(x0, y0));
    ASSERT_EQ((a + b).eval(x0, y0), a.eval(x0, y0) + b.eval(x0, y0));
  }
}

TEST(RatPolyProperty, PowAdditiveInExponent) {
  PolyGen gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    const RatPoly p = gen.poly(3);
    for (unsigned long a = 0; a <= 8; ++a) {
      for (unsigned long b = 0; b <= 8; b += 3) {
        ASSERT_EQ(p.pow(a + b), p.pow(a) * p.pow(b)) << p << " " << a << " " << b;
      }
    }
  }
}

}  // namespace
}  // namespace lucaskit
