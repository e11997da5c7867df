#include "lucaskit/extring.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace lucaskit {
namespace {

using testing::PolyGen;
using testing::X;
using testing::Y;

const ExtElem kAlpha2 = ExtElem::doubled_alpha();  // x + s
const ExtElem kBeta2 = ExtElem::doubled_beta();    // x - s

TEST(ExtElemTest, Mul) {
  EXPECT_EQ(kAlpha2 * kBeta2, ExtElem(Y().scaled(-4)));
  EXPECT_EQ(ExtElem::s() * ExtElem::s(), ExtElem(X().pow(2) + Y().scaled(4)));
  EXPECT_EQ(kAlpha2 * kAlpha2, ExtElem(X().pow(2).scaled(2) + Y().scaled(4), X().scaled(2)));
}

TEST(ExtElemTest, Pow) {
  EXPECT_EQ(kAlpha2.pow(0), ExtElem(RatPoly(1)));
  EXPECT_EQ(kAlpha2.pow(2), kAlpha2 * kAlpha2);
  EXPECT_EQ(ExtElem::s().pow(2), ExtElem(discriminant()));
}

TEST(ExtElemTest, Conj) {
  EXPECT_EQ(kAlpha2.conj(), kBeta2);
  const ExtElem u(X() + 3, Y() - X());
  EXPECT_EQ(u.conj().conj(), u);
  EXPECT_EQ(kAlpha2 * kAlpha2.conj(), ExtElem(Y().scaled(-4)));
  EXPECT_EQ(kAlpha2.norm(), Y().scaled(-4));
}

TEST(ExtElemTest, RootsSumAndProduct) {
  EXPECT_EQ(kAlpha2 + kBeta2, ExtElem(X().scaled(2)));
  // alpha * beta = -y
  EXPECT_EQ((kAlpha2 * kBeta2).scaled(make_rational(1, 4)), ExtElem(-Y()));
  // alpha - beta = s
  EXPECT_EQ((kAlpha2 - kBeta2).scaled(make_rational(1, 2)), ExtElem::s());
}

// x + alpha and x + beta are the roots of t^2 - 3x t + (2x^2 - y). With
// u = 2t = 3x +- s: u^2 - 6x u + 4(2x^2 - y) must vanish.
TEST(ExtElemTest, ShiftedRootsSolveShiftedCharacteristic) {
  const RatPoly c0 = (X().pow(2).scaled(2) - Y()).scaled(4);
  for (const ExtElem& u : {ExtElem(X().scaled(3), RatPoly(1)), ExtElem(X().scaled(3), RatPoly(-1))}) {
    const ExtElem value = u * u - ExtElem(X().scaled(6)) * u + ExtElem(c0);
    EXPECT_TRUE(value.is_zero()) << value;
  }
  // The same roots as x + alpha, built from the doubled roots: 2(x + alpha) = 2x + (x + s).
  EXPECT_EQ(ExtElem(X().scaled(2)) + kAlpha2, ExtElem(X().scaled(3), RatPoly(1)));
  // Their difference is unchanged and their product is 2x^2 - y.
  const ExtElem a3(X().scaled(3), RatPoly(1));
  const ExtElem b3(X().scaled(3), RatPoly(-1));
  EXPECT_EQ((a3 * b3).scaled(make_rational(1, 4)), ExtElem(X().pow(2).scaled(2) - Y()));
  EXPECT_EQ(a3 - b3, kAlpha2 - kBeta2);
}

TEST(ExtElemTest, Render) {
  EXPECT_EQ(kAlpha2.to_string(), "(x) + (1)*s");
  EXPECT_EQ(ExtElem(Y().scaled(-4)).to_string(), "(-4*y) + (0)*s");
}

TEST(ExtElemProperty, PowAdditive) {
  PolyGen gen(101);
  for (int trial = 0; trial < 3; ++trial) {
    const ExtElem u = gen.ext(2);
    std::vector<ExtElem> powers{ExtElem(RatPoly(1))};
    for (int i = 1; i <= 32; ++i) {
      powers.push_back(powers.back() * u);
    }
    for (unsigned long m = 0; m <= 16; ++m) {
      ASSERT_EQ(u.pow(m), powers[m]);
      for (unsigned long n = 0; n <= 16; n += 4) {
        ASSERT_EQ(u.pow(m + n), u.pow(m) * u.pow(n));
      }
    }
  }
}

TEST(ExtElemProperty, ConjIsRingHomomorphism) {
  PolyGen gen(103);
  for (int trial = 0; trial < 100; ++trial) {
    const ExtElem u = gen.ext();
    const ExtElem v = gen.ext();
    ASSERT_EQ((u * v).conj(), u.conj() * v.conj());
    ASSERT_EQ((u + v).conj(), u.conj() + v.conj());
    ASSERT_TRUE((u * u.conj()).s_part().is_zero());
    ASSERT_EQ((u * u.conj()).rational_part(), u.norm());
  }
}

TEST(ExtElemProperty, RingAxioms) {
  PolyGen gen(107);
  for (int trial = 0; trial < 100; ++trial) {
    const ExtElem a = gen.ext();
    const ExtElem b = gen.ext();
    const ExtElem c = gen.ext();
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
  }
}

}  // namespace
}  // namespace lucaskit
