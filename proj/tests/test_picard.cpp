#include <gtest/gtest.h>

#include "multiplane/picard.hpp"

using namespace multiplane;
using namespace multiplane::picard;

TEST(Picard, PairingOnBasis) {
  for (Int h = 0; h <= 6; ++h) {
    HirzebruchSurface s(h);
    EXPECT_EQ(intersect(kSection, kSection, s), -h);
    EXPECT_EQ(intersect(kSection, kFiber, s), 1);
    EXPECT_EQ(intersect(kFiber, kFiber, s), 0);
  }
}

TEST(Picard, PairingIsSymmetricBilinear) {
  HirzebruchSurface s(3);
  for (Int a = -3; a <= 3; ++a)
    for (Int b = -3; b <= 3; ++b)
      for (Int c = -2; c <= 2; ++c)
        for (Int d = -2; d <= 2; ++d) {
          DivisorClass x{a, b}, y{c, d}, z{b, c};
          EXPECT_EQ(intersect(x, y, s), intersect(y, x, s));
          EXPECT_EQ(intersect(x + z, y, s), intersect(x, y, s) + intersect(z, y, s));
        }
}

TEST(Picard, CanonicalClass) {
  EXPECT_EQ(canonical(HirzebruchSurface(1)), (DivisorClass{-2, -3}));
  for (Int h = 0; h <= 8; ++h) {
    HirzebruchSurface s(h);
    const auto K = canonical(s);
    EXPECT_EQ(intersect(K, K, s), 8);  // every rational ruled surface
    EXPECT_EQ(arithmetic_genus(kSection, s), 0);
    EXPECT_EQ(arithmetic_genus(kFiber, s), 0);
  }
}

TEST(Picard, PlaneCurvesOnTheBlowup) {
  // dH = dE + dF is the pullback of a plane curve of degree d.
  HirzebruchSurface F1(1);
  for (Int d = 1; d <= 30; ++d) {
    DivisorClass D{d, d};
    EXPECT_EQ(arithmetic_genus(D, F1), (d - 1) * (d - 2) / 2);
    EXPECT_EQ(riemann_roch_chi(D, F1), (d + 1) * (d + 2) / 2);
  }
}

TEST(Picard, RiemannRochOnProductOfLines) {
  // F_0 = P1 x P1, chi(O(a,b)) = (a+1)(b+1).
  HirzebruchSurface F0(0);
  for (Int a = 0; a <= 6; ++a)
    for (Int b = 0; b <= 6; ++b) EXPECT_EQ(riemann_roch_chi({a, b}, F0), (a + 1) * (b + 1));
}

TEST(Picard, NefRange) {
  HirzebruchSurface s(2);
  EXPECT_TRUE(is_nef({1, 2}, s));
  EXPECT_FALSE(is_nef({1, 1}, s));
  EXPECT_FALSE(is_nef({-1, 5}, s));
}

TEST(Picard, RejectsNegativeH) { EXPECT_THROW(HirzebruchSurface(-1), std::invalid_argument); }

TEST(Picard, OverflowIsDetected) {
  HirzebruchSurface s(1);
  const Int big = Int{1} << 40;
  EXPECT_THROW(intersect({big, big}, {big, big}, s), std::overflow_error);
}
