#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "multiplane/rng.hpp"
#include "multiplane/upoly.hpp"
#include "multiplane/zpoly.hpp"

using namespace multiplane;
using zpoly::ZPoly;

namespace {

ZPoly Z(std::initializer_list<long> c) {
  ZPoly p;
  for (long v : c) p.emplace_back(v);
  zpoly::trim(p);
  return p;
}

UPoly U(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UPoly(std::move(v));
}

UPoly from_roots(const std::vector<long>& roots) {
  UPoly p = UPoly::constant(1);
  for (long r : roots) p *= UPoly::linear_root(r);
  return p;
}

UPoly random_poly(Rng& rng, int deg, long bound) {
  std::vector<Rational> v;
  for (int i = 0; i <= deg; ++i) v.emplace_back(rng.uniform(-bound, bound));
  if (v.back() == 0) v.back() = 1;
  return UPoly(std::move(v));
}

// Leibniz expansion, the oracle for the Bareiss determinant.
mpz_class leibniz(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpz_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(ZPoly, ArithmeticAndDivision) {
  const ZPoly a = Z({-1, 0, 1});  // u^2 - 1
  const ZPoly b = Z({-1, 1});
  EXPECT_EQ(zpoly::divexact(a, b), Z({1, 1}));
  EXPECT_TRUE(zpoly::divides(b, a));
  EXPECT_FALSE(zpoly::divides(Z({2, 1}), a));
  EXPECT_THROW(zpoly::divexact(a, Z({2, 1})), std::domain_error);
  EXPECT_EQ(zpoly::derivative(Z({5, 3, 2})), Z({3, 4}));
  EXPECT_EQ(zpoly::content(Z({6, -4, 10})), 2);
}

TEST(ZPoly, GcdOfConstructedProducts) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const UPoly g = random_poly(rng, 1 + trial % 5, 30);
    const UPoly a = random_poly(rng, 1 + trial % 7, 30);
    const UPoly b = random_poly(rng, 2 + trial % 4, 30);
    const UPoly ga = g * a, gb = g * b;
    const UPoly d = gcd(ga, gb);
    // d is a multiple of g, and the cofactors are coprime
    EXPECT_TRUE(divides(g, d));
    EXPECT_EQ(gcd(exact_div(ga, d), exact_div(gb, d)).degree(), 0);
  }
}

TEST(ZPoly, GcdWithLargeCoefficients) {
  UPoly big = UPoly::constant(1);
  for (long r = 1; r <= 12; ++r) big *= UPoly({Rational(r * 1000003), Rational(r * r + 7)});
  const UPoly other = big * U({3, 0, 5});
  EXPECT_EQ(gcd(big, other), big.monic());
  EXPECT_EQ(gcd(big * U({1, 1}), big * U({-1, 1})), big.monic());
}

TEST(ZPoly, GcdEdgeCases) {
  EXPECT_TRUE(gcd(UPoly{}, UPoly{}).is_zero());
  EXPECT_EQ(gcd(UPoly{}, U({2, 4})), UPoly({Rational(1, 2), Rational(1)}));
  EXPECT_EQ(gcd(U({1, 1}), U({2})), UPoly::constant(1));
}

TEST(ZPoly, DeterminantMatchesLeibniz) {
  Rng rng(5);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::vector<long>> m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
      zpoly::ZMatrix zm(static_cast<std::size_t>(n), std::vector<ZPoly>(static_cast<std::size_t>(n)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          long v = trial % 3 == 0 && (i + j) % 3 == 0 ? 0 : rng.uniform(-9, 9);
          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
          zm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v ? Z({v}) : ZPoly{};
        }
      const ZPoly det = zpoly::determinant(zm);
      const mpz_class expect = leibniz(m);
      EXPECT_EQ(det.empty() ? mpz_class(0) : det[0], expect);
    }
  }
}

TEST(ZPoly, PolynomialDeterminant) {
  // det [[u, 1], [1, u]] = u^2 - 1
  zpoly::ZMatrix m{{Z({0, 1}), Z({1})}, {Z({1}), Z({0, 1})}};
  EXPECT_EQ(zpoly::determinant(m), Z({-1, 0, 1}));
  // a zero pivot forces a row swap
  zpoly::ZMatrix s{{ZPoly{}, Z({1})}, {Z({1}), Z({0, 1})}};
  EXPECT_EQ(zpoly::determinant(s), Z({-1}));
}

TEST(UPoly, BasicOperations) {
  const UPoly p = U({1, 2, 3});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Rational(2)), 17);
  EXPECT_EQ(p.derivative(), U({2, 6}));
  EXPECT_EQ((p * U({0, 1})).degree(), 3);
  EXPECT_EQ(U({1, 1}).pow(3), U({1, 3, 3, 1}));
  const auto [q, r] = divrem(U({-1, 0, 1}), U({1, 1}));
  EXPECT_EQ(q, U({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(p.to_string(), "3*u^2 + 2*u + 1");
}

TEST(UPoly, SquarefreePart) {
  // s^2 (s - 1) -> s (s - 1)
  EXPECT_EQ(squarefree_part(U({0, 0, -1, 1})), U({0, -1, 1}));
  EXPECT_EQ(gcd(U({-1, 0, 1}), U({-1, 1})), U({-1, 1}));
  EXPECT_FALSE(is_squarefree(U({0, 0, -1, 1})));
  EXPECT_TRUE(is_squarefree(U({0, -1, 1})));
}

TEST(UPoly, MultiplicityStrataRecoverConstruction) {
  // (u-1)^1 (u-2)^2 (u-3)^2 (u+4)^3 (u-5)^5
  const UPoly target = from_roots({1, 2, 2, 3, 3, -4, -4, -4, 5, 5, 5, 5, 5}) * Rational(7);
  const UPoly radical = squarefree_part(target);
  EXPECT_EQ(radical, from_roots({1, 2, 3, -4, 5}));
  const auto strata = multiplicity_strata(radical, target);
  ASSERT_EQ(strata.size(), 4u);
  EXPECT_EQ(strata[0], std::make_pair(1, from_roots({1})));
  EXPECT_EQ(strata[1], std::make_pair(2, from_roots({2, 3})));
  EXPECT_EQ(strata[2], std::make_pair(3, from_roots({-4})));
  EXPECT_EQ(strata[3], std::make_pair(5, from_roots({5})));
  // a sub-radical only reports its own roots
  const auto sub = multiplicity_strata(from_roots({2, 5}), target);
  ASSERT_EQ(sub.size(), 2u);
  EXPECT_EQ(sub[0].first, 2);
  EXPECT_EQ(sub[1].first, 5);
}

TEST(UPoly, DistinctRootCount) {
  EXPECT_EQ(distinct_root_count(from_roots({1, 1, 2, 7, 7, 7})), 3);
  EXPECT_EQ(distinct_root_count(U({1, 0, 1})), 2);  // complex roots count too
  EXPECT_THROW(distinct_root_count(UPoly{}), std::invalid_argument);
}

TEST(UPoly, RationalCoefficients) {
  const UPoly p({Rational(1, 2), Rational(-3, 4), Rational(1, 6)});
  Rational scale;
  const ZPoly z = p.primitive_integer(&scale);
  EXPECT_EQ(UPoly::from_integer(z) * scale, p);
  EXPECT_EQ(exact_div(p * U({1, 3}), p), U({1, 3}));
}

TEST(Rng, DeterministicAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.uniform_nonzero(20);
    EXPECT_EQ(x, b.uniform_nonzero(20));
    EXPECT_NE(x, 0);
    EXPECT_LE(std::abs(x), 20);
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}
