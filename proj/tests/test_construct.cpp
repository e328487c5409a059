#include <gtest/gtest.h>

#include "multiplane/construct.hpp"

using namespace multiplane;
using namespace multiplane::construct;

namespace {

std::vector<ParamSolution> brute_params(Int e) {
  std::vector<ParamSolution> out;
  for (Int h = 0; h <= 200; ++h)
    for (Int ell = 3 * h; ell <= 200; ++ell)
      if (2 * ell - 3 * h + 2 == e) out.push_back({h, ell, (h - e) / 2});
  return out;
}

}  // namespace

TEST(Params, Validation) {
  EXPECT_NO_THROW(ConstructionParams(3, 0, 1));
  EXPECT_THROW(ConstructionParams(2, 0, 1), std::invalid_argument);
  EXPECT_THROW(ConstructionParams(3, -1, 1), std::invalid_argument);
  EXPECT_THROW(ConstructionParams(3, 2, 5), std::invalid_argument);
  try {
    ConstructionParams(3, 2, 5);
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("violated"), std::string::npos);
  }
}

TEST(Params, SolverMatchesBruteForce) {
  for (Int e = 4; e <= 100; ++e) {
    const auto sols = params_for_e(e);
    EXPECT_EQ(sols, brute_params(e)) << e;
    for (const auto& s : sols) EXPECT_EQ(2 * s.k, s.h - e);
  }
  EXPECT_EQ(params_for_e(4), (std::vector<ParamSolution>{{0, 1, -2}}));
  EXPECT_EQ(params_for_e(10), (std::vector<ParamSolution>{{0, 4, -5}, {2, 7, -4}}));
  EXPECT_TRUE(params_for_e(5).size() == 1u);  // h = 1, ell = 3
  EXPECT_THROW(params_for_e(3), std::invalid_argument);
}

TEST(Identities, MapDegreeAndLengths) {
  for (Int m = 3; m <= 8; ++m)
    for (Int h = 0; h <= 4; ++h)
      for (Int ell = m * h; ell <= 20; ++ell) {
        const ConstructionParams p(m, h, ell);
        EXPECT_EQ(map_degree(p), m);
        // Z = Gbar . Hbar
        EXPECT_EQ(z_length(p), picard::intersect(p.gbar_class(), p.hbar_class(), p.surface()));
        if (m == 3) {
          const Int e = 2 * ell - 3 * h + 2;
          EXPECT_EQ(z_length(p), 3 * e - 3);
          EXPECT_EQ(gbar_selfintersection(p), 3 * e - 6);
        }
      }
}

TEST(Identities, SectionCountMatchesMonomials) {
  for (Int h = 0; h <= 4; ++h) {
    const picard::HirzebruchSurface s(h);
    for (Int sigma = -1; sigma <= 6; ++sigma)
      for (Int phi = 0; phi <= 25; ++phi)
        EXPECT_EQ(h0({sigma, phi}, s), static_cast<Int>(coxring::monomial_basis({sigma, phi}, s).size()));
  }
  // net dimension as computed, including negative values
  EXPECT_EQ(expected_net_dim(ConstructionParams(3, 0, 1)), 3);
  EXPECT_EQ(expected_net_dim(ConstructionParams(4, 1, 5)), -3);
}

TEST(Triple, ConsistencyWithSplits) {
  for (Int x = 2; x <= 20; ++x)
    for (Int y = 2; y <= 20; ++y) {
      if (2 * x <= y || 2 * y <= x) continue;
      const auto tc = triple_consistency(x, y);
      EXPECT_EQ(tc.e, x + y);
      EXPECT_TRUE(tc.ok) << x << "," << y;
      EXPECT_FALSE(tc.rows.empty());
    }
}

TEST(Net, WitnessParameters) {
  struct Case {
    Int m, h, ell, z, genus, dim;
  };
  for (const Case c : {Case{3, 0, 1, 9, 0, 3}, Case{3, 1, 3, 12, 1, 2}, Case{4, 1, 5, 28, 6, -3}}) {
    const ConstructionParams p(c.m, c.h, c.ell);
    const auto net = build_net(p, 7);
    EXPECT_TRUE(net.smooth_gbar);
    EXPECT_TRUE(net.z_reduced);
    EXPECT_EQ(net.z_length, c.z);
    EXPECT_EQ(net.gbar_genus, c.genus);
    EXPECT_EQ(net.expected_net_dim, c.dim);
    EXPECT_EQ(net.net_rank, 3);
    EXPECT_TRUE(net.members_contain_z);
    EXPECT_EQ(net.map_degree, c.m);
    EXPECT_EQ(net.gbar.klass(), p.gbar_class());
    EXPECT_EQ(net.h0bar.klass(), p.hbar_class());
  }
}

TEST(Net, SchemeMembershipIsNotVacuous) {
  const ConstructionParams p(3, 0, 1);
  const auto net = build_net(p, 3);
  const auto tr = check_transversal(net.gbar, net.h0bar);
  ASSERT_TRUE(tr.reduced);
  EXPECT_EQ(tr.eliminant.degree(), 9);
  EXPECT_TRUE(contains_scheme(net.gbar, tr));
  // a different member of the class of Hbar does not contain Z
  const auto other = coxring::random_section(p.hbar_class(), p.surface(), 12345, 20);
  EXPECT_FALSE(contains_scheme(other, tr));
  // nor does s times it
  EXPECT_FALSE(contains_scheme(coxring::BiPoly::variable(p.surface(), coxring::CoxVar::s) * other, tr));
}

TEST(Net, TransversalityDetectsSharedBoundaryPoints) {
  const picard::HirzebruchSurface F0(0);
  using coxring::BiPoly;
  // both curves meet w = 0 at s = 0
  const BiPoly g = BiPoly::monomial(F0, {1, 0, 1, 0}) + BiPoly::monomial(F0, {0, 1, 0, 1});
  const BiPoly h = BiPoly::monomial(F0, {1, 0, 1, 0}) + BiPoly::monomial(F0, {1, 0, 0, 1});
  EXPECT_FALSE(check_transversal(g, h).boundary_disjoint);
}

TEST(Net, Determinism) {
  const ConstructionParams p(3, 1, 3);
  const auto a = build_net(p, 11), b = build_net(p, 11);
  EXPECT_EQ(a.gbar, b.gbar);
  EXPECT_EQ(a.h0bar, b.h0bar);
  EXPECT_EQ(a.gbar_attempts, b.gbar_attempts);
}
