#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "folint/resolution/germ.hpp"
#include "test_oracles.hpp"
#include "test_support.hpp"

using namespace folint;
using folint::testing::L;
using folint::testing::load_foliation;
using folint::testing::monomial_blowups;

namespace {

KMultiPoly K(const std::string& s) { return to_field(L(s)); }

// rho y dx - delta x dy composed with x -> x + c y^2 and a linear change;
// linearizable with eigenvalues proportional to (delta, rho).
LocalForm twisted_linear(long delta, long rho, long c) {
  using P = KMultiPoly;
  const P x = P::var(0), y = P::var(1);
  // x' = x + c y^2, y' = y: pull back rho y' dx' - delta x' dy'
  const P xp = x + y.pow(2).scaled(FieldElement(c));
  const P a = y.scaled(FieldElement(rho));
  const P b = y.pow(2).scaled(FieldElement(2 * c * rho)) - xp.scaled(FieldElement(delta));
  return {a, b};
}

}  // namespace

TEST(Euclid, Examples) {
  EXPECT_EQ(euclid_multiplicities(2, 1), (std::vector<int>{1, 1}));
  EXPECT_EQ(euclid_multiplicities(1, 1), (std::vector<int>{1}));
  EXPECT_EQ(euclid_multiplicities(5, 2), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_THROW(euclid_multiplicities(4, 2), Error);
}

TEST(Euclid, SumIdentitiesUpToThirty) {
  for (long rho = 1; rho <= 30; ++rho)
    for (long delta = 1; delta <= 30; ++delta) {
      if (std::gcd(rho, delta) != 1) continue;
      const auto m = euclid_multiplicities(rho, delta);
      long s1 = 0, s2 = 0;
      for (int x : m) {
        s1 += x;
        s2 += static_cast<long>(x) * x;
      }
      EXPECT_EQ(s1, rho + delta - 1) << rho << "," << delta;
      EXPECT_EQ(s2, rho * delta) << rho << "," << delta;
    }
}

TEST(Euclid, MatchesMonomialIdealBlowups) {
  for (int rho = 1; rho <= 8; ++rho)
    for (int delta = 1; delta <= 8; ++delta) {
      if (std::gcd(rho, delta) != 1) continue;
      std::vector<int> oracle;
      monomial_blowups({{rho, 0}, {0, delta}}, oracle);
      auto m = euclid_multiplicities(rho, delta);
      std::sort(oracle.rbegin(), oracle.rend());
      EXPECT_EQ(m, oracle) << rho << "," << delta;
    }
}

TEST(Cluster, LinearForms) {
  for (long delta = 1; delta <= 5; ++delta)
    for (long rho = delta; rho <= 7; ++rho) {
      if (std::gcd(rho, delta) != 1) continue;
      for (long c : {0L, 1L, -2L}) {
        const Cluster cl = local_cluster(twisted_linear(delta, rho, c), EigenPair{delta, rho});
        EXPECT_EQ(cl.multiplicities(), euclid_multiplicities(rho, delta)) << delta << "," << rho << "," << c;
        EXPECT_TRUE(cl.dicritical_end);
        EXPECT_EQ(cl.chain.back().pair, (EigenPair{1, 1}));
      }
    }
}

TEST(Cluster, PencilMembersFollowTheChain) {
  // x'^rho / y^delta integrates rho y dx' - delta x' dy, x' = x + y^2
  for (auto [delta, rho] : std::vector<std::pair<long, long>>{{1, 2}, {2, 3}, {2, 5}, {3, 4}}) {
    const Cluster cl = local_cluster(twisted_linear(delta, rho, 1), EigenPair{delta, rho});
    using P = KMultiPoly;
    const P xp = P::var(0) + P::var(1).pow(2);
    const P member = xp.pow(static_cast<int>(rho)).scaled(FieldElement(3)) + P::var(1).pow(static_cast<int>(delta));
    EXPECT_EQ(germ_mult_sequence(member, cl), euclid_multiplicities(rho, delta)) << delta << "," << rho;
  }
}

TEST(Cluster, DegreeThreeExample) {
  Foliation f = load_foliation("degree3.fol");
  SingularLocus locus = singular_locus(f);
  int long_chains = 0, short_chains = 0;
  for (const auto& c : locus.classes) {
    if (!c.non_reduced()) continue;
    const Cluster cl = foliation_cluster(f, c);
    EXPECT_TRUE(cl.dicritical_end);
    if (c.eigen->pair->rho == 2) {
      EXPECT_EQ(cl.chain.size(), 2u);
      long_chains += c.size;
    } else {
      EXPECT_EQ(cl.chain.size(), 1u);
      short_chains += c.size;
    }
  }
  EXPECT_EQ(long_chains, 3);
  EXPECT_EQ(short_chains, 3);
}

TEST(Cluster, F40) {
  Foliation f = load_foliation("f40.fol");
  for (const auto& c : singular_locus(f).classes) {
    if (!c.non_reduced()) continue;
    const Cluster cl = foliation_cluster(f, c);
    EXPECT_EQ(cl.multiplicities(), std::vector<int>{1});
    EXPECT_TRUE(cl.dicritical_end);
  }
}

TEST(Germ, MilnorAndTjurina) {
  EXPECT_EQ(germ_milnor(K("u*v")), 1);
  EXPECT_EQ(germ_milnor(K("u^3 - v^2")), 2);
  EXPECT_EQ(germ_tjurina(K("u^3 - v^2")), 2);
  EXPECT_EQ(germ_tjurina(K("u*v")), 1);
  EXPECT_EQ(germ_milnor(K("u + v^2")), 0);
  const KMultiPoly h = K("(u^3 + 2*v^3 - 3*u^3*v^3)*(u^3 + v^3 - 2*u^3*v^3)");
  EXPECT_EQ(germ_milnor(h), 25);
  EXPECT_EQ(germ_tjurina(h), 25);
  // not quasi-homogeneous: mu = 11, tau = 10
  EXPECT_NE(germ_milnor(K("u^5 + u^2*v^2 + v^5")), germ_tjurina(K("u^5 + u^2*v^2 + v^5")));
  EXPECT_THROW(germ_milnor(K("u^2")), Error);
}

TEST(Germ, BrieskornSweep) {
  for (long a = 1; a <= 11; ++a)
    for (long b = 1; b <= 11; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (long k = 1; k * a + k * b <= 12; ++k) {
        using P = KMultiPoly;
        const P g = P::var(0).pow(static_cast<int>(k * a)) + P::var(1).pow(static_cast<int>(k * b));
        const int mu = germ_milnor(g);
        EXPECT_EQ(mu, (k * a - 1) * (k * b - 1)) << a << "," << b << "," << k;
        EXPECT_EQ(germ_tjurina(g), mu) << a << "," << b << "," << k;
      }
    }
}

TEST(Germ, InvariantUnderLinearChanges) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  const std::vector<std::string> germs{"u^3 - v^2", "u^2*v + v^4", "u^4 + v^5 + u^2*v^2", "u*v*(u - v)"};
  for (const auto& s : germs) {
    const KMultiPoly g = K(s);
    const int mu = germ_milnor(g), tau = germ_tjurina(g);
    for (int it = 0; it < 4; ++it) {
      long p = d(rng), q = d(rng), r = d(rng), t = d(rng);
      if (p * t - q * r == 0) continue;
      using P = KMultiPoly;
      const P x = P::var(0), y = P::var(1);
      const P h = g.substitute({x.scaled(FieldElement(p)) + y.scaled(FieldElement(q)),
                                x.scaled(FieldElement(r)) + y.scaled(FieldElement(t)), P::var(2)});
      EXPECT_EQ(germ_milnor(h), mu) << s;
      EXPECT_EQ(germ_tjurina(h), tau) << s;
    }
  }
}

TEST(Germ, Nodal) {
  NodalResult r = is_nodal(K("u*v"));
  EXPECT_TRUE(r.nodal);
  EXPECT_EQ(r.n, 1);
  EXPECT_EQ(r.m, 1);
  r = is_nodal(K("u^2*v^3"));
  EXPECT_TRUE(r.nodal);
  EXPECT_EQ(r.n, 2);
  EXPECT_EQ(r.m, 3);
  EXPECT_FALSE(is_nodal(K("u^3 - v^2")).nodal);
  r = is_nodal(K("(u^2 + v^2)^2"));
  EXPECT_TRUE(r.nodal);
  EXPECT_EQ(r.n, 2);
  EXPECT_EQ(r.m, 2);
  EXPECT_FALSE(is_nodal(K("u*v*(u + v)")).nodal);
}

TEST(Germ, MultiplicitySequences) {
  const Cluster c11 = local_cluster(twisted_linear(1, 1, 0), EigenPair{1, 1});
  EXPECT_EQ(germ_mult_sequence(K("u^2 - v"), c11), std::vector<int>{1});
  EXPECT_EQ(germ_mult_sequence(K("u^3 + 2*v^3 - 3*u^3*v^3"), c11), std::vector<int>{3});
  // 2 u dv - 3 v du: leaves v^2 = c u^3
  const Cluster c23 = local_cluster({K("-3*v"), K("2*u")}, EigenPair{2, 3});
  EXPECT_EQ(c23.multiplicities(), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(germ_mult_sequence(K("v^2 - u^3"), c23), (std::vector<int>{2, 1, 1}));
}

TEST(Germ, TypeS) {
  EXPECT_TRUE(type_check_S(K("u^6 + v^6"), 1, 1, 6).match);
  EXPECT_TRUE(type_check_S(K("(u^3 + 2*v^3 - 3*u^3*v^3)*(u^3 + v^3 - 2*u^3*v^3)"), 1, 1, 6).match);
  EXPECT_TRUE(type_check_S(K("u^2 + v^3"), 2, 3, 1).match);
  EXPECT_TRUE(type_check_S(K("v^2 - u^3 + u^2*v"), 2, 3, 1).match);
  EXPECT_TRUE(type_check_S(K("u^4 + v^6"), 2, 3, 2).match);
  const TypeCheck bad = type_check_S(K("u^5 + u^2*v^2 + v^5"), 1, 1, 4);
  EXPECT_FALSE(bad.match);
  EXPECT_FALSE(type_check_S(K("u*v"), 2, 3, 1).match);
  EXPECT_THROW(type_check_S(K("u^2*v"), 1, 1, 3), Error);
}

TEST(Germ, Equisingular) {
  const Cluster c11 = local_cluster(twisted_linear(1, 1, 0), EigenPair{1, 1});
  EXPECT_TRUE(equisingular(K("u^3 + 2*v^3 - 3*u^3*v^3"), K("u^3 + v^3 - 2*u^3*v^3"), c11));
  EXPECT_TRUE(equisingular(K("u*v"), K("u*v + u^3"), c11));
  EXPECT_FALSE(equisingular(K("u*v"), K("v^2 - u^3"), c11));
}
