#include <gtest/gtest.h>

#include <map>

#include "folint/integrate/pipeline.hpp"
#include "test_oracles.hpp"
#include "test_support.hpp"

using namespace folint;
using folint::testing::brute_force_diophantine;
using folint::testing::load_foliation;
using folint::testing::Q;
using folint::testing::span_rank;

namespace {

std::vector<EigenClass> singletons(const std::vector<std::pair<EigenPair, int>>& groups) {
  std::vector<EigenClass> out;
  for (const auto& [p, count] : groups)
    for (int i = 0; i < count; ++i) out.push_back({p.delta, p.rho, 1});
  return out;
}

std::multiset<int> multiset_of(const DiophantineSolution& s) { return {s.k.begin(), s.k.end()}; }

IntegrabilityReport integrate(const std::string& fixture, int t) {
  IntegrateOptions o;
  o.max_degree = t;
  return find_first_integral(load_foliation(fixture), o);
}

}  // namespace

TEST(Diophantine, PaperPatternsMatchBruteForce) {
  const std::vector<std::pair<int, std::vector<EigenClass>>> patterns{
      {2, singletons({{{1, 2}, 2}, {{2, 3}, 3}})},
      {3, singletons({{{1, 1}, 3}, {{1, 2}, 5}})},
      {4, singletons({{{1, 1}, 12}})},
  };
  for (const auto& [r, data] : patterns) {
    const auto got = solve_diophantine(data, r, 9);
    const auto want = brute_force_diophantine(data, r, 9);
    EXPECT_EQ(got.size(), want.size()) << "r = " << r;
    EXPECT_TRUE(got == want) << "r = " << r;
  }
}

TEST(Diophantine, F40HasBothMultisetsAtSix) {
  const auto sols = solve_diophantine(singletons({{{1, 1}, 12}}), 4, 7);
  std::set<std::multiset<int>> at6;
  for (const auto& s : sols) {
    EXPECT_EQ(s.d, 6);
    at6.insert(multiset_of(s));
  }
  EXPECT_TRUE(at6.count({3, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_TRUE(at6.count({4, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(at6.size(), 2u);
}

TEST(Diophantine, SmallCases) {
  EXPECT_TRUE(solve_diophantine({{1, 1, 1}}, 2, 40).empty());
  const auto deg3 = solve_diophantine({{1, 2, 3}, {1, 1, 3}}, 3, 4);
  ASSERT_EQ(deg3.size(), 1u);
  EXPECT_EQ(deg3[0].d, 3);
  EXPECT_EQ(deg3[0].k, (std::vector<int>{1, 1}));
}

TEST(Conditions, Counts) {
  Foliation f = load_foliation("f40.fol");
  SingularLocus locus = singular_locus(f);
  const SingularClass* origin = nullptr;
  for (const auto& c : locus.classes)
    if (render_point(c.point) == "(0 : 0 : 1)") origin = &c;
  ASSERT_NE(origin, nullptr);
  const Cluster cl = foliation_cluster(f, *origin);
  EXPECT_EQ(cluster_conditions({6, {1}}, {cl}, 6).rows(), 1);
  EXPECT_EQ(cluster_conditions({6, {3}}, {cl}, 6).rows(), 6);

  Foliation g = load_foliation("degree3.fol");
  for (const auto& c : singular_locus(g).classes) {
    if (!c.non_reduced() || c.eigen->pair->rho != 2) continue;
    const Cluster c12 = foliation_cluster(g, c);
    EXPECT_EQ(cluster_conditions({3, {1}}, {c12}, 3).rows(), 2 * c.size);
  }
  EXPECT_EQ(linear_system({1, {}}, {}, 1).basis.size(), 3u);
}

TEST(Certify, Examples) {
  const QOneForm deg3 = load_foliation("degree3.fol").rational_form();
  EXPECT_TRUE(certify_wedge(Q("X^3 - 2*Y^3 + Y*Z^2"), Q("X*Z^2"), deg3).zero);
  const WedgeOutcome bad = certify_wedge(Q("X"), Q("Y"), deg3);
  EXPECT_FALSE(bad.zero);
  EXPECT_FALSE(bad.component.empty());
  EXPECT_NE(bad.coefficient, 0);
  EXPECT_TRUE(certify_wedge(Q("X*Y"), Q("Z^2"), load_foliation("degree1.fol").rational_form()).zero);
  EXPECT_THROW(certify_wedge(Q("X*Y"), Q("X*Z"), deg3), Error);
}

TEST(Pipeline, DegreeThree) {
  const IntegrabilityReport rep = integrate("degree3.fol", 4);
  ASSERT_EQ(rep.verdict, Verdict::FirstIntegral);
  ASSERT_EQ(rep.solutions.size(), 1u);
  EXPECT_EQ(rep.solutions[0].d, 3);
  for (int k : rep.solutions[0].k) EXPECT_EQ(k, 1);
  EXPECT_TRUE(rep.wedge->zero);
  EXPECT_EQ(span_rank({*rep.numerator, *rep.denominator, Q("X^3 - 2*Y^3 + Y*Z^2"), Q("X*Z^2")}), 2);
  ASSERT_TRUE(rep.condition_d);
  EXPECT_TRUE(rep.condition_d->pass());
  for (const auto& e : rep.condition_e) EXPECT_TRUE(e.pass) << e.point;
  EXPECT_FALSE(rep.condition_e.empty());
}

TEST(Pipeline, F40) {
  const IntegrabilityReport rep = integrate("f40.fol", 7);
  ASSERT_EQ(rep.verdict, Verdict::FirstIntegral);
  const auto& winner = rep.candidates.back();
  EXPECT_EQ(winner.solution.d, 6);
  std::multiset<int> ks;
  for (size_t i = 0; i < rep.clusters.size(); ++i)
    for (int j = 0; j < rep.locus.classes[rep.cluster_class[i]].size; ++j) ks.insert(winner.solution.k[i]);
  EXPECT_EQ(ks, (std::multiset<int>{3, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(span_rank({*rep.numerator, *rep.denominator, Q("3*X^3*Y^3 - X^3*Z^3 - 2*Y^3*Z^3"),
                       Q("2*X^3*Y^3 - X^3*Z^3 - Y^3*Z^3")}),
            2);
  EXPECT_EQ(winner.conditions_rank, 28 - 2);
  ASSERT_TRUE(rep.condition_d);
  int triple = 0;
  for (const auto& p : rep.condition_d->points) {
    EXPECT_TRUE(p.pass()) << p.point << " " << p.failure;
    if (p.k == 3) {
      ++triple;
      EXPECT_EQ(p.milnor, 25);
      EXPECT_EQ(p.tjurina, 25);
      EXPECT_EQ(p.type, "S(1,1,6)");
      EXPECT_TRUE(p.type_match);
    }
  }
  EXPECT_EQ(triple, 3);
  int reduced_points = 0;
  for (const auto& c : rep.locus.classes)
    if (!c.non_reduced()) reduced_points += c.size;
  EXPECT_EQ(reduced_points, 9);
  for (const auto& e : rep.condition_e) EXPECT_TRUE(e.pass) << e.point;
}

TEST(Pipeline, FaIsProvenNo) {
  for (const char* name : {"fa2.fol", "fa1_2.fol"}) {
    const IntegrabilityReport rep = integrate(name, 10);
    ASSERT_EQ(rep.verdict, Verdict::ProvenNo) << name;
    ASSERT_TRUE(rep.obstruction);
    EXPECT_EQ(rep.obstruction->type, "cardinality");
    EXPECT_EQ(rep.obstruction->r, 2);
    EXPECT_EQ(rep.obstruction->n, 2);
  }
}

TEST(Pipeline, DegreeOne) {
  const IntegrabilityReport rep = integrate("degree1.fol", 3);
  ASSERT_EQ(rep.verdict, Verdict::FirstIntegral);
  EXPECT_EQ(*rep.numerator, Q("X*Y"));
  EXPECT_EQ(*rep.denominator, Q("Z^2"));
  EXPECT_EQ(integrate("degree1.fol", 2).verdict, Verdict::NoBelowBound);
  // other normal forms
  Foliation f = Foliation::make(QOneForm{Q("2*Y*Z"), Q("X*Z"), Q("-3*X*Y")});
  IntegrateOptions o;
  o.max_degree = 5;
  const IntegrabilityReport r2 = find_first_integral(f, o);
  ASSERT_EQ(r2.verdict, Verdict::FirstIntegral);
  EXPECT_EQ(*r2.numerator, Q("X^2*Y"));
  EXPECT_EQ(*r2.denominator, Q("Z^3"));
}

TEST(Pipeline, BelowBoundAndIrrational) {
  EXPECT_EQ(integrate("degree3.fol", 3).verdict, Verdict::NoBelowBound);
  // a = 3: three non-reduced points, and two points with y^2 = -2 whose
  // eigenvalues are 2 and 2*y
  const IntegrabilityReport rep = integrate("fa3.fol", 6);
  ASSERT_EQ(rep.verdict, Verdict::ProvenNo);
  EXPECT_EQ(rep.obstruction->type, "irrational_ratio");
  ASSERT_TRUE(rep.obstruction->point);
  EXPECT_TRUE(rep.obstruction->point->irrational());
  const FieldElement s = *rep.obstruction->point->eigen->s;
  if (s.is_rational()) {
    const Rational q = s.rational_value();
    EXPECT_FALSE(rational_sqrt(q * (q - 4)).has_value());
  }
}

TEST(Pipeline, DegreeOneOutsideNormalFormIsUnsupported) {
  IntegrateOptions o;
  o.max_degree = 4;
  Foliation f = Foliation::make(pencil_differential(Q("X^2 + Y^2"), Q("Z^2")));
  EXPECT_EQ(f.degree(), 1);
  EXPECT_EQ(find_first_integral(f, o).verdict, Verdict::Unsupported);
}

TEST(Pipeline, ParallelIsDeterministic) {
  IntegrateOptions o;
  o.max_degree = 7;
  Foliation f = load_foliation("f40.fol");
  const IntegrabilityReport a = find_first_integral(f, o);
  o.parallel = 4;
  const IntegrabilityReport b = find_first_integral(f, o);
  ASSERT_EQ(a.candidates.size(), b.candidates.size());
  EXPECT_EQ(*a.numerator, *b.numerator);
  EXPECT_EQ(*a.denominator, *b.denominator);
}
