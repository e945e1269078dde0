#include <gtest/gtest.h>

#include <random>

#include "folint/cli/parser.hpp"
#include "folint/forms/oneform.hpp"

using namespace folint;

namespace {

QMultiPoly Q(const std::string& s) { return parse_rational_polynomial(s); }
QMultiPoly L(const std::string& s) { return parse_rational_polynomial(s, {"x", "y", ""}); }

QOneForm form(const std::string& a, const std::string& b, const std::string& c) { return {Q(a), Q(b), Q(c)}; }

const QOneForm kF40 = {Q("(Y^3 - Z^3)*Y*Z"), Q("(Z^3 - X^3)*X*Z"), Q("(X^3 - Y^3)*X*Y")};
const QOneForm kDegree3 = {Q("Z*(2*X^3+2*Y^3-Y*Z^2)"), Q("Z*(X*Z^2-6*X*Y^2)"), Q("4*X*Y^3-2*X^4")};

QMultiPoly random_form(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> c(-5, 5);
  QMultiPoly p;
  for (const auto& e : monomials_of_degree(d)) p.add_term(e, Rational(c(rng)));
  return p;
}

}  // namespace

TEST(Euler, Examples) {
  EXPECT_TRUE(euler_check(kF40.A, kF40.B, kF40.C).valid);
  EXPECT_TRUE(euler_check(Q("Y"), Q("-X"), Q("0")).valid);
  auto bad = euler_check(Q("X"), Q("Y"), Q("Z"));
  EXPECT_FALSE(bad.valid);
  EXPECT_EQ(*bad.witness, (Exponent{2, 0, 0}));
  EXPECT_THROW(euler_check(Q("X^2"), Q("Y"), Q("0")), Error);
}

TEST(Degree, Examples) {
  EXPECT_EQ(foliation_degree(kF40), 4);
  EXPECT_EQ(foliation_degree(form("Y*Z", "X*Z", "-2*X*Y")), 1);
  EXPECT_EQ(foliation_degree(form("Y", "-X", "0")), 0);
  EXPECT_EQ(foliation_degree(kF40.scaled(Rational(-7, 3))), 4);
}

TEST(Wedge, Examples) {
  EXPECT_TRUE(wedge(kF40, kF40).is_zero());
  auto w = wedge(form("1", "0", "0"), form("0", "1", "0"));
  EXPECT_EQ(w.xy, Q("1"));
  EXPECT_TRUE(w.yz.is_zero());
  EXPECT_TRUE(w.xz.is_zero());
  auto eta = pencil_differential(Q("X^3-2*Y^3+Y*Z^2"), Q("X*Z^2"));
  EXPECT_TRUE(wedge(eta, kDegree3).is_zero());
  EXPECT_FALSE(wedge(pencil_differential(Q("X"), Q("Y")), kDegree3).is_zero());
}

TEST(Wedge, AntisymmetricAndBilinear) {
  std::mt19937 rng(1);
  for (int it = 0; it < 10; ++it) {
    QOneForm a{random_form(rng, 2), random_form(rng, 2), random_form(rng, 2)};
    QOneForm b{random_form(rng, 3), random_form(rng, 3), random_form(rng, 3)};
    QOneForm c{random_form(rng, 3), random_form(rng, 3), random_form(rng, 3)};
    auto ab = wedge(a, b), ba = wedge(b, a);
    EXPECT_EQ(ab.xy, -ba.xy);
    EXPECT_EQ(ab.yz, -ba.yz);
    EXPECT_EQ(ab.xz, -ba.xz);
    QOneForm bc{b.A.scaled(3) + c.A, b.B.scaled(3) + c.B, b.C.scaled(3) + c.C};
    auto lhs = wedge(a, bc);
    auto ac = wedge(a, c);
    EXPECT_EQ(lhs.xy, ab.xy.scaled(3) + ac.xy);
    EXPECT_EQ(lhs.yz, ab.yz.scaled(3) + ac.yz);
    EXPECT_EQ(lhs.xz, ab.xz.scaled(3) + ac.xz);
  }
}

TEST(Pencil, Examples) {
  auto p = pencil_differential(Q("X"), Q("Y"));
  EXPECT_EQ(p.A, Q("Y"));
  EXPECT_EQ(p.B, Q("-X"));
  EXPECT_TRUE(p.C.is_zero());
  auto q = pencil_differential(Q("X*Y"), Q("Z^2"));
  EXPECT_EQ(q.A, Q("Y*Z^2"));
  EXPECT_EQ(q.B, Q("X*Z^2"));
  EXPECT_EQ(q.C, Q("-2*X*Y*Z"));
  try {
    pencil_differential(Q("X^2"), Q("X*Y"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoprime);
  }
  try {
    pencil_differential(Q("X^2"), Q("Y"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnequalDegrees);
  }
}

TEST(Pencil, EulerIdentityRandom) {
  std::mt19937 rng(2);
  for (int it = 0; it < 20; ++it) {
    const int d = 1 + it % 4;
    QMultiPoly F = random_form(rng, d), G = random_form(rng, d);
    if (F.is_zero() || G.is_zero() || homogeneous_gcd(F, G).degree() > 0) continue;
    auto w = pencil_differential(F, G);
    EXPECT_TRUE(euler_check(w.A, w.B, w.C).valid);
  }
}

TEST(Chart, Examples) {
  auto w = chart_restrict(form("Y*Z", "X*Z", "-2*X*Y"), Chart::Z);
  EXPECT_EQ(w.a, L("y"));
  EXPECT_EQ(w.b, L("x"));
  EXPECT_EQ(chart_restrict(Q("X^3-2*Y^3+Y*Z^2"), Chart::Z), L("x^3-2*y^3+y"));
  EXPECT_EQ(chart_restrict(Q("1"), Chart::Y), L("1"));
}

TEST(Chart, HomogenizeRoundTrip) {
  std::mt19937 rng(4);
  for (Chart c : {Chart::X, Chart::Y, Chart::Z}) {
    for (int it = 0; it < 5; ++it) {
      QMultiPoly f = random_form(rng, 4);
      if (f.valuation_in(chart_index(c)) > 0) continue;
      EXPECT_EQ(chart_homogenize(chart_restrict(f, c), c, 4), f);
    }
  }
}

TEST(Translate, Examples) {
  EXPECT_EQ(translate_to_origin(L("x"), Rational(1), Rational(0)), L("1+x"));
  EXPECT_EQ(translate_to_origin(L("x^2-y"), Rational(1), Rational(1)), L("x^2+2*x-y"));
  QMultiPoly h1 = chart_restrict(Q("3*X^3*Y^3-X^3*Z^3-2*Y^3*Z^3"), Chart::Z);
  EXPECT_EQ(translate_to_origin(h1, Rational(0), Rational(0)), L("-(x^3+2*y^3-3*x^3*y^3)"));
}

TEST(Gcd, HomogeneousAndNormalize) {
  EXPECT_EQ(homogeneous_gcd(Q("X^2*Z - Y^2*Z"), Q("X*Z^2 + Y*Z^2")), Q("X*Z + Y*Z"));
  EXPECT_EQ(homogeneous_gcd(Q("X^2"), Q("Y^2")), Q("1"));
  QOneForm w = {Q("Y*Z*(X+Z)"), Q("X*Z*(X+Z)"), Q("-2*X*Y*(X+Z)")};
  EXPECT_EQ(normalize_gcd(w), Q("X+Z"));
  EXPECT_EQ(w, form("Y*Z", "X*Z", "-2*X*Y"));
  EXPECT_EQ(exact_divide(Q("X^3 - Y^3"), Q("X - Y")), Q("X^2 + X*Y + Y^2"));
  EXPECT_THROW(exact_divide(Q("X^3 - Y^3"), Q("X + Y")), Error);
}

TEST(Render, Canonical) {
  EXPECT_EQ(render(Q("-2*Y^3*Z^3 + 3*X^3*Y^3 - X^3*Z^3")), "3*X^3*Y^3 - X^3*Z^3 - 2*Y^3*Z^3");
  EXPECT_EQ(render(Q("1/2*X - 3/4")), "1/2*X - 3/4");
  EXPECT_EQ(render(Q("0")), "0");
  EXPECT_EQ(render(Q("-X")), "-X");
  EXPECT_EQ(Q(render(Q("(X+2/3*Y-Z)^3"))), Q("(X+2/3*Y-Z)^3"));
}
