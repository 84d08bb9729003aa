#include <gtest/gtest.h>

#include <random>

#include "dnull/coeff.hpp"
#include "dnull/errors.hpp"
#include "dnull/poly.hpp"

using namespace dnull;

namespace {

struct Xyz {
  RingPtr R = PolyRing::create(FieldKind::Q);
  VarId x = R->add_variable("x"), y = R->add_variable("y"), z = R->add_variable("z");
  Poly X = Poly::variable(R, x), Y = Poly::variable(R, y), Z = Poly::variable(R, z);
  Poly c(long v) const { return Poly::constant(R, Coeff(v)); }
};

}  // namespace

TEST(Coeff, RationalsStayCanonical) {
  Coeff a(Rational(6, 4));
  EXPECT_EQ(a.rational().get_num(), 3);
  EXPECT_EQ(a.rational().get_den(), 2);
  EXPECT_EQ((a - a).is_zero(), true);
  EXPECT_EQ((a * a.inverse()).is_one(), true);
  EXPECT_EQ(Coeff(Rational(-1, 2)).to_string(), "-1/2");
}

TEST(Coeff, RationalFunctionsDifferentiate) {
  Coeff x = Coeff::x();
  Coeff a = x * x * x / Coeff(6);
  EXPECT_FALSE(a.is_rational());
  Coeff d = a.derivative().derivative().derivative();
  EXPECT_TRUE(d.is_one());
  // d/dx (1/x) = -1/x^2
  Coeff inv = x.inverse();
  EXPECT_EQ(inv.derivative(), -(x * x).inverse());
  // Rational functions collapse back to Q when constant.
  EXPECT_TRUE((x / x).is_rational());
  EXPECT_TRUE(Coeff(5).derivative().is_zero());
}

TEST(Poly, CanonicalFormMergesAndDropsZeros) {
  Xyz r;
  Poly p = r.X * r.Y + r.Y * r.X - r.X * r.Y.scaled(Coeff(2));
  EXPECT_TRUE(p.is_zero());
  Poly q = (r.X + r.Y) * (r.X - r.Y);
  EXPECT_EQ(q, r.X.pow(2) - r.Y.pow(2));
  EXPECT_EQ(q.total_degree(), 2u);
  EXPECT_EQ(q.degree_in(r.z), 0u);
}

TEST(Poly, CoefficientExtractionAndPartials) {
  Xyz r;
  Poly p = r.X.pow(2) * r.Y + r.c(3) * r.X * r.Z - r.c(1);
  EXPECT_EQ(p.coeff_of(r.x, 2), r.Y);
  EXPECT_EQ(p.coeff_of(r.x, 1), r.c(3) * r.Z);
  EXPECT_EQ(p.coeff_of(r.x, 0), r.c(-1));
  EXPECT_EQ(p.partial(r.x), r.c(2) * r.X * r.Y + r.c(3) * r.Z);
  EXPECT_EQ(p.variables().size(), 3u);
}

TEST(Poly, MonicDividesByLeadingCoefficient) {
  Xyz r;
  Poly p = r.c(4) * r.X.pow(2) + r.c(2) * r.Y;
  Poly m = p.monic();
  EXPECT_TRUE(m.leading_term().coeff.is_one());
  EXPECT_EQ(m.scaled(p.leading_term().coeff), p);
}

TEST(Poly, PseudoDivisionIdentityHolds) {
  Xyz r;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-3, 3), e(0, 3);
  auto rnd = [&] {
    Poly p(r.R);
    for (int i = 0; i < 4; ++i)
      p += r.c(c(rng)) * r.X.pow(e(rng)) * r.Y.pow(e(rng)) * r.Z.pow(e(rng) % 2);
    return p;
  };
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Poly g = rnd(), b = rnd();
    if (b.degree_in(r.x) == 0) continue;
    PseudoDivision pd = pseudo_divide(g, b, r.x);
    Poly init = b.coeff_of(r.x, b.degree_in(r.x));
    EXPECT_EQ(init.pow(pd.exponent) * g, pd.quotient * b + pd.remainder);
    EXPECT_LT(pd.remainder.degree_in(r.x), b.degree_in(r.x));
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(Poly, GrevlexAndLexDisagreeWhereExpected) {
  Monomial a({{0, 1}, {1, 2}});  // x y^2
  Monomial b({{0, 2}});          // x^2
  EXPECT_GT(compare(a, b, OrderKind::grevlex), 0);
  EXPECT_LT(compare(a, b, OrderKind::lex), 0);
}

TEST(Poly, ToStringIsReadable) {
  Xyz r;
  EXPECT_EQ((r.X.pow(2) - r.c(1)).to_string(), "x^2 - 1");
  EXPECT_EQ(Poly(r.R).to_string(), "0");
}
