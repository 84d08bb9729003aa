#include <gtest/gtest.h>

#include <random>

#include "dnull/errors.hpp"
#include "dnull/groebner.hpp"
#include "oracles/oracles.hpp"

using namespace dnull;

namespace {

struct Vars {
  RingPtr R = PolyRing::create(FieldKind::Q);
  std::vector<Poly> v;
  explicit Vars(int n) {
    for (int i = 0; i < n; ++i)
      v.push_back(Poly::variable(R, R->add_variable("v" + std::to_string(i))));
  }
  Poly c(long k) const { return Poly::constant(R, Coeff(k)); }
};

}  // namespace

// y, y1, y2 standing for y, y', y'' of F = {y^2} prolonged twice.
TEST(Groebner, ProlongedSquareBasis) {
  Vars r(3);
  const Poly &y = r.v[0], &y1 = r.v[1], &y2 = r.v[2];
  std::vector<Poly> F{y * y, r.c(2) * y * y1, r.c(2) * y1 * y1 + r.c(2) * y * y2};
  GroebnerBasis G = buchberger(F);
  EXPECT_TRUE(G.reduced);
  EXPECT_FALSE(G.is_unit());
  for (const Poly& g : G.generators) EXPECT_TRUE(normal_form(g, G.generators, G.order).is_zero());
  EXPECT_TRUE(ideal_membership(y1.pow(3), F));
  EXPECT_FALSE(ideal_membership(y1.pow(2), F));
  EXPECT_TRUE(radical_membership(y1, F));
  EXPECT_FALSE(radical_membership(y2, F));
}

TEST(Groebner, UnitIdealCollapsesToOne) {
  Vars r(1);
  const Poly& y = r.v[0];
  GroebnerBasis G = buchberger(std::vector<Poly>{y - r.c(1), y * y});
  ASSERT_TRUE(G.is_unit());
  EXPECT_EQ(G.generators.size(), 1u);
}

TEST(Groebner, SaturationRemovesTheSeparantComponent) {
  Vars r(2);
  const Poly &x = r.v[0], &y = r.v[1];
  // (x y) : x^inf = (y)
  std::vector<Poly> F{x * y};
  std::vector<Poly> S{x};
  EXPECT_TRUE(saturation_membership(y, F, S));
  EXPECT_FALSE(ideal_membership(y, F));
  EXPECT_FALSE(saturation_membership(x, F, S));
}

TEST(Groebner, LexAndGrevlexAgreeOnMembership) {
  Vars r(3);
  const Poly &a = r.v[0], &b = r.v[1], &c = r.v[2];
  std::vector<Poly> F{a * b - c, b * c - a, a * c - b};
  MonomialOrder lex{OrderKind::lex, {}};
  for (const Poly& q : {a * a * b - a * c, a.pow(3) - a, a + b, a * b * c - c * c})
    EXPECT_EQ(ideal_membership(q, F, {}, lex), ideal_membership(q, F)) << q.to_string();
}

TEST(Groebner, CapsFireWithoutWrongAnswers) {
  Vars r(4);
  std::vector<Poly> F;
  for (int i = 0; i < 4; ++i) F.push_back(r.v[i] * r.v[(i + 1) % 4] - r.v[(i + 2) % 4].pow(2) + r.c(i));
  ResourceCaps caps;
  caps.max_basis_size = 5;  // the full basis has 7 elements
  EXPECT_THROW(buchberger(F, {}, caps), ResourceCapError);
  EXPECT_EQ(buchberger(F).generators.size(), 7u);
}

// A handful of homogeneous systems cross-checked against the Macaulay matrix;
// the 100-system sweep lives in the acceptance binary.
TEST(Groebner, AgreesWithMacaulayOracle) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 15; ++trial) {
    const int nv = 3;
    Vars r(nv);
    std::vector<oracle::MPoly> F;
    for (int i = 0; i < 2; ++i) F.push_back(oracle::random_homogeneous(rng, nv, 2, 3));
    oracle::MPoly q = oracle::random_homogeneous(rng, nv, 3, 4);
    if (trial % 2 == 0) q = oracle::add(oracle::mul(oracle::random_homogeneous(rng, nv, 1, 2), F[0]),
                                        oracle::mul(oracle::random_homogeneous(rng, nv, 1, 2), F[1]));
    std::vector<Poly> P;
    for (const auto& g : F) P.push_back(oracle::to_poly(g, r.R));
    EXPECT_EQ(ideal_membership(oracle::to_poly(q, r.R), P), oracle::macaulay_member(q, F, nv))
        << "trial " << trial;
  }
}
