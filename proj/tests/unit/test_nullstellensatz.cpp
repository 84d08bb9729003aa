#include <gtest/gtest.h>

#include <random>

#include "dnull/errors.hpp"
#include "dnull/groebner.hpp"
#include "dnull/nullstellensatz.hpp"

using namespace dnull;

namespace {

DiffSystem with_target(DiffRingPtr R, std::vector<DiffPoly> F, std::optional<DiffPoly> f = {}) {
  DiffSystem s;
  s.ring = std::move(R);
  s.F = std::move(F);
  s.f = std::move(f);
  return s;
}

}  // namespace

TEST(Membership, ExampleThreeSmallest) {
  DiffSystem sys = example_family({ExampleKind::ex3, 1});
  EXPECT_EQ(radical_membership_at(sys, 1).status, MembershipStatus::not_in_radical);
  EXPECT_EQ(radical_membership_at(sys, 2).status, MembershipStatus::in_radical);
}

TEST(Membership, TargetInFAtLevelZero) {
  auto R = DiffRing::create(1, {"y"});
  DiffPoly y = DiffPoly::y(R, 0), y1 = DiffPoly::y(R, 0, {1});
  DiffSystem sys = with_target(R, {y * y1 - DiffPoly::constant(R, 1), y}, y);
  EXPECT_EQ(radical_membership_at(sys, 0).status, MembershipStatus::in_radical);
}

TEST(Membership, NonUnitTargetUsesTheRadical) {
  auto R = DiffRing::create(1, {"y"});
  DiffPoly y = DiffPoly::y(R, 0), y1 = DiffPoly::y(R, 0, {1});
  // y' is in sqrt((y^2, 2yy', 2y'^2 + 2yy'')) but not in the ideal at h = 1.
  DiffSystem sys = with_target(R, {y * y}, y1);
  EXPECT_EQ(radical_membership_at(sys, 1).status, MembershipStatus::not_in_radical);
  EXPECT_EQ(radical_membership_at(sys, 2).status, MembershipStatus::in_radical);
  MinimalT mt = minimal_t(sys, 4);
  ASSERT_TRUE(mt.t.has_value());
  EXPECT_EQ(*mt.t, 2u);
}

TEST(MinimalT, ExampleOne) {
  for (unsigned k = 2; k <= 3; ++k) {
    MinimalT mt = minimal_t(example_family({ExampleKind::ex1, k}), k + 1);
    ASSERT_TRUE(mt.t.has_value());
    EXPECT_EQ(*mt.t, k);
  }
}

TEST(MinimalT, ExampleTwoOverRationalFunctions) {
  for (unsigned n = 1; n <= 2; ++n) {
    MinimalT mt = minimal_t(example_family({ExampleKind::ex2, n}), n + 1);
    ASSERT_TRUE(mt.t.has_value());
    EXPECT_EQ(*mt.t, n);
  }
}

TEST(MinimalT, ExampleThreeDoublesWithN) {
  MinimalT mt = minimal_t(example_family({ExampleKind::ex3, 2}), 5);
  ASSERT_TRUE(mt.t.has_value());
  EXPECT_EQ(*mt.t, 4u);
  EXPECT_EQ(mt.verdicts[3].status, MembershipStatus::not_in_radical);
}

TEST(MinimalT, ExampleFourOneDerivation) {
  MinimalT mt = minimal_t(example_family({ExampleKind::ex4, 1}), 3);
  ASSERT_TRUE(mt.t.has_value());
  EXPECT_EQ(*mt.t, 2u);
}

// With two derivations the family is already inconsistent after two
// differentiations: d_y^2 g1 + d_x g2 - 2 u_y d_y g2 - 2 (1 + u_yy) g2 = -2
// for g1 = u_x - u_y^2, g2 = 1 - u_yy.
TEST(MinimalT, ExampleFourTwoDerivationsNeedsOnlyTwo) {
  DiffSystem sys = example_family({ExampleKind::ex4, 2});
  const auto& R = sys.ring;
  DiffPoly ux = DiffPoly::y(R, 0, {1, 0}), uy = DiffPoly::y(R, 0, {0, 1}),
           uyy = DiffPoly::y(R, 0, {0, 2});
  DiffPoly one = DiffPoly::constant(R, 1), two = DiffPoly::constant(R, 2);
  DiffPoly g1 = ux - uy * uy, g2 = one - uyy;
  DiffPoly combo = apply_derop(g1, DerOp({0, 2})) + differentiate(g2, 0) - two * uy * differentiate(g2, 1) -
                   two * (one + uyy) * g2;
  EXPECT_EQ(combo, DiffPoly::constant(R, -2));

  MinimalT mt = minimal_t(sys, 2);
  ASSERT_TRUE(mt.t.has_value());
  EXPECT_EQ(*mt.t, 2u);
}

TEST(MinimalT, MonotoneAcrossLevels) {
  for (ExampleSelector sel : {ExampleSelector{ExampleKind::ex1, 2}, ExampleSelector{ExampleKind::ex3, 1},
                              ExampleSelector{ExampleKind::ex2, 1}}) {
    DiffSystem sys = example_family(sel);
    bool seen = false;
    for (std::uint32_t h = 0; h <= 4; ++h) {
      bool in = radical_membership_at(sys, h).status == MembershipStatus::in_radical;
      EXPECT_TRUE(!seen || in) << to_string(sel.kind) << " h=" << h;
      seen = seen || in;
    }
  }
}

TEST(MinimalT, NotFoundWithinHMax) {
  auto R = DiffRing::create(1, {"y"});
  DiffSystem sys = with_target(R, {DiffPoly::y(R, 0, {1})}, DiffPoly::y(R, 0));
  MinimalT mt = minimal_t(sys, 3);
  EXPECT_FALSE(mt.t.has_value());
  EXPECT_EQ(mt.verdicts.size(), 4u);
}

TEST(MinimalT, CapIsReportedAsInconclusive) {
  ResourceCaps caps;
  caps.max_basis_size = 2;
  DiffSystem sys = example_family({ExampleKind::ex3, 2});
  EXPECT_EQ(radical_membership_at(sys, 3, caps).status, MembershipStatus::inconclusive_cap);
  EXPECT_THROW(minimal_t(sys, 4, caps), InconclusiveScan);
}

TEST(Examples, Generators) {
  DiffSystem e1 = example_family({ExampleKind::ex1, 3});
  ASSERT_EQ(e1.F.size(), 2u);
  const auto& R1 = e1.ring;
  EXPECT_EQ(e1.F[0], DiffPoly::y(R1, 0, {1}) - DiffPoly::constant(R1, 1));
  EXPECT_EQ(e1.F[1], DiffPoly::y(R1, 0).pow(3));
  EXPECT_TRUE(e1.target().is_constant());

  DiffSystem e3 = example_family({ExampleKind::ex3, 2});
  const auto& R3 = e3.ring;
  DiffPoly y1 = DiffPoly::y(R3, 0), y2 = DiffPoly::y(R3, 1);
  EXPECT_EQ(e3.F, (std::vector<DiffPoly>{y1 * y1, y1 - y2 * y2,
                                         DiffPoly::constant(R3, 1) - DiffPoly::y(R3, 1, {1})}));

  DiffSystem e4 = example_family({ExampleKind::ex4, 2});
  const auto& R4 = e4.ring;
  EXPECT_EQ(R4->m(), 2u);
  DiffPoly ux = DiffPoly::y(R4, 0, {1, 0}), uy = DiffPoly::y(R4, 0, {0, 1});
  EXPECT_EQ(e4.F, (std::vector<DiffPoly>{ux * ux, ux - uy * uy,
                                         DiffPoly::constant(R4, 1) - DiffPoly::y(R4, 0, {0, 2})}));

  // a = x^n / n! differentiates to 1 after n steps.
  DiffSystem e2 = example_family({ExampleKind::ex2, 3});
  ASSERT_EQ(e2.F.size(), 4u);
  DiffPoly last = e2.F.back();
  DiffPoly a = DiffPoly::y(e2.ring, 2) - last;
  EXPECT_EQ(apply_derop(a, DerOp({3})), DiffPoly::constant(e2.ring, 1));
}

TEST(Examples, DeclaredDerivationCountMustMatch) {
  EXPECT_THROW(example_family({ExampleKind::ex4, 2}, 1), UsageError);
  EXPECT_THROW(example_family({ExampleKind::ex2, 2}, 2), UsageError);
  EXPECT_NO_THROW(example_family({ExampleKind::ex4, 3}, 3));
}

TEST(DegreeLemma, Fixtures) {
  auto R = DiffRing::create(1, {"y"});
  DiffPoly y = DiffPoly::y(R, 0);
  EXPECT_TRUE(degreelem_claim_check({y * y}, y, 2, 0));
  EXPECT_TRUE(degreelem_claim_check({y}, y, 1, 0));
  EXPECT_THROW(degreelem_claim_check({y * y}, y, 1, 0), UsageError);

  auto R2 = DiffRing::create(1, {"y1", "y2"});
  DiffPoly p = DiffPoly::y(R2, 0) * DiffPoly::y(R2, 1);
  EXPECT_TRUE(degreelem_claim_check({p}, p, 1, 0));
}

// a^d in (F) by construction: F = {a^d * b} with b = 1, or a^d plus multiples.
TEST(DegreeLemma, RandomizedConstructedInstances) {
  std::mt19937_64 rng(77);
  auto R = DiffRing::create(1, {"y1", "y2"});
  std::vector<DiffPoly> atoms{DiffPoly::y(R, 0), DiffPoly::y(R, 1), DiffPoly::y(R, 0, {1})};
  std::uniform_int_distribution<int> pick(0, 2), cf(1, 3), deg(1, 2);
  for (int trial = 0; trial < 5; ++trial) {
    DiffPoly a = atoms[pick(rng)] + DiffPoly::constant(R, cf(rng)) * atoms[pick(rng)];
    if (a.is_constant()) continue;
    unsigned d = static_cast<unsigned>(deg(rng));
    std::vector<DiffPoly> F{a.pow(d)};
    if (trial % 2) F.push_back(atoms[pick(rng)] * a.pow(d) + a.pow(d));
    EXPECT_TRUE(degreelem_claim_check(F, a, d, 0)) << a.to_string() << " d=" << d;
  }
}
