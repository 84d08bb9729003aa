#include <gtest/gtest.h>

#include "dnull/diff_ring.hpp"
#include "dnull/errors.hpp"

using namespace dnull;

namespace {

Derivative d(std::uint32_t j, std::vector<std::uint32_t> ks) { return Derivative{j, DerOp(ks)}; }

}  // namespace

TEST(DerOp, LatticeOperations) {
  DerOp a({1, 2}), b({2, 0});
  EXPECT_EQ(a.order(), 3u);
  EXPECT_EQ(a.lcm(b), DerOp({2, 2}));
  EXPECT_TRUE(a.divides(DerOp({1, 3})));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(a.complement_in(DerOp({3, 2})), DerOp({2, 0}));
  EXPECT_EQ(a + b, DerOp({3, 2}));
}

TEST(Ranking, OrderlyComparesOrderThenIndeterminateThenLex) {
  EXPECT_LT(ranking_compare(d(1, {1, 0}), d(0, {2, 0})), 0);  // order first
  EXPECT_LT(ranking_compare(d(0, {1, 0}), d(1, {1, 0})), 0);  // then indeterminate
  EXPECT_LT(ranking_compare(d(0, {0, 1}), d(0, {1, 0})), 0);  // then lex
  EXPECT_EQ(ranking_compare(d(0, {1, 1}), d(0, {1, 1})), 0);
}

TEST(Ranking, EliminationPutsIndeterminateFirst) {
  Ranking e{RankingKind::elimination};
  EXPECT_GT(ranking_compare(d(1, {0}), d(0, {5}), e), 0);
  EXPECT_LT(ranking_compare(d(0, {1}), d(0, {2}), e), 0);
}

TEST(DiffRing, NamesAndLookups) {
  auto R = DiffRing::create(2, {"u", "v"});
  EXPECT_EQ(R->name_of(d(0, {0, 0})), "u");
  EXPECT_EQ(R->name_of(d(1, {2, 1})), "v[2,1]");
  EXPECT_EQ(R->indet_index("v"), 1);
  EXPECT_EQ(R->indet_index("w"), -1);
  VarId a = R->var(d(1, {2, 1}));
  EXPECT_EQ(R->var(d(1, {2, 1})), a);
  EXPECT_EQ(R->derivative_of(a), d(1, {2, 1}));
  EXPECT_THROW(DiffRing::create(2, {"y"}, FieldKind::Qx), UsageError);
}

TEST(DiffPoly, LeaderInitialSeparant) {
  auto R = DiffRing::create(1, {"y"});
  DiffPoly y = DiffPoly::y(R, 0), y1 = DiffPoly::y(R, 0, {1});
  DiffPoly f = y * y1.pow(2) + y1 + DiffPoly::constant(R, 3);
  LeaderData ld = leader_data(f);
  EXPECT_EQ(ld.leader, d(0, {1}));
  EXPECT_EQ(ld.degree, 2u);
  EXPECT_EQ(ld.initial, y);
  EXPECT_EQ(ld.separant, DiffPoly::constant(R, 2) * y * y1 + DiffPoly::constant(R, 1));
  EXPECT_THROW(leader(DiffPoly::constant(R, 1)), UsageError);
}

TEST(DiffPoly, DifferentiationIsADerivation) {
  auto R = DiffRing::create(2, {"u"});
  DiffPoly a = DiffPoly::y(R, 0, {1, 0}), b = DiffPoly::y(R, 0, {0, 2});
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(differentiate(a * b, i), differentiate(a, i) * b + a * differentiate(b, i));
  EXPECT_EQ(differentiate(a, 1), DiffPoly::y(R, 0, {1, 1}));
  EXPECT_EQ(apply_derop(a, DerOp({1, 1})), DiffPoly::y(R, 0, {2, 1}));
}

TEST(DiffPoly, CoefficientsDifferentiateOverQx) {
  auto R = DiffRing::create(1, {"y"}, FieldKind::Qx);
  Coeff x = Coeff::x();
  DiffPoly a = DiffPoly::constant(R, x * x / Coeff(2));
  DiffPoly f = DiffPoly::y(R, 0) - a;
  EXPECT_EQ(differentiate(f, 0), DiffPoly::y(R, 0, {1}) - DiffPoly::constant(R, x));
  EXPECT_EQ(apply_derop(f, DerOp({2})), DiffPoly::y(R, 0, {2}) - DiffPoly::constant(R, 1));
}

TEST(DiffPoly, OrderStatistics) {
  auto R = DiffRing::create(1, {"y1", "y2"});
  std::vector<DiffPoly> F{DiffPoly::y(R, 0, {2}) * DiffPoly::y(R, 1), DiffPoly::y(R, 1, {1}).pow(3)};
  DiffPoly f = DiffPoly::y(R, 0, {4});
  OrderStats s = order_stats(F, &f);
  EXPECT_EQ(s.h, (std::vector<std::uint32_t>{2, 1}));
  EXPECT_EQ(s.H, 2u);
  EXPECT_EQ(s.D, 3u);
  EXPECT_EQ(s.ord_f, 4u);
}

TEST(DiffPoly, DeropsEnumerateByOrderThenLex) {
  auto ops = derops_up_to(2, 2);
  ASSERT_EQ(ops.size(), 6u);
  EXPECT_EQ(ops.front(), DerOp({0, 0}));
  for (std::size_t i = 1; i < ops.size(); ++i) EXPECT_LE(ops[i - 1].order(), ops[i].order());
}

TEST(DiffPoly, ProlongationCountsAndDropsZeros) {
  auto R = DiffRing::create(1, {"y"});
  DiffPoly y = DiffPoly::y(R, 0);
  DiffPoly one = DiffPoly::constant(R, 1);
  auto P = prolong({y * y, y - one}, 2);
  // y^2, 2yy', 2y'^2 + 2yy'', y - 1, y', y''
  EXPECT_EQ(P.size(), 6u);
  // constants vanish after one derivative
  auto Q = prolong({one + y}, 1);
  EXPECT_EQ(Q.size(), 2u);
}

TEST(DiffPoly, DiffCompareIsATotalOrder) {
  auto R = DiffRing::create(1, {"y"});
  DiffPoly y = DiffPoly::y(R, 0), y1 = DiffPoly::y(R, 0, {1}), c = DiffPoly::constant(R, 2);
  EXPECT_LT(diff_compare(c, y), 0);
  EXPECT_LT(diff_compare(y, y * y), 0);
  EXPECT_LT(diff_compare(y * y, y1), 0);
  EXPECT_EQ(diff_compare(y1, y1), 0);
}
