#include <gtest/gtest.h>

#include "dnull/bounds.hpp"
#include "dnull/errors.hpp"
#include "oracles/oracles.hpp"

using namespace dnull;

namespace {

OrderStats stats(std::uint32_t H, std::uint32_t D) {
  OrderStats s;
  s.h = {H};
  s.H = H;
  s.D = D;
  return s;
}

Integer val(const AckExpr& e) {
  auto v = e.evaluate();
  EXPECT_TRUE(v.has_value()) << e.to_string();
  return v.value_or(Integer(-1));
}

}  // namespace

TEST(Ackermann, Examples) {
  EXPECT_EQ(ackermann(0, 5).value(), 6);
  EXPECT_EQ(ackermann(3, 1).value(), 13);
  EXPECT_EQ(ackermann(3, 2).value(), 29);
  EXPECT_EQ(ackermann(4, 1).value(), 65533);
  AckExpr big = ackermann(9, 9, 64);
  EXPECT_EQ(big.op(), AckExpr::Op::ack);
  EXPECT_EQ(big.to_string(), "(ack 9 9)");
}

TEST(Ackermann, ClosedFormsMatchRowTable) {
  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned n = 0; n <= 8; ++n) {
      auto o = oracle::ackermann(m, n);
      ASSERT_TRUE(o.has_value());
      EXPECT_EQ(ackermann_value(m, Integer(n)).value(), Integer(static_cast<unsigned long>(*o)))
          << m << "," << n;
    }
  EXPECT_EQ(ackermann_value(4, Integer(0)).value(), Integer(static_cast<unsigned long>(*oracle::ackermann(4, 0))));
  EXPECT_EQ(ackermann_value(4, Integer(1)).value(), Integer(static_cast<unsigned long>(*oracle::ackermann(4, 1))));
}

TEST(Ackermann, StrictlyIncreasingInN) {
  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned n = 0; n < 20; ++n)
      EXPECT_LT(ackermann_value(m, Integer(n)).value(), ackermann_value(m, Integer(n + 1)).value());
}

TEST(Ackermann, TowerBeyondCapStaysSymbolic) {
  EXPECT_FALSE(ackermann_value(4, Integer(2), 4096).has_value());
  EXPECT_TRUE(ackermann_value(4, Integer(2), 70000).has_value());
  EXPECT_FALSE(ackermann_value(5, Integer(1)).has_value());
}

TEST(AckExpr, TextAndJsonRoundTrip) {
  AckExpr e = AckExpr::log2ceil(AckExpr::ack(
      9, AckExpr::max({AckExpr::constant(1), AckExpr::constant(1),
                       AckExpr::pow(AckExpr::constant(2), AckExpr::constant(9))})));
  EXPECT_EQ(AckExpr::parse(e.to_string()), e);
  EXPECT_EQ(AckExpr::from_json(e.to_json()), e);
  AckExpr f = AckExpr::sub(AckExpr::binom(AckExpr::constant(5), AckExpr::constant(2)),
                           AckExpr::mul(AckExpr::add(AckExpr::constant(1), AckExpr::constant(2)),
                                        AckExpr::constant(-3)));
  EXPECT_EQ(AckExpr::parse(f.to_string()), f);
  EXPECT_EQ(AckExpr::from_json(f.to_json()), f);
  EXPECT_EQ(val(f), 19);
  EXPECT_THROW(AckExpr::parse("(ack 1"), ParseError);
}

TEST(AckExpr, SimplifyCollapsesEvaluableSubtrees) {
  AckExpr e = AckExpr::ack(9, AckExpr::max({AckExpr::constant(1), AckExpr::constant(2)}));
  AckExpr s = e.simplify();
  EXPECT_EQ(s.to_string(), "(ack 9 2)");
  EXPECT_FALSE(s.evaluate().has_value());
  EXPECT_EQ(val(AckExpr::log2ceil(AckExpr::constant(65533))), 16);
}

TEST(Bounds, QOfExamples) {
  EXPECT_EQ(val(q_of(stats(1, 2), 1)), 512);
  EXPECT_EQ(val(q_of(stats(0, 0), 1)), 9);
  EXPECT_EQ(val(q_of(stats(2, 5), 3)), 262144);
}

TEST(Bounds, StructuralBoundsAreSymbolic) {
  BoundReport r = structural_bounds(stats(1, 2), 1, 1);
  ASSERT_NE(r.find("Q"), nullptr);
  EXPECT_EQ(val(r.find("Q")->expr), 512);
  EXPECT_EQ(r.find("maxcor")->expr.to_string(), "(ack 8 511)");
  EXPECT_EQ(r.find("L")->expr.to_string(), "(log2ceil (ack 8 511))");
  EXPECT_THROW(structural_bounds(stats(1, 2), 0, 1), UsageError);
}

// Toy substitution A(k, x) -> x + 2 turns the bound into an evaluable
// tree that must grow with Q.
TEST(Bounds, StructuralBoundsMonotoneUnderToySubstitution) {
  Integer prev(-1);
  for (std::uint32_t H = 0; H <= 3; ++H) {
    Integer v = val(structural_bounds(stats(H, 2), 1, 1).find("maxcor")->expr.toy());
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(Bounds, DegreeGrowthStep) {
  EXPECT_EQ(val(degree_growth_step(Integer(2), Integer(1), 1)), 4096);
  EXPECT_EQ(val(degree_growth_step(Integer(0), Integer(3), 2)), 0);
  EXPECT_EQ(val(degree_growth_step(Integer(1), Integer(0), 1)), 16);
  // Monotone on a small grid.
  for (long D = 1; D <= 3; ++D)
    for (long H = 0; H <= 2; ++H)
      for (unsigned m = 1; m <= 2; ++m) {
        Integer v = val(degree_growth_step(Integer(D), Integer(H), m));
        EXPECT_LE(v, val(degree_growth_step(Integer(D + 1), Integer(H), m)));
        EXPECT_LE(v, val(degree_growth_step(Integer(D), Integer(H + 1), m)));
        EXPECT_LE(v, val(degree_growth_step(Integer(D), Integer(H), m + 1)));
      }
}

TEST(Bounds, LiftingQuantities) {
  EXPECT_EQ(lemmaf_q(3, 1), 2u);
  EXPECT_EQ(lemmaf_q(0, 2), 0u);
  AckExpr e = degreelem_order(AckExpr::constant(1), AckExpr::constant(1), AckExpr::constant(1));
  EXPECT_EQ(val(e), 64);

  LiftingInput in;
  in.F = stats(1, 2);
  in.ord_f = 3;
  in.min_ord_A = 1;
  BoundReport r = lifting_bounds(in);
  EXPECT_EQ(val(r.find("q")->expr), 2);
  for (const char* name : {"p", "d", "degreelem", "t_rhs"}) EXPECT_NE(r.find(name), nullptr) << name;
  EXPECT_FALSE(r.find("t_rhs")->expr.evaluate().has_value());
}

TEST(Bounds, ClosedFormStructure) {
  EXPECT_EQ(t_bound_closed(stats(1, 2), 1, 1), AckExpr::ack(9, AckExpr::constant(2)));
  OrderStats ex4;
  ex4.h = {2};
  ex4.H = 2;
  ex4.D = 2;
  EXPECT_EQ(t_bound_closed(ex4, 2, 1), AckExpr::ack(10, AckExpr::constant(2)));
  EXPECT_EQ(t_bound_closed(stats(0, 1), 1, 1), AckExpr::ack(9, AckExpr::constant(1)));
  EXPECT_THROW(t_bound_closed(stats(0, 1), 0, 1), UsageError);
}

TEST(Bounds, ClosedFormMonotoneUnderToySubstitution) {
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned n = 1; n <= 3; ++n)
      for (std::uint32_t H = 0; H <= 3; ++H)
        for (std::uint32_t D = 0; D <= 3; ++D) {
          Integer v = val(t_bound_closed(stats(H, D), m, n).toy());
          EXPECT_LE(v, val(t_bound_closed(stats(H + 1, D), m, n).toy()));
          EXPECT_LE(v, val(t_bound_closed(stats(H, D + 1), m, n).toy()));
          EXPECT_LE(v, val(t_bound_closed(stats(H, D), m, n + 1).toy()));
        }
}

TEST(Bounds, ProofRecurrencePrefix) {
  RecurrenceReport r = proof_recurrence_check(1, 2, 1, 1, 2);
  EXPECT_TRUE(r.prefix_ok);
  EXPECT_TRUE(r.x_ok);
  EXPECT_GE(r.verified_steps, 1u);
  for (const RecurrenceRow& row : r.rows) {
    EXPECT_TRUE(row.H_ok) << row.k;
    EXPECT_TRUE(row.D_ok) << row.k;
  }
  RecurrenceReport empty = proof_recurrence_check(1, 2, 1, 1, 0);
  EXPECT_TRUE(empty.rows.empty());
  EXPECT_TRUE(empty.prefix_ok);
}

// With integer ceilings of the cube root and the logarithm the inequality is
// too coarse near x = 9; the dyadic bounds settle it.
TEST(Bounds, XInequalityNeedsFinerThanIntegerCeilings) {
  RecurrenceReport r = proof_recurrence_check(1, 2, 1, 1, 0, kDefaultBitCap, 9, 64);
  ASSERT_EQ(r.x_checks.size(), 56u);
  for (const XCheck& x : r.x_checks) EXPECT_TRUE(x.ok) << x.x;
  EXPECT_FALSE(r.x_checks.front().coarse_ok);
  EXPECT_TRUE(r.x_checks.back().coarse_ok);
}
