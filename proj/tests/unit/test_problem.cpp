#include <gtest/gtest.h>

#include "dnull/errors.hpp"
#include "dnull/nullstellensatz.hpp"
#include "dnull/problem.hpp"

using namespace dnull;

namespace {

ParseError parse_error_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError("", 0, 0);
}

}  // namespace

TEST(Problem, ParsesExampleOne) {
  ProblemFile p = parse_problem(
      "[ring]\n"
      "derivations = 1\n"
      "indeterminates = y1\n"
      "[system]\n"
      "F = y1[1] - 1; y1^2\n");
  ASSERT_EQ(p.system.F.size(), 2u);
  const auto& R = p.system.ring;
  EXPECT_EQ(p.system.F[0], DiffPoly::y(R, 0, {1}) - DiffPoly::constant(R, 1));
  EXPECT_EQ(p.system.F[1], DiffPoly::y(R, 0).pow(2));
  EXPECT_FALSE(p.system.f.has_value());
  EXPECT_EQ(p.field, FieldKind::Q);
}

TEST(Problem, ParsesPartialDerivativesAndComments) {
  ProblemFile p = parse_problem(
      "# two derivations\n"
      "[ring]\n"
      "derivations = 2\n"
      "indeterminates = u\n"
      "[system]\n"
      "F = u[2,0]^2   # one generator\n"
      "f = 3/2*u[0,1]\n"
      "[ranking]\n"
      "type = orderly\n");
  const auto& R = p.system.ring;
  ASSERT_EQ(p.system.F.size(), 1u);
  EXPECT_EQ(p.system.F[0], DiffPoly::y(R, 0, {2, 0}).pow(2));
  ASSERT_TRUE(p.system.f.has_value());
  EXPECT_EQ(*p.system.f, DiffPoly::constant(R, Coeff(Rational(3, 2))) * DiffPoly::y(R, 0, {0, 1}));
}

TEST(Problem, RationalFunctionField) {
  ProblemFile p = parse_problem(
      "[ring]\nderivations = 1\nindeterminates = y\nfield = Q(x)\n"
      "[system]\nF = y - x^2/2\n");
  const auto& R = p.system.ring;
  DiffPoly d = differentiate(p.system.F[0], 0);
  EXPECT_EQ(d, DiffPoly::y(R, 0, {1}) - DiffPoly::constant(R, Coeff::x()));
}

TEST(Problem, ErrorsCarryPositions) {
  ParseError arity = parse_error_of("[ring]\nderivations = 1\nindeterminates = y1\n[system]\nF = y1[1,0]\n");
  EXPECT_EQ(arity.line(), 5u);
  EXPECT_EQ(arity.column(), 7u);  // at the multi-index
  EXPECT_NE(std::string(arity.what()).find("multi-index has 2 entries"), std::string::npos);

  ParseError unknown = parse_error_of("[ring]\nderivations = 1\nindeterminates = y\n[system]\nF = y + z\n");
  EXPECT_EQ(unknown.line(), 5u);
  EXPECT_NE(std::string(unknown.what()).find("unknown name 'z'"), std::string::npos);

  ParseError syntax = parse_error_of("[ring]\nderivations = 1\nindeterminates = y\n[system]\nF = y +\n");
  EXPECT_EQ(syntax.line(), 5u);

  ParseError qx = parse_error_of("[ring]\nderivations = 2\nindeterminates = y\nfield = Q(x)\n[system]\nF = y\n");
  EXPECT_GE(qx.line(), 1u);

  ParseError x_in_q = parse_error_of("[ring]\nderivations = 1\nindeterminates = y\n[system]\nF = y - x\n");
  EXPECT_EQ(x_in_q.line(), 5u);

  ParseError div = parse_error_of("[ring]\nderivations = 1\nindeterminates = y\n[system]\nF = 1/y\n");
  EXPECT_EQ(div.line(), 5u);
}

TEST(Problem, RoundTripsEveryFamily) {
  for (ExampleKind k : {ExampleKind::ex1, ExampleKind::ex2, ExampleKind::ex3, ExampleKind::ex4})
    for (unsigned param = 1; param <= 3; ++param) {
      DiffSystem sys = example_family({k, param});
      std::string text = print_problem(problem_from_system(sys));
      ProblemFile back = parse_problem(text);
      ASSERT_EQ(back.system.F.size(), sys.F.size());
      for (std::size_t i = 0; i < sys.F.size(); ++i)
        EXPECT_EQ(back.system.F[i].to_string(), sys.F[i].to_string());
      EXPECT_EQ(print_problem(back), text);
    }
}

TEST(Problem, SinglePolynomial) {
  auto R = DiffRing::create(1, {"a", "b"});
  DiffPoly p = parse_diffpoly(R, "(a[2] - b)^2 - 4*a*b[1]");
  DiffPoly a2 = DiffPoly::y(R, 0, {2}), b = DiffPoly::y(R, 1), ab1 = DiffPoly::y(R, 0) * DiffPoly::y(R, 1, {1});
  EXPECT_EQ(p, (a2 - b).pow(2) - DiffPoly::constant(R, 4) * ab1);
}
