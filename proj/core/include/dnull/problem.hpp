#pragma once

// Problem files: INI-like sections describing a ring and a system.
//
//   [ring]
//   derivations = 1
//   indeterminates = y1, y2
//   field = Q            # or Q(x), only with one derivation
//   [system]
//   F = y1[1] - 1; y1^2
//   f = 1                # optional, defaults to 1
//   [ranking]
//   type = orderly

#include <string>
#include <vector>

#include "dnull/diff_ring.hpp"

namespace dnull {

struct ProblemFile {
  std::size_t m = 1;
  std::vector<std::string> indeterminates;
  FieldKind field = FieldKind::Q;
  RankingKind ranking = RankingKind::orderly;
  DiffSystem system;
};

/// Throws ParseError with 1-based line and column.
ProblemFile parse_problem(const std::string& text);

/// One polynomial over `ring`; positions in errors are relative to `text`
/// on line `line`, starting at column `column`.
DiffPoly parse_diffpoly(const DiffRingPtr& ring, const std::string& text, std::size_t line = 1,
                        std::size_t column = 1);

/// Canonical text; parse_problem(print_problem(p)) is the same system.
std::string print_problem(const ProblemFile& p);

ProblemFile problem_from_system(const DiffSystem& sys);

}  // namespace dnull
