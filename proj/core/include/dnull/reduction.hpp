#pragma once

// Reducedness, algebraic and Ritt pseudo-reduction, triangular subsets,
// characteristic sets, differential S-polynomials and coherence.
//
// Sets of differential polynomials are plain vectors. Triangular and
// autoreduced sets are kept sorted by increasing rank.

#include <vector>

#include "dnull/diff_ring.hpp"

namespace dnull {

struct Reducedness {
  bool partially = false;
  bool algebraically = false;
  bool fully = false;
};

/// Reducedness of f with respect to g (g outside k).
Reducedness reducedness(const DiffPoly& f, const DiffPoly& g);
bool is_reduced_wrt(const DiffPoly& f, const std::vector<DiffPoly>& A);

/// Stable sort by increasing rank; constants are rejected.
std::vector<DiffPoly> sort_by_rank(std::vector<DiffPoly> S);
bool is_triangular(const std::vector<DiffPoly>& S);
/// Pairwise reducedness; `algebraic_only` checks only the degree clause.
bool is_autoreduced(const std::vector<DiffPoly>& S, bool algebraic_only = false);

/// One pseudo-division step of an algrem chain.
struct AlgremStep {
  std::size_t index;  // position in the input set
  DiffPoly quotient;
  unsigned exponent;
};

struct AlgremResult {
  DiffPoly remainder;
  std::vector<AlgremStep> steps;
};

/// Algebraic pseudo-remainder of g against a triangular set, dividing by the
/// elements in order of decreasing leader. init(B_i)^e products multiply g.
AlgremResult algrem_chain(const DiffPoly& g, const std::vector<DiffPoly>& B);
DiffPoly algrem(const DiffPoly& g, const std::vector<DiffPoly>& B);

struct PartialRemainder {
  DiffPoly g;
  /// Largest order of a derivative operator applied to an element of A.
  unsigned order_used = 0;
  /// Product of the separant powers that multiplied f.
  DiffPoly multiplier;
};

/// Ritt partial reduction: eliminates every proper derivative of a leader
/// of A from f. A must be autoreduced.
PartialRemainder partial_remainder(const DiffPoly& f, const std::vector<DiffPoly>& A);
/// Partial remainder followed by algrem.
DiffPoly full_remainder(const DiffPoly& f, const std::vector<DiffPoly>& A);

/// A least-rank triangular subset (ties resolved by input order).
std::vector<DiffPoly> minimal_triangular_subset(const std::vector<DiffPoly>& S);
/// A least-rank autoreduced subset by greedy Ritt selection.
std::vector<DiffPoly> charset(const std::vector<DiffPoly>& S);

/// s_B * psi(A) - s_A * phi(B) with psi(ld A) = phi(ld B) the least common
/// derivative; zero polynomial when the leaders are of different
/// indeterminates.
DiffPoly delta_poly(const DiffPoly& A, const DiffPoly& B);
/// Nonzero Delta-polynomials over all pairs of C in set order.
std::vector<DiffPoly> delta_set(const std::vector<DiffPoly>& C);

/// Initials and separants of the elements of C.
std::vector<DiffPoly> h_set(const std::vector<DiffPoly>& C);

enum class CoherenceMode { fast, exact };
bool is_coherent(const std::vector<DiffPoly>& C, CoherenceMode mode = CoherenceMode::fast,
                 const ResourceCaps& caps = {});

enum class RankOrder { lower, equal, higher };
/// Rank comparison of two autoreduced sets sorted by increasing rank.
RankOrder compare_autoreduced_rank(const std::vector<DiffPoly>& A, const std::vector<DiffPoly>& B);

/// Rank sequence equality; constants and zeros compare unequal to any rank.
bool same_rank(const std::vector<DiffPoly>& A, const std::vector<DiffPoly>& B);

}  // namespace dnull
