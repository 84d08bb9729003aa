#pragma once

// Bound calculus for the order bound of the differential Nullstellensatz:
// Q(F), the iteration and degree bounds of the elimination algorithm, the
// lifting quantities and the closed form A(m+8, max(n, H, D)).

#include <optional>
#include <string>
#include <vector>

#include "dnull/ack_expr.hpp"
#include "dnull/diff_ring.hpp"

namespace dnull {

/// Const when A(m, n) fits the cap, else the symbolic node Ack(m, n).
AckExpr ackermann(unsigned m, const Integer& n, std::size_t bit_cap = kDefaultBitCap);

struct BoundEntry {
  std::string name;
  /// Human-readable defining formula.
  std::string formula;
  AckExpr expr;
};

struct BoundReport {
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& name) const;
  void add(std::string name, std::string formula, AckExpr expr);
};

/// max(9, n, 2^{9H}, D).
AckExpr q_of(const OrderStats& stats, unsigned n, std::size_t bit_cap = kDefaultBitCap);

/// Q(F), the iteration bound log2 A(m+7, Q-1) and the order/degree bound
/// A(m+7, Q-1). Requires m >= 1.
BoundReport structural_bounds(const OrderStats& stats, unsigned m, unsigned n,
                              std::size_t bit_cap = kDefaultBitCap);

/// (4D)^{C(2H+m, m)+1}.
AckExpr degree_growth_step(const Integer& D, const Integer& H, unsigned m,
                           std::size_t bit_cap = kDefaultBitCap);

/// max(0, ord f - min_{g in A} ord g).
unsigned lemmaf_q(unsigned ord_f, unsigned min_ord_A);

/// 4^{(k+1)H+1} d, the prolongation order in the product-derivative lemma.
AckExpr degreelem_order(const AckExpr& k, const AckExpr& H, const AckExpr& d,
                        std::size_t bit_cap = kDefaultBitCap);

struct LiftingInput {
  OrderStats F;           // stats of F
  unsigned ord_f = 0;
  unsigned D_f = 0;       // total degree of f
  unsigned m = 1;
  unsigned n = 1;
  /// min order over the first component, for q; defaults to 0.
  unsigned min_ord_A = 0;
  /// Iteration bound L(F); defaults to log2ceil(A(m+7, Q-1)).
  std::optional<AckExpr> L;
  /// Order bound of the first component; defaults to H(F) 2^L.
  std::optional<AckExpr> H_A;
  /// t(G, f) for the branch set G; symbolic input.
  AckExpr t_G = AckExpr::constant(0);
};

/// q, the component-size bound p <= n 2^{H_A+m}, the degree d of the
/// algebraic Nullstellensatz step and the right-hand side of the one-step
/// recurrence ord f + H 2^L + 4^{(n 2^{H 2^L + 1} + 1) t(G,f) + 1} d.
BoundReport lifting_bounds(const LiftingInput& in, std::size_t bit_cap = kDefaultBitCap);

/// A(m+8, B) with B = max(n, H(F u f), D(F u f)) evaluated exactly.
AckExpr t_bound_closed(const OrderStats& stats_F_and_f, unsigned m, unsigned n);

struct RecurrenceRow {
  unsigned k = 0;
  Integer H;
  /// D_k when it fits the cap.
  std::optional<Integer> D;
  /// Integer upper bound on log2 D_k.
  Integer log2_D_upper;
  /// Exact u_1; later u_k are tracked by a lower bound on log2 u_k.
  std::optional<Integer> u;
  Integer log2_u_lower;
  bool H_ok = false;  // H_k <= log2(u_k) / 9
  bool D_ok = false;  // D_k <= u_k
};

struct XCheck {
  unsigned x = 0;
  /// Dyadic upper bound on cbrt(x) (2 + log2 x).
  Rational lhs_upper;
  /// Lower bound on log2(2^{x+2} - 3).
  Rational rhs_lower;
  bool ok = false;
  /// The coarse check with integer ceilings of cbrt and log2.
  bool coarse_ok = false;
};

struct RecurrenceReport {
  std::vector<RecurrenceRow> rows;
  /// Number of rows computed before the bit cap stopped the table.
  unsigned verified_steps = 0;
  bool truncated = false;
  bool prefix_ok = true;
  std::vector<XCheck> x_checks;
  bool x_ok = true;
};

/// Tabulates H_k, D_k, u_k for k = 1..steps and checks H_k <= log2(u_k)/9 and
/// D_k <= u_k; checks 2^{cbrt(x)(2+log2 x)} <= 2^{x+2} - 3 for x in [x_lo, x_hi].
RecurrenceReport proof_recurrence_check(unsigned H1, unsigned D1, unsigned m, unsigned n,
                                        unsigned steps, std::size_t bit_cap = kDefaultBitCap,
                                        unsigned x_lo = 9, unsigned x_hi = 64);

}  // namespace dnull
