#pragma once

// Symbolic bound expressions over the Ackermann function.
//
// A node either evaluates exactly within a bit budget or stays symbolic;
// nothing is ever approximated. Text form is a prefix s-expression such as
// `(ack 9 (max 1 1 2))`.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dnull/coeff.hpp"

namespace dnull {

inline constexpr std::size_t kDefaultBitCap = 4096;

/// A(m, n) with A(0,n) = n+1, A(m+1,0) = A(m,1), A(m+1,n+1) = A(m, A(m+1,n)).
/// Exact value if it fits in `bit_cap` bits, otherwise nothing. Uses the
/// closed forms for m <= 4.
std::optional<Integer> ackermann_value(unsigned m, const Integer& n,
                                       std::size_t bit_cap = kDefaultBitCap);

class AckExpr {
 public:
  enum class Op { constant, ack, max, pow, log2ceil, binom, add, mul, sub };

  AckExpr() : AckExpr(constant(0)) {}
  static AckExpr constant(Integer v);
  static AckExpr constant(long v) { return constant(Integer(v)); }
  static AckExpr ack(unsigned m, AckExpr arg);
  static AckExpr max(std::vector<AckExpr> args);
  static AckExpr pow(AckExpr base, AckExpr exp);
  static AckExpr log2ceil(AckExpr arg);
  static AckExpr binom(AckExpr n, AckExpr k);
  static AckExpr add(AckExpr a, AckExpr b);
  static AckExpr mul(AckExpr a, AckExpr b);
  static AckExpr sub(AckExpr a, AckExpr b);

  Op op() const { return node_->op; }
  bool is_constant() const { return node_->op == Op::constant; }
  /// Value of a constant node.
  const Integer& value() const { return node_->value; }
  /// First index of an ack node.
  unsigned ack_m() const { return node_->m; }
  const std::vector<AckExpr>& args() const { return node_->args; }

  /// Exact value when every intermediate result fits in bit_cap bits.
  std::optional<Integer> evaluate(std::size_t bit_cap = kDefaultBitCap) const;
  /// Collapses every evaluable subtree into a constant.
  AckExpr simplify(std::size_t bit_cap = kDefaultBitCap) const;
  /// Replaces every A(k, x) by A(1, x) = x + 2, leaving an evaluable tree
  /// (used for monotonicity checks of the bound structure).
  AckExpr toy() const;

  std::string to_string() const;
  static AckExpr parse(const std::string& text);
  std::string to_json() const;
  static AckExpr from_json(const std::string& json);

  bool operator==(const AckExpr& o) const;
  bool operator!=(const AckExpr& o) const { return !(*this == o); }

 private:
  struct Node {
    Op op = Op::constant;
    Integer value;
    unsigned m = 0;
    std::vector<AckExpr> args;
  };
  explicit AckExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static AckExpr make(Op op, std::vector<AckExpr> args, unsigned m = 0);

  std::shared_ptr<const Node> node_;
};

const char* op_name(AckExpr::Op op);

}  // namespace dnull
