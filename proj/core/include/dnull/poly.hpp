#pragma once

// Sparse multivariate polynomials over Q or Q(x).
//
// A PolyRing is an append-only variable table plus the field and monomial
// order. Variable priority follows VarId: VarId 0 is the most significant
// variable. Rings that need a particular priority (the Groebner oracle) are
// built with their variables already in that order.

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dnull/coeff.hpp"

namespace dnull {

using VarId = std::uint32_t;

enum class VarRole { plain, derivative, slack };

struct VarInfo {
  std::string name;
  VarRole role = VarRole::plain;
};

enum class OrderKind { grevlex, lex };

class PolyRing {
 public:
  static std::shared_ptr<PolyRing> create(FieldKind field, OrderKind order = OrderKind::grevlex);

  FieldKind field() const { return field_; }
  OrderKind order() const { return order_; }

  VarId add_variable(std::string name, VarRole role = VarRole::plain);
  std::size_t num_vars() const;
  VarInfo info(VarId v) const;

 private:
  PolyRing(FieldKind field, OrderKind order) : field_(field), order_(order) {}

  FieldKind field_;
  OrderKind order_;
  mutable std::mutex mu_;
  std::deque<VarInfo> vars_;
};

using RingPtr = std::shared_ptr<PolyRing>;

/// Sparse exponent vector: (VarId, exponent) pairs sorted by VarId, all
/// exponents positive.
class Monomial {
 public:
  using Entry = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);
  static Monomial var(VarId v, std::uint32_t exp = 1);

  const std::vector<Entry>& entries() const { return e_; }
  std::uint32_t degree() const { return deg_; }
  std::uint32_t exponent(VarId v) const;
  bool is_one() const { return e_.empty(); }

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  /// This monomial with the exponent of v replaced by `exp` (0 removes it).
  Monomial with_exponent(VarId v, std::uint32_t exp) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<Entry> e_;
  std::uint32_t deg_ = 0;
};

/// Three-way comparison under the given order with VarId priority.
int compare(const Monomial& a, const Monomial& b, OrderKind order);

struct Term {
  Coeff coeff;
  Monomial mono;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  /// Builds the canonical form: sorted, like terms merged, zeros dropped.
  Poly(RingPtr ring, std::vector<Term> terms);

  static Poly constant(RingPtr ring, const Coeff& c);
  static Poly variable(RingPtr ring, VarId v, std::uint32_t exp = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one()); }
  /// Coefficient of the monomial 1.
  Coeff constant_coeff() const;
  const Term& leading_term() const { return t_.front(); }

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(VarId v) const;
  std::vector<VarId> variables() const;
  /// The coefficient of v^k, as a polynomial free of v.
  Poly coeff_of(VarId v, std::uint32_t k) const;
  /// Formal partial derivative with respect to v.
  Poly partial(VarId v) const;
  /// Divides by the leading coefficient.
  Poly monic() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Coeff& c) const;
  Poly mul_term(const Coeff& c, const Monomial& m) const;
  Poly pow(unsigned e) const;
  /// Applies `f` to every coefficient (used for coefficient derivatives).
  Poly map_coeffs(const std::function<Coeff(const Coeff&)>& f) const;
  /// Renames variables into `target`; the result is re-canonicalized.
  Poly map_vars(const RingPtr& target, const std::function<VarId(VarId)>& f) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> t_;
};

/// Deterministic total order on polynomials of one ring: term-by-term in the
/// ring's monomial order, then by coefficient.
int compare(const Poly& a, const Poly& b);

/// init(b, v)^exponent * g = quotient * b + remainder, deg_v(remainder) < deg_v(b).
struct PseudoDivision {
  Poly quotient;
  Poly remainder;
  unsigned exponent = 0;
};

PseudoDivision pseudo_divide(const Poly& g, const Poly& b, VarId v);

}  // namespace dnull
