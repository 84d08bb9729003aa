#pragma once

// Differential polynomial ring k{y_1..y_n} with m commuting derivations.
//
// Derivatives theta*y_j are interned into an underlying PolyRing on first
// use, so every DiffPoly is an ordinary sparse Poly whose variables are
// derivatives. Indeterminates and derivations are 0-based in this API.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dnull/groebner.hpp"
#include "dnull/poly.hpp"

namespace dnull {

/// Derivative operator d_1^{k_1} ... d_m^{k_m}.
struct DerOp {
  std::vector<std::uint32_t> k;

  DerOp() = default;
  explicit DerOp(std::vector<std::uint32_t> ks) : k(std::move(ks)) {}
  static DerOp identity(std::size_t m) { return DerOp(std::vector<std::uint32_t>(m, 0)); }
  static DerOp unit(std::size_t m, std::size_t i);

  std::uint32_t order() const;
  std::size_t size() const { return k.size(); }
  DerOp operator+(const DerOp& o) const;
  /// Componentwise <=, i.e. this operator divides o.
  bool divides(const DerOp& o) const;
  /// o - this; requires divides(o).
  DerOp complement_in(const DerOp& o) const;
  DerOp lcm(const DerOp& o) const;

  auto operator<=>(const DerOp&) const = default;
};

struct Derivative {
  std::uint32_t indet = 0;
  DerOp op;

  std::uint32_t order() const { return op.order(); }
  auto operator<=>(const Derivative&) const = default;
};

enum class RankingKind {
  orderly,      // order, then indeterminate, then multi-index lex
  elimination,  // indeterminate first (unit tests only)
};

struct Ranking {
  RankingKind kind = RankingKind::orderly;
};

/// -1, 0, 1 for u < v, u == v, u > v.
int ranking_compare(const Derivative& u, const Derivative& v, const Ranking& r = {});

class DiffRing;
using DiffRingPtr = std::shared_ptr<DiffRing>;

class DiffRing : public std::enable_shared_from_this<DiffRing> {
 public:
  static DiffRingPtr create(std::size_t m, std::vector<std::string> indets,
                            FieldKind field = FieldKind::Q, Ranking ranking = {});

  std::size_t m() const { return m_; }
  std::size_t n() const { return names_.size(); }
  FieldKind field() const { return poly_ring_->field(); }
  const Ranking& ranking() const { return ranking_; }
  const std::vector<std::string>& indet_names() const { return names_; }
  const RingPtr& poly_ring() const { return poly_ring_; }

  /// Interns a derivative and returns its variable.
  VarId var(const Derivative& d);
  Derivative derivative_of(VarId v) const;
  std::string name_of(const Derivative& d) const;
  /// Index of an indeterminate by name, or -1.
  int indet_index(const std::string& name) const;

  /// Orders derivative variables for the Groebner engine: order descending,
  /// then indeterminate ascending, then multi-index lex ascending.
  std::vector<VarId> gb_priority(const std::vector<VarId>& vars) const;

 private:
  DiffRing(std::size_t m, std::vector<std::string> indets, FieldKind field, Ranking ranking);

  std::size_t m_;
  std::vector<std::string> names_;
  Ranking ranking_;
  RingPtr poly_ring_;
  mutable std::mutex mu_;
  std::map<Derivative, VarId> index_;
  std::vector<Derivative> by_var_;
};

class DiffPoly {
 public:
  DiffPoly() = default;
  DiffPoly(DiffRingPtr ring, Poly body);

  static DiffPoly constant(const DiffRingPtr& ring, const Coeff& c);
  static DiffPoly derivative(const DiffRingPtr& ring, const Derivative& d, std::uint32_t exp = 1);
  /// Shorthand for the derivative theta*y_indet with theta given by `ks`.
  static DiffPoly y(const DiffRingPtr& ring, std::uint32_t indet, std::vector<std::uint32_t> ks = {});

  const DiffRingPtr& ring() const { return ring_; }
  const Poly& body() const { return body_; }

  bool is_zero() const { return body_.is_zero(); }
  /// In the coefficient field k.
  bool is_constant() const { return body_.is_constant(); }
  std::uint32_t total_degree() const { return body_.total_degree(); }
  std::vector<Derivative> derivatives() const;

  DiffPoly operator+(const DiffPoly& o) const;
  DiffPoly operator-(const DiffPoly& o) const;
  DiffPoly operator*(const DiffPoly& o) const;
  DiffPoly operator-() const;
  DiffPoly scaled(const Coeff& c) const;
  DiffPoly pow(unsigned e) const;
  DiffPoly monic() const;

  bool operator==(const DiffPoly& o) const { return body_ == o.body_; }
  bool operator!=(const DiffPoly& o) const { return !(*this == o); }

  std::string to_string() const { return body_.to_string(); }

 private:
  DiffRingPtr ring_;
  Poly body_;
};

/// Rank u^d of a polynomial outside k.
struct Rank {
  Derivative leader;
  std::uint32_t degree = 0;
};

int compare_rank(const Rank& a, const Rank& b, const Ranking& r = {});

struct LeaderData {
  Derivative leader;
  VarId var = 0;
  std::uint32_t degree = 0;
  DiffPoly initial;
  DiffPoly separant;

  Rank rank() const { return Rank{leader, degree}; }
};

/// Throws UsageError("no leader") for f in k.
Derivative leader(const DiffPoly& f);
Rank rank_of(const DiffPoly& f);
LeaderData leader_data(const DiffPoly& f);

/// Deterministic total order used for tie-breaking: constants first, then
/// by rank, then term-wise.
int diff_compare(const DiffPoly& a, const DiffPoly& b);

/// Derivation d_i applied to f, coefficients included (i is 0-based).
DiffPoly differentiate(const DiffPoly& f, std::size_t i);
DiffPoly apply_derop(const DiffPoly& f, const DerOp& theta);

/// Maximal order of a derivative occurring in f; 0 for constants.
std::uint32_t order_of(const DiffPoly& f);

struct OrderStats {
  /// h_i per indeterminate; 0 when y_i does not occur.
  std::vector<std::uint32_t> h;
  std::uint32_t H = 0;
  std::uint32_t D = 0;
  std::optional<std::uint32_t> ord_f;
};

OrderStats order_stats(const std::vector<DiffPoly>& F, const DiffPoly* f = nullptr);

/// All derivative operators of order <= h, by order then lex.
std::vector<DerOp> derops_up_to(std::size_t m, std::uint32_t h);

/// F^{(<=h)}: derivatives of the elements of F of order <= h. Zero results
/// and duplicates are dropped; order is F order, then operator order.
std::vector<DiffPoly> prolong(const std::vector<DiffPoly>& F, std::uint32_t h);

struct DiffSystem {
  DiffRingPtr ring;
  std::vector<DiffPoly> F;
  /// The polynomial whose radical membership is asked; 1 when absent.
  std::optional<DiffPoly> f;

  DiffPoly target() const { return f ? *f : DiffPoly::constant(ring, Coeff(1)); }
};

/// Monomial order for Groebner computations over the derivatives in `polys`.
MonomialOrder gb_order(const DiffRingPtr& ring, const std::vector<Poly>& polys);

}  // namespace dnull
