#pragma once

// Dicksonian sequences: no earlier tuple is componentwise <= a later one.
// Growth functions, the padding construction that reduces bounded growth
// to unit growth, and exhaustive maximal-length searches.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dnull/coeff.hpp"

namespace dnull {

using NTuple = std::vector<std::uint64_t>;
using TupleSeq = std::vector<NTuple>;

/// Increasing growth function on 1, 2, ...: affine a*i + b or a finite table
/// f(1..k).
class GrowthFn {
 public:
  static GrowthFn affine(std::uint64_t a, std::int64_t b);
  static GrowthFn table(std::vector<std::uint64_t> values);

  bool is_table() const { return is_table_; }
  /// f(i) for i >= 1; nothing past the end of a table or below zero.
  std::optional<std::uint64_t> at(std::uint64_t i) const;
  /// Largest i with f(i) defined, or nothing when unbounded.
  std::optional<std::uint64_t> domain_end() const;
  bool increasing() const;
  const std::vector<std::uint64_t>& values() const { return table_; }
  std::uint64_t slope() const { return a_; }
  std::int64_t intercept() const { return b_; }

 private:
  bool is_table_ = false;
  std::uint64_t a_ = 0;
  std::int64_t b_ = 0;
  std::vector<std::uint64_t> table_;
};

/// Throws UsageError on ragged tuple lengths.
bool is_dicksonian(const TupleSeq& seq);
bool growth_bounded(const TupleSeq& seq, const GrowthFn& f);
/// Least k >= 1 with f(k) >= x; UsageError when a table runs out first.
std::uint64_t inverse_ceil(const GrowthFn& f, const Integer& x);

/// Dicksonian d-tuples starting at (m, ..., m) whose maximal coordinate is
/// m + i - 1 at step i; nothing when no such sequence of that length
/// exists (or the node budget ran out, see `exhausted`).
std::optional<TupleSeq> gen_unit_growth(std::size_t d, std::uint64_t m, std::size_t length,
                                        bool* exhausted = nullptr,
                                        std::uint64_t node_cap = 50'000'000);

class ConstructionInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The padded (n+d)-tuple sequence with unit growth built from a dicksonian
/// sequence whose growth is bounded by f.
TupleSeq pad_construction(const TupleSeq& seq, const GrowthFn& f, std::size_t d);

struct SearchResult {
  std::uint64_t length = 0;
  TupleSeq witness;
  /// False when the coordinate cap, node budget or the end of a table
  /// could have hidden a longer sequence.
  bool conclusive = true;
  std::uint64_t nodes = 0;
};

/// Longest dicksonian sequence of n-tuples with max coordinate of t_i
/// bounded by f(i) (or equal to f(i) when `exact_growth`), coordinates
/// capped by coord_cap.
SearchResult search_max_length(std::size_t n, const GrowthFn& f, std::uint64_t coord_cap,
                               bool exact_growth = false, std::uint64_t node_cap = 50'000'000);

}  // namespace dnull
