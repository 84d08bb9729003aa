#pragma once

// Buchberger Groebner bases and the ideal / radical / saturation membership
// oracles built on them.

#include <cstddef>
#include <span>
#include <vector>

#include "dnull/poly.hpp"

namespace dnull {

/// Monomial order used by the Groebner engine. `priority` lists variables
/// from most to least significant; variables not listed follow in VarId
/// order. An empty list means plain VarId priority.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::vector<VarId> priority;
};

struct ResourceCaps {
  std::size_t max_basis_size = 20000;
  std::size_t max_terms = 2000000;
  double max_seconds = 3600.0;
};

struct GroebnerBasis {
  /// Monic generators sorted by decreasing leading monomial under `order`.
  std::vector<Poly> generators;
  MonomialOrder order;
  bool reduced = false;

  bool is_unit() const {
    return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero();
  }
};

/// Statistics from the most recent engine run on this thread (pairs
/// processed, reductions to zero); used by benchmarks and reports.
struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis_size = 0;
};
GroebnerStats last_groebner_stats();

/// Reduced Groebner basis of (F). Stops early with {1} as soon as a nonzero
/// constant appears. Throws ResourceCapError when a cap fires.
GroebnerBasis buchberger(std::span<const Poly> F, const MonomialOrder& order = {},
                         const ResourceCaps& caps = {});

/// Full multivariate division of g by G (G need not be a Groebner basis).
/// The remainder has no monomial divisible by a leading monomial of G.
Poly normal_form(const Poly& g, std::span<const Poly> G, const MonomialOrder& order = {});

/// f in (F).
bool ideal_membership(const Poly& f, std::span<const Poly> F, const ResourceCaps& caps = {},
                      const MonomialOrder& order = {});

/// f in sqrt((F)), decided as 1 in (F, 1 - z f) with a fresh slack variable z
/// placed last in the variable priority.
bool radical_membership(const Poly& f, std::span<const Poly> F, const ResourceCaps& caps = {},
                        const MonomialOrder& order = {});

/// f in (F) : (s_1 ... s_k)^infinity, decided as f in (F, 1 - w s_1 ... s_k).
bool saturation_membership(const Poly& f, std::span<const Poly> F, std::span<const Poly> S,
                           const ResourceCaps& caps = {}, const MonomialOrder& order = {});

}  // namespace dnull
