#pragma once

// Characteristic-set decomposition with per-iteration instrumentation: the
// worklist of pairs (F, C), the output set of triangular sets, the (m+4)-tuple
// attached to each work item and degree/order measurements per iteration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnull/diff_ring.hpp"
#include "dnull/errors.hpp"
#include "dnull/groebner.hpp"

namespace dnull {

using Tau = std::vector<std::uint64_t>;

enum class ItemKind { root, complete, incomplete };

struct WorkItem {
  std::size_t id = 0;
  /// Id of the item whose iteration produced this one; nothing for the root.
  std::optional<std::size_t> parent;
  ItemKind kind = ItemKind::root;
  std::vector<DiffPoly> F;
  std::vector<DiffPoly> C;
  Tau tau;
};

enum class Outcome {
  pushed,     // a complete child went back to the worklist
  candidate,  // R was empty; charset added to T
  witness,    // rank dropped under self-reduction; B added to T
  unit,       // F contained a nonzero constant; lineage closed
  stuck_candidate,  // nothing in F reduced w.r.t. C, and F reduces to 0
  stuck_extended,   // nothing reduced; nonzero remainders appended to F
};

struct IterationRecord {
  std::size_t item = 0;
  std::optional<std::size_t> parent;
  ItemKind kind = ItemKind::root;
  Tau tau;
  /// Rank of the chosen f, as "leader^degree".
  std::string f_rank;
  std::uint32_t b = 0;
  /// D and H of F u C for the processed item.
  std::uint32_t D_in = 0, H_in = 0;
  /// Max degree and order over every polynomial built in this iteration.
  std::uint32_t D_touched = 0, H_touched = 0;
  Outcome outcome = Outcome::pushed;
  /// Ids of the items pushed by this iteration.
  std::vector<std::size_t> children;
};

enum class ComponentKind { characteristic_candidate, inconsistent_witness };

struct Component {
  ComponentKind kind = ComponentKind::characteristic_candidate;
  std::vector<DiffPoly> set;
  /// Item whose iteration produced the component.
  std::size_t item = 0;
  /// Filled in by verify_trace in exact mode.
  std::optional<bool> coherent;
};

struct DecompositionResult {
  std::vector<Component> components;
  /// One record per iteration, in processing order.
  std::vector<IterationRecord> trace;
  /// Every work item ever created, indexed by id.
  std::vector<WorkItem> items;
  /// True when some lineage ended with a constant in F.
  bool saw_unit = false;

  /// Root-to-leaf paths of item ids; one per item that had no children.
  std::vector<std::vector<std::size_t>> lineages() const;
};

struct RgboundCaps {
  std::size_t max_iterations = 10000;
  double max_seconds = 300.0;
  /// Terms of any single polynomial built during the run.
  std::size_t max_terms = 200000;
};

/// Carries the partial result computed before a cap fired.
class RgboundCapError : public ResourceCapError {
 public:
  RgboundCapError(Kind kind, std::string what, DecompositionResult partial)
      : ResourceCapError(kind, std::move(what), partial.trace.size()),
        partial_(std::move(partial)) {}

  const DecompositionResult& partial() const noexcept { return partial_; }

 private:
  DecompositionResult partial_;
};

DecompositionResult rgbound_decompose(const DiffSystem& sys, const RgboundCaps& caps = {});

struct TraceReport {
  bool dicksonian = true;
  bool degree_ok = true;
  /// Always symbolic at realistic inputs: log2 A(m+7, Q-1) exceeds any cap.
  bool iteration_bound_symbolic = true;
  bool iteration_bound_ok = true;
  std::size_t max_lineage_length = 0;
  /// Every candidate reduces all of F_1 to zero under full_remainder.
  bool candidates_reduce_F = true;
  bool candidates_triangular = true;
  /// Exact mode only: 1 in (B) : H_B^infinity for every witness.
  std::optional<bool> witnesses_inconsistent;
  std::vector<std::string> failures;

  bool ok() const {
    return dicksonian && degree_ok && iteration_bound_ok && candidates_reduce_F &&
           candidates_triangular && witnesses_inconsistent.value_or(true);
  }
};

/// Checks the trace: tuples along every lineage are dicksonian, the degree
/// growth inequality holds for every complete iteration and the iteration
/// count is recorded against log2 A(m+7, Q-1). Exact mode also decides
/// coherence of candidates and inconsistency of witnesses by Groebner bases.
TraceReport verify_trace(DecompositionResult& res, const DiffSystem& sys, bool exact = false,
                         const ResourceCaps& caps = {});

const char* to_string(ItemKind k);
const char* to_string(Outcome o);
const char* to_string(ComponentKind k);

}  // namespace dnull
