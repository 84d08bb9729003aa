#pragma once

// Empirical order of the differential Nullstellensatz: f in sqrt((F^{(<=h)}))
// decided by Groebner bases, the least such h, and the example families.

#include <cstdint>
#include <optional>
#include <vector>

#include "dnull/diff_ring.hpp"
#include "dnull/errors.hpp"
#include "dnull/groebner.hpp"

namespace dnull {

enum class MembershipStatus { in_radical, not_in_radical, inconclusive_cap };

struct MembershipVerdict {
  std::uint32_t h = 0;
  MembershipStatus status = MembershipStatus::not_in_radical;
  /// Generators of F^{(<=h)} and distinct derivatives among them.
  std::size_t generators = 0;
  std::size_t variables = 0;
};

/// f in sqrt((F^{(<=h)})); plain ideal membership of 1 when f = 1.
MembershipVerdict radical_membership_at(const DiffSystem& sys, std::uint32_t h,
                                        const ResourceCaps& caps = {});

struct MinimalT {
  /// Least h with an in-radical verdict; nothing when none up to h_max.
  std::optional<std::uint32_t> t;
  std::uint32_t h_max = 0;
  /// One verdict per scanned level, ascending.
  std::vector<MembershipVerdict> verdicts;
};

/// Thrown by minimal_t when a level could not be decided; never a wrong t.
class InconclusiveScan : public ResourceCapError {
 public:
  InconclusiveScan(std::uint32_t h, const ResourceCapError& cause)
      : ResourceCapError(cause.kind(),
                         "membership at h = " + std::to_string(h) + " undecided: " + cause.what(),
                         cause.partial_size()),
        h_(h) {}
  std::uint32_t h() const noexcept { return h_; }

 private:
  std::uint32_t h_;
};

/// Ascending scan h = 0, 1, ..., h_max reusing prolongations between levels.
MinimalT minimal_t(const DiffSystem& sys, std::uint32_t h_max, const ResourceCaps& caps = {});

enum class ExampleKind { ex1, ex2, ex3, ex4 };

struct ExampleSelector {
  ExampleKind kind = ExampleKind::ex1;
  unsigned param = 1;
};

/// ex1(k) = {y' - 1, y^k};
/// ex2(n) = {y1', y1 - y2', ..., y_{n-1} - y_n', y_n - x^n/n!} over Q(x);
/// ex3(n) = {y1^2, y1 - y2^2, ..., y_{n-1} - y_n^2, 1 - y_n'};
/// ex4(m) = {u_{x1}^2, u_{x1} - u_{x2}^2, ..., 1 - u_{xm xm}} with m derivations.
/// All with f = 1. `declared_m` is checked against the family's derivation
/// count when given.
DiffSystem example_family(ExampleSelector sel, std::optional<std::size_t> declared_m = std::nullopt);

/// The claim (d_i a)^{2d-1} in (F^{(<=d)}); UsageError unless a^d in (F).
bool degreelem_claim_check(const std::vector<DiffPoly>& F, const DiffPoly& a, unsigned d,
                           std::size_t i, const ResourceCaps& caps = {});

const char* to_string(MembershipStatus s);
const char* to_string(ExampleKind k);

}  // namespace dnull
