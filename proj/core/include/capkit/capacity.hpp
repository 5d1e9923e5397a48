#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "capkit/report.hpp"
#include "capkit/space.hpp"

namespace capkit {

struct CapacityLimits {
  /// Largest ground set accepted for a full 2^n table.
  std::size_t max_ground = 12;
};

/// A capacity failed its axioms; `report` names the offending subsets.
class CapacityError : public ValidationError {
 public:
  CapacityError(const std::string& what, Report report) : ValidationError(what), report(std::move(report)) {}
  Report report;
};

/// A capacity (fuzzy measure) on a finite ground set: a monotone set function
/// with c(∅) = 0 and c(X) = 1, stored as a full table indexed by subset mask.
///
/// Upper semicontinuity and τ-smoothness hold automatically on a finite
/// discrete space, so only normalization and monotonicity are checked.
class Capacity {
 public:
  /// Validates the table and throws CapacityError on any violation.
  static Capacity from_table(GroundSet ground, std::vector<UnitValue> table, CapacityLimits limits = {});

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] std::span<const UnitValue> table() const { return table_; }
  [[nodiscard]] const UnitValue& operator()(Subset s) const { return table_[s.bits]; }

  /// Distinct positive values, ascending.
  [[nodiscard]] std::vector<UnitValue> positive_values() const;
  /// lcm of all denominators in the table.
  [[nodiscard]] std::int64_t common_denominator() const;

  friend bool operator==(const Capacity& a, const Capacity& b) {
    return a.ground_ == b.ground_ && a.table_ == b.table_;
  }
  /// Lexicographic on tables; used to canonically order supports.
  friend bool operator<(const Capacity& a, const Capacity& b) { return a.table_ < b.table_; }

 private:
  Capacity(GroundSet ground, std::vector<UnitValue> table) : ground_(std::move(ground)), table_(std::move(table)) {}

  GroundSet ground_;
  std::vector<UnitValue> table_;
};

/// Normalization and monotonicity over covering pairs F ⊂ F∪{x}.
Report check_capacity_axioms(const GroundSet& ground, std::span<const UnitValue> table);

struct Assignment {
  Subset set;
  UnitValue value;
};

enum class BuildMode {
  exact,                ///< every subset assigned exactly once
  monotone_completion,  ///< c(F) = max of values assigned to subsets of F, c(X) = 1
};

Capacity build_capacity(const GroundSet& ground, std::span<const Assignment> assignments, BuildMode mode,
                        CapacityLimits limits = {});

/// The Dirac capacity at x: c(F) = 1 iff x ∈ F.
Capacity dirac(const GroundSet& ground, std::size_t x);
Capacity dirac(const GroundSet& ground, std::string_view x);

/// c(F) = 1 iff F ⊇ core, else 0. Requires a non-empty core.
Capacity unanimity(const GroundSet& ground, Subset core);

/// Image capacity: Mf(c)(F) = c(f⁻¹(F)).
Capacity pushforward(const SpaceMap& f, const Capacity& c);

/// True iff c(F) = c(F ∩ s) for every F.
bool carried_by(const Capacity& c, Subset s);

/// Smallest s with c(F) = c(F ∩ s) for every F.
Subset support(const Capacity& c);

/// The capacity on ground.restrict(s) given by c on subsets of s.
/// Requires support(c) ⊆ s.
Capacity restrict(const Capacity& c, Subset s);

}  // namespace capkit
