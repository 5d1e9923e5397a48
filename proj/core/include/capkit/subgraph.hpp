#pragma once

#include <span>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/hyperspace.hpp"
#include "capkit/report.hpp"

namespace capkit {

/// Subgraph of a capacity, {(F, α) : α ≤ c(F)}. Downward closure in α
/// makes each fiber an interval [0, level(F)], so the level table encodes
/// the set losslessly, and closedness is automatic.
class Subgraph {
 public:
  /// No validation; see check_subgraph_axioms / from_subgraph.
  Subgraph(GroundSet ground, std::vector<UnitValue> level);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] std::span<const UnitValue> level() const { return level_; }
  [[nodiscard]] bool contains(Subset f, const UnitValue& alpha) const { return alpha <= level_[f.bits]; }

  friend bool operator==(const Subgraph&, const Subgraph&) = default;

 private:
  GroundSet ground_;
  std::vector<UnitValue> level_;
};

Subgraph to_subgraph(const Capacity& c);

/// Union stability (checked on covering pairs, which is equivalent), the
/// base inclusion {X} × I, and an empty fiber at ∅ beyond level 0.
Report check_subgraph_axioms(const Subgraph& s);

/// Throws CapacityError carrying the violated axioms.
Capacity from_subgraph(const Subgraph& s);

/// α-sections S_α(c) = {F : c(F) ≥ α} for positive thresholds, ascending.
struct SectionFamily {
  GroundSet ground;
  std::vector<UnitValue> thresholds;
  std::vector<InclusionHyperspace> sections;
};

/// Thresholds must be positive; duplicates are merged. With no thresholds,
/// the distinct positive values of c are used.
SectionFamily sections(const Capacity& c, std::span<const UnitValue> thresholds = {});

/// c(F) = max{α : F ∈ S_α}, 0 if none. Throws ValidationError if the
/// sections are not antitone in α, CapacityError if the result is not a
/// capacity.
Capacity reconstruct_from_sections(const SectionFamily& family);

}  // namespace capkit
