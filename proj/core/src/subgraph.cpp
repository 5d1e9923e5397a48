#include "capkit/subgraph.hpp"

#include <algorithm>
#include <set>

namespace capkit {

Subgraph::Subgraph(GroundSet ground, std::vector<UnitValue> level) : ground_(std::move(ground)), level_(std::move(level)) {
  if (level_.size() != ground_.powerset_size()) throw DomainError("subgraph level table has the wrong size");
}

Subgraph to_subgraph(const Capacity& c) {
  return Subgraph(c.ground(), std::vector<UnitValue>(c.table().begin(), c.table().end()));
}

Report check_subgraph_axioms(const Subgraph& s) {
  Report report;
  const auto level = s.level();
  const Subset full = s.ground().full();
  if (level[full.bits] != UnitValue::one()) {
    report.add({"base-inclusion", "(X, 1) must belong to the subgraph", {full}, {level[full.bits]}});
  }
  if (level[0] != UnitValue::zero()) {
    report.add({"empty-fiber", "∅ may only carry level 0", {Subset::empty()}, {level[0]}});
  }
  for (std::uint32_t m = 0; m < level.size(); ++m) {
    const Subset f{m};
    for (std::size_t x = 0; x < s.ground().size(); ++x) {
      if (f.contains(x)) continue;
      const Subset g = f.with(x);
      ++report.checked;
      // (F, level F) and (G, level G) in S force (F ∪ G, level F ∨ level G) in S.
      if (level[f.bits] > level[g.bits]) {
        report.add({"union-stability", "(F ∪ G, α ∨ β) missing from the subgraph", {f, g},
                    {level[f.bits], level[g.bits]}});
      }
    }
  }
  return report;
}

Capacity from_subgraph(const Subgraph& s) {
  Report report = check_subgraph_axioms(s);
  if (!report.passed()) {
    const Violation& v = report.violations.front();
    std::string msg = "subgraph violates " + v.rule;
    for (const auto f : v.subsets) msg += " " + s.ground().describe(f);
    throw CapacityError(msg, std::move(report));
  }
  return Capacity::from_table(s.ground(), std::vector<UnitValue>(s.level().begin(), s.level().end()),
                              {s.ground().size()});
}

SectionFamily sections(const Capacity& c, std::span<const UnitValue> thresholds) {
  std::set<UnitValue> levels(thresholds.begin(), thresholds.end());
  if (thresholds.empty()) {
    const auto values = c.positive_values();
    levels.insert(values.begin(), values.end());
  }
  if (levels.contains(UnitValue::zero())) throw DomainError("sections: thresholds must be positive");

  SectionFamily family{c.ground(), {levels.begin(), levels.end()}, {}};
  for (const auto& alpha : family.thresholds) {
    std::vector<Subset> members;
    for (std::uint32_t m = 1; m < c.ground().powerset_size(); ++m) {
      if (c(Subset{m}) >= alpha) members.push_back(Subset{m});
    }
    family.sections.push_back(up_closure(c.ground(), members));
  }
  return family;
}

Capacity reconstruct_from_sections(const SectionFamily& family) {
  if (family.thresholds.size() != family.sections.size()) {
    throw DomainError("section family: one section per threshold required");
  }
  for (std::size_t k = 0; k < family.thresholds.size(); ++k) {
    require_same_ground(family.ground, family.sections[k].ground(), "section family");
    if (family.thresholds[k] == UnitValue::zero()) throw DomainError("section family: thresholds must be positive");
    if (k > 0 && family.thresholds[k - 1] >= family.thresholds[k]) {
      throw DomainError("section family: thresholds must be strictly ascending");
    }
    if (k > 0 && !family.sections[k].subfamily_of(family.sections[k - 1])) {
      throw ValidationError("section family is not antitone: S_" + family.thresholds[k].str() + " ⊄ S_" +
                            family.thresholds[k - 1].str());
    }
  }
  std::vector<UnitValue> table(family.ground.powerset_size(), UnitValue::zero());
  for (std::uint32_t m = 1; m < table.size(); ++m) {
    for (std::size_t k = family.thresholds.size(); k-- > 0;) {
      if (family.sections[k].member(Subset{m})) {
        table[m] = family.thresholds[k];
        break;
      }
    }
  }
  return Capacity::from_table(family.ground, std::move(table), {family.ground.size()});
}

}  // namespace capkit
