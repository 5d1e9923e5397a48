#include "capkit/capacity.hpp"

#include <algorithm>
#include <set>

namespace capkit {
namespace {

void check_size(const GroundSet& ground, const CapacityLimits& limits) {
  if (ground.size() > limits.max_ground) {
    throw DomainError("ground set of size " + std::to_string(ground.size()) + " exceeds the capacity size cap of " +
                      std::to_string(limits.max_ground));
  }
}

std::string first_violation_message(const GroundSet& ground, const Report& report) {
  const Violation& v = report.violations.front();
  std::string msg = v.rule + ": " + v.detail;
  if (!v.subsets.empty()) {
    msg += " [";
    for (std::size_t i = 0; i < v.subsets.size(); ++i) {
      if (i) msg += ", ";
      msg += ground.describe(v.subsets[i]);
    }
    msg += "]";
  }
  return msg;
}

}  // namespace

Capacity Capacity::from_table(GroundSet ground, std::vector<UnitValue> table, CapacityLimits limits) {
  check_size(ground, limits);
  if (table.size() != ground.powerset_size()) {
    throw DomainError("capacity table has " + std::to_string(table.size()) + " entries, expected " +
                      std::to_string(ground.powerset_size()));
  }
  Report report = check_capacity_axioms(ground, table);
  if (!report.passed()) {
    const std::string msg = first_violation_message(ground, report);
    throw CapacityError(msg, std::move(report));
  }
  return Capacity(std::move(ground), std::move(table));
}

std::vector<UnitValue> Capacity::positive_values() const {
  std::set<UnitValue> values(table_.begin(), table_.end());
  values.erase(UnitValue::zero());
  return {values.begin(), values.end()};
}

std::int64_t Capacity::common_denominator() const {
  std::int64_t d = 1;
  for (const auto& v : table_) d = lcm_checked(d, v.den());
  return d;
}

Report check_capacity_axioms(const GroundSet& ground, std::span<const UnitValue> table) {
  Report report;
  const Subset full = ground.full();
  if (table[0] != UnitValue::zero()) {
    report.add({"normalization", "c(∅) must be 0", {Subset::empty()}, {table[0]}});
  }
  if (table[full.bits] != UnitValue::one()) {
    report.add({"normalization", "c(X) must be 1", {full}, {table[full.bits]}});
  }
  for (std::uint32_t m = 0; m < table.size(); ++m) {
    const Subset f{m};
    for (std::size_t x = 0; x < ground.size(); ++x) {
      if (f.contains(x)) continue;
      const Subset g = f.with(x);
      ++report.checked;
      if (table[f.bits] > table[g.bits]) {
        report.add({"monotonicity", "c(F) > c(G) although F ⊆ G", {f, g}, {table[f.bits], table[g.bits]}});
      }
    }
  }
  return report;
}

Capacity build_capacity(const GroundSet& ground, std::span<const Assignment> assignments, BuildMode mode,
                        CapacityLimits limits) {
  check_size(ground, limits);
  const std::size_t size = ground.powerset_size();
  std::vector<bool> seen(size, false);
  std::vector<UnitValue> table(size, UnitValue::zero());
  for (const auto& a : assignments) {
    if (!ground.valid(a.set)) throw DomainError("assignment uses elements outside the ground set");
    if (seen[a.set.bits]) throw ValidationError("duplicate assignment for " + ground.describe(a.set));
    seen[a.set.bits] = true;
    table[a.set.bits] = a.value;
  }

  if (mode == BuildMode::exact) {
    if (const auto it = std::find(seen.begin(), seen.end(), false); it != seen.end()) {
      throw ValidationError("exact mode: no value for " +
                            ground.describe(Subset{static_cast<std::uint32_t>(it - seen.begin())}));
    }
    return Capacity::from_table(ground, std::move(table), limits);
  }

  const Subset full = ground.full();
  if (seen[0] && table[0] != UnitValue::zero()) {
    Report r;
    r.add({"normalization", "c(∅) must be 0", {Subset::empty()}, {table[0]}});
    throw CapacityError("completion: c(∅) assigned a non-zero value", std::move(r));
  }
  if (seen[full.bits] && table[full.bits] != UnitValue::one()) {
    Report r;
    r.add({"normalization", "c(X) must be 1", {full}, {table[full.bits]}});
    throw CapacityError("completion: c(X) assigned a value other than 1", std::move(r));
  }
  // Max over assigned subsets, one coordinate at a time.
  for (std::size_t x = 0; x < ground.size(); ++x) {
    const std::uint32_t bit = std::uint32_t{1} << x;
    for (std::uint32_t m = 0; m < size; ++m) {
      if (m & bit) table[m] = std::max(table[m], table[m ^ bit]);
    }
  }
  table[full.bits] = UnitValue::one();
  return Capacity::from_table(ground, std::move(table), limits);
}

Capacity dirac(const GroundSet& ground, std::size_t x) {
  if (x >= ground.size()) throw DomainError("dirac: element index out of range");
  return unanimity(ground, Subset::singleton(x));
}

Capacity dirac(const GroundSet& ground, std::string_view x) { return dirac(ground, ground.index_of(x)); }

Capacity unanimity(const GroundSet& ground, Subset core) {
  if (core.is_empty() || !ground.valid(core)) throw DomainError("unanimity: core must be a non-empty subset");
  std::vector<UnitValue> table(ground.powerset_size());
  for (std::uint32_t m = 0; m < table.size(); ++m) {
    table[m] = core.subset_of(Subset{m}) ? UnitValue::one() : UnitValue::zero();
  }
  return Capacity::from_table(ground, std::move(table), {ground.size()});
}

Capacity pushforward(const SpaceMap& f, const Capacity& c) {
  require_same_ground(f.domain(), c.ground(), "pushforward");
  const GroundSet& target = f.codomain();
  std::vector<UnitValue> table(target.powerset_size());
  for (std::uint32_t m = 0; m < table.size(); ++m) table[m] = c(f.preimage(Subset{m}));
  return Capacity::from_table(target, std::move(table), {target.size()});
}

bool carried_by(const Capacity& c, Subset s) {
  const auto size = static_cast<std::uint32_t>(c.ground().powerset_size());
  for (std::uint32_t m = 0; m < size; ++m) {
    if (c(Subset{m}) != c(Subset{m} & s)) return false;
  }
  return true;
}

Subset support(const Capacity& c) {
  // Carrier sets are closed under intersection and supersets, so greedy
  // removal lands on the least one.
  Subset s = c.ground().full();
  for (std::size_t x = 0; x < c.ground().size(); ++x) {
    if (carried_by(c, s.without(x))) s = s.without(x);
  }
  return s;
}

Capacity restrict(const Capacity& c, Subset s) {
  if (!c.ground().valid(s)) throw DomainError("restrict: subset outside the ground set");
  const Subset supp = support(c);
  if (!supp.subset_of(s)) {
    throw DomainError("restrict: support " + c.ground().describe(supp) + " is not contained in " +
                      c.ground().describe(s));
  }
  const SpaceMap incl = SpaceMap::inclusion(c.ground(), s);
  std::vector<UnitValue> table(incl.domain().powerset_size());
  for (std::uint32_t m = 0; m < table.size(); ++m) table[m] = c(incl.image(Subset{m}));
  return Capacity::from_table(incl.domain(), std::move(table), {incl.domain().size()});
}

}  // namespace capkit
