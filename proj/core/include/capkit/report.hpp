#pragma once

#include <string>
#include <vector>

#include "capkit/space.hpp"

namespace capkit {

/// One failed instance of a rule, with machine-readable witnesses.
struct Violation {
  std::string rule;
  std::string detail;
  std::vector<Subset> subsets;
  std::vector<UnitValue> values;
};

/// Outcome of a checker. Violations are data, not errors.
struct Report {
  std::vector<Violation> violations;
  std::size_t checked = 0;

  [[nodiscard]] bool passed() const { return violations.empty(); }
  void add(Violation v) { violations.push_back(std::move(v)); }
};

}  // namespace capkit
