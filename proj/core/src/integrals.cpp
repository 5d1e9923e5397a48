#include "capkit/integrals.hpp"

#include <algorithm>
#include <set>

namespace capkit {

Pseudomultiplication Pseudomultiplication::min() { return Pseudomultiplication(Kind::min, true); }

Pseudomultiplication Pseudomultiplication::product() { return Pseudomultiplication(Kind::product, true); }

Pseudomultiplication Pseudomultiplication::probabilistic_sum() {
  return Pseudomultiplication(Kind::probabilistic_sum, false);
}

Pseudomultiplication Pseudomultiplication::from_table(std::int64_t grid, std::vector<std::vector<UnitValue>> values) {
  if (grid < 1) throw DomainError("pseudomultiplication grid must be positive");
  const auto n = static_cast<std::size_t>(grid) + 1;
  if (values.size() != n || std::any_of(values.begin(), values.end(), [n](const auto& row) { return row.size() != n; })) {
    throw DomainError("pseudomultiplication table must be (grid+1)x(grid+1)");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((i + 1 < n && values[i][j] > values[i + 1][j]) || (j + 1 < n && values[i][j] > values[i][j + 1])) {
        throw ValidationError("pseudomultiplication table is not isotone at (" + std::to_string(i) + "/" +
                              std::to_string(grid) + ", " + std::to_string(j) + "/" + std::to_string(grid) + ")");
      }
    }
  }
  const bool vanishing = std::all_of(values.begin(), values.end(),
                                     [](const auto& row) { return row.front() == UnitValue::zero(); });
  Pseudomultiplication op(Kind::table, vanishing);
  op.grid_ = grid;
  op.table_ = std::move(values);
  return op;
}

std::string Pseudomultiplication::name() const {
  switch (kind_) {
    case Kind::min: return "min";
    case Kind::product: return "product";
    case Kind::probabilistic_sum: return "probsum";
    case Kind::table: return "table";
  }
  return "unknown";
}

UnitValue Pseudomultiplication::operator()(const UnitValue& a, const UnitValue& b) const {
  switch (kind_) {
    case Kind::min: return std::min(a, b);
    case Kind::product: return UnitValue(a.rational() * b.rational());
    case Kind::probabilistic_sum: return UnitValue(a.rational() + b.rational() - a.rational() * b.rational());
    case Kind::table: {
      const Rational ia = a.rational() * Rational(grid_);
      const Rational ib = b.rational() * Rational(grid_);
      if (ia.den() != 1 || ib.den() != 1) {
        throw DomainError("argument off the pseudomultiplication grid 1/" + std::to_string(grid_));
      }
      return table_[static_cast<std::size_t>(ia.num())][static_cast<std::size_t>(ib.num())];
    }
  }
  throw DomainError("unknown pseudomultiplication");
}

UnitValue sugeno(const Capacity& c, const Observable& phi) {
  require_same_ground(c.ground(), phi.ground(), "sugeno");
  // α ↦ c({φ ≥ α}) is a non-increasing step function, left-continuous with
  // jumps just after values of φ, so the sup is attained at one of them.
  UnitValue best = UnitValue::zero();
  for (const auto& v : phi.values()) {
    if (v <= best) continue;
    best = std::max(best, std::min(v, c(upset_threshold(phi, v))));
  }
  return best;
}

UnitValue choquet(const Capacity& c, const Observable& phi) {
  require_same_ground(c.ground(), phi.ground(), "choquet");
  const std::set<UnitValue, std::greater<>> levels(phi.values().begin(), phi.values().end());
  Rational total;
  auto it = levels.begin();
  while (it != levels.end()) {
    const UnitValue v = *it;
    ++it;
    const Rational next = it == levels.end() ? Rational(0) : it->rational();
    total += (v.rational() - next) * c(upset_threshold(phi, v)).rational();
  }
  return UnitValue(total);
}

FuzzyResult fuzzy(const Capacity& c, const Observable& phi, const Pseudomultiplication& op) {
  require_same_ground(c.ground(), phi.ground(), "fuzzy");
  UnitValue best = UnitValue::zero();
  const auto size = static_cast<std::uint32_t>(c.ground().powerset_size());
  for (std::uint32_t m = 1; m < size; ++m) {
    const Subset f{m};
    best = std::max(best, op(phi.min_on(f), c(f)));
  }
  return {best, op.uniform_vanishing()};
}

}  // namespace capkit
