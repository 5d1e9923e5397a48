#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/generate.hpp"

namespace capkit::testing {

inline UnitValue q(std::int64_t num, std::int64_t den = 1) { return UnitValue(num, den); }

inline Subset set_of(const GroundSet& ground, std::initializer_list<const char*> names) {
  Subset s;
  for (const char* n : names) s = s.with(ground.index_of(n));
  return s;
}

/// c₀ on {a,b}: {a} ↦ 3/10, {b} ↦ 6/10.
inline Capacity c0() {
  const GroundSet ab = letters(2);
  return Capacity::from_table(ab, {q(0), q(3, 10), q(6, 10), q(1)});
}

/// φ₀ = (4/5, 1/2) on {a,b}.
inline Observable phi0() { return Observable(letters(2), {q(4, 5), q(1, 2)}); }

inline Observable obs(const GroundSet& ground, std::initializer_list<UnitValue> values) {
  return Observable(ground, std::vector<UnitValue>(values));
}

}  // namespace capkit::testing
