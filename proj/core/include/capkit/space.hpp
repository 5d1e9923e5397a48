#pragma once

// Finite ground sets, their subsets, [0,1]-valued observables and maps
// between ground sets. Everything here is immutable once built.

#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capkit/errors.hpp"
#include "capkit/rational.hpp"

namespace capkit {

/// An exact rational in [0,1].
class UnitValue {
 public:
  constexpr UnitValue() = default;
  explicit UnitValue(const Rational& r);
  UnitValue(std::int64_t num, std::int64_t den) : UnitValue(Rational(num, den)) {}

  static UnitValue zero() { return UnitValue(); }
  static UnitValue one() { return UnitValue(Rational(1)); }

  [[nodiscard]] const Rational& rational() const { return value_; }
  operator const Rational&() const { return value_; }  // NOLINT(implicit)
  [[nodiscard]] std::int64_t num() const { return value_.num(); }
  [[nodiscard]] std::int64_t den() const { return value_.den(); }

  friend bool operator==(const UnitValue&, const UnitValue&) = default;
  friend auto operator<=>(const UnitValue& a, const UnitValue& b) { return a.value_ <=> b.value_; }

  [[nodiscard]] std::string str() const { return value_.str(); }

 private:
  Rational value_;
};

/// Parses "p/q", an integer, or a decimal with at most 9 fractional digits.
UnitValue parse_value(std::string_view text);
std::string render_value(const UnitValue& v);

/// Bitmask over the index range of some ground set.
struct Subset {
  std::uint32_t bits = 0;

  static constexpr Subset empty() { return {}; }
  static constexpr Subset singleton(std::size_t i) { return {std::uint32_t{1} << i}; }

  [[nodiscard]] constexpr bool contains(std::size_t i) const { return (bits >> i) & 1u; }
  [[nodiscard]] constexpr bool is_empty() const { return bits == 0; }
  [[nodiscard]] constexpr int size() const { return std::popcount(bits); }
  [[nodiscard]] constexpr bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }

  constexpr Subset operator|(Subset o) const { return {bits | o.bits}; }
  constexpr Subset operator&(Subset o) const { return {bits & o.bits}; }
  constexpr Subset without(std::size_t i) const { return {bits & ~(std::uint32_t{1} << i)}; }
  constexpr Subset with(std::size_t i) const { return {bits | (std::uint32_t{1} << i)}; }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;
};

/// Canonical order for antichains: by cardinality, then by mask.
constexpr bool canonical_less(Subset a, Subset b) {
  return a.size() != b.size() ? a.size() < b.size() : a.bits < b.bits;
}

/// Hard limit imposed by the 32-bit mask representation.
inline constexpr std::size_t kMaskWidth = 30;

/// Ordered list of distinct element names. Copies share storage; equality
/// is by name list.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> names);

  /// {"0", "1", ..., "n-1"}; used for index sets of higher-level capacities.
  static GroundSet indices(std::size_t n);

  [[nodiscard]] std::size_t size() const { return names_ ? names_->size() : 0; }
  [[nodiscard]] const std::vector<std::string>& names() const;
  [[nodiscard]] const std::string& name(std::size_t i) const { return names().at(i); }
  /// Index of `name`; throws DomainError if absent.
  [[nodiscard]] std::size_t index_of(std::string_view name) const;
  [[nodiscard]] bool contains(std::string_view name) const;

  [[nodiscard]] Subset full() const { return {static_cast<std::uint32_t>((std::uint64_t{1} << size()) - 1)}; }
  [[nodiscard]] std::size_t powerset_size() const { return std::size_t{1} << size(); }
  [[nodiscard]] bool valid(Subset s) const { return s.subset_of(full()); }

  [[nodiscard]] Subset subset_of_names(std::span<const std::string> names) const;
  [[nodiscard]] std::vector<std::string> names_of(Subset s) const;
  /// "{a,c}" style rendering.
  [[nodiscard]] std::string describe(Subset s) const;

  /// The ground set made of the members of `s`, in order.
  [[nodiscard]] GroundSet restrict(Subset s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

void require_same_ground(const GroundSet& a, const GroundSet& b, std::string_view what);

/// A function X -> [0,1].
class Observable {
 public:
  Observable(GroundSet ground, std::vector<UnitValue> values);

  static Observable constant(const GroundSet& ground, const UnitValue& v);
  static Observable indicator(const GroundSet& ground, Subset s);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] std::span<const UnitValue> values() const { return values_; }
  [[nodiscard]] const UnitValue& operator()(std::size_t i) const { return values_[i]; }
  [[nodiscard]] const UnitValue& at(std::string_view name) const { return values_[ground_.index_of(name)]; }

  /// min over the members of a non-empty subset.
  [[nodiscard]] UnitValue min_on(Subset s) const;
  [[nodiscard]] UnitValue max_on(Subset s) const;

  /// Pointwise alpha ∧ phi and alpha ∨ phi.
  [[nodiscard]] Observable meet(const UnitValue& alpha) const;
  [[nodiscard]] Observable join(const UnitValue& alpha) const;

  /// Pointwise order.
  [[nodiscard]] bool leq(const Observable& o) const;

  friend bool operator==(const Observable& a, const Observable& b) {
    return a.ground_ == b.ground_ && a.values_ == b.values_;
  }

 private:
  GroundSet ground_;
  std::vector<UnitValue> values_;
};

/// {x : phi(x) >= alpha}
Subset upset_threshold(const Observable& phi, const UnitValue& alpha);

/// A map between finite ground sets.
class SpaceMap {
 public:
  SpaceMap(GroundSet domain, GroundSet codomain, std::vector<std::size_t> image);

  static SpaceMap identity(const GroundSet& ground);
  /// Inclusion of ground.restrict(s) into ground.
  static SpaceMap inclusion(const GroundSet& ground, Subset s);
  /// outer ∘ inner
  static SpaceMap compose(const SpaceMap& outer, const SpaceMap& inner);

  [[nodiscard]] const GroundSet& domain() const { return domain_; }
  [[nodiscard]] const GroundSet& codomain() const { return codomain_; }
  [[nodiscard]] std::size_t operator()(std::size_t i) const { return image_[i]; }
  [[nodiscard]] std::span<const std::size_t> images() const { return image_; }

  [[nodiscard]] Subset image(Subset s) const;
  [[nodiscard]] Subset preimage(Subset s) const;
  [[nodiscard]] bool injective() const;

  friend bool operator==(const SpaceMap&, const SpaceMap&) = default;

 private:
  GroundSet domain_;
  GroundSet codomain_;
  std::vector<std::size_t> image_;
};

}  // namespace capkit
