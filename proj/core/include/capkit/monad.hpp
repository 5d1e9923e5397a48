#pragma once

// Finitely supported higher-level capacities and the capacity monad
// structure (unit, multiplication, functor action) on them.

#include <algorithm>
#include <span>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/hyperspace.hpp"
#include "capkit/report.hpp"

namespace capkit {

/// A capacity on a space of points (capacities, or capacities of
/// capacities) with finite support: a list of distinct points plus a
/// capacity on their index set. The value of a predicate P is
/// index({i : P(support[i])}).
///
/// Supports are kept sorted and duplicate-free, so two instances describe
/// the same higher-level capacity iff they compare equal.
template <class Point>
class FiniteCapacity {
 public:
  /// Canonicalizes: sorts and deduplicates `points`, pushing `weights` (a
  /// capacity on {0..k-1}) forward along the quotient map.
  static FiniteCapacity make(std::vector<Point> points, const Capacity& weights) {
    if (points.empty()) throw DomainError("finite support must be non-empty");
    if (weights.ground().size() != points.size()) {
      throw DomainError("index capacity size does not match the number of support points");
    }
    for (const auto& p : points) require_same_ground(points.front().ground(), p.ground(), "finite support");

    std::vector<Point> unique = points;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

    std::vector<std::size_t> quotient(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      quotient[i] = static_cast<std::size_t>(std::lower_bound(unique.begin(), unique.end(), points[i]) - unique.begin());
    }
    const GroundSet index_ground = GroundSet::indices(unique.size());
    const SpaceMap q(GroundSet::indices(points.size()), index_ground, std::move(quotient));
    Capacity index = pushforward(q, weights);
    return FiniteCapacity(points.front().ground(), std::move(unique), std::move(index));
  }

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] std::span<const Point> support() const { return support_; }
  [[nodiscard]] const Capacity& index() const { return index_; }

  template <class Pred>
  [[nodiscard]] UnitValue value(Pred&& pred) const {
    Subset s;
    for (std::size_t i = 0; i < support_.size(); ++i) {
      if (pred(support_[i])) s = s.with(i);
    }
    return index_(s);
  }

  friend bool operator==(const FiniteCapacity& a, const FiniteCapacity& b) {
    return a.ground_ == b.ground_ && a.support_ == b.support_ && a.index_ == b.index_;
  }
  friend bool operator<(const FiniteCapacity& a, const FiniteCapacity& b) {
    if (a.support_ != b.support_) return a.support_ < b.support_;
    return a.index_ < b.index_;
  }

 private:
  FiniteCapacity(GroundSet ground, std::vector<Point> support, Capacity index)
      : ground_(std::move(ground)), support_(std::move(support)), index_(std::move(index)) {}

  GroundSet ground_;
  std::vector<Point> support_;
  Capacity index_;
};

using Capacity2 = FiniteCapacity<Capacity>;
using Capacity3 = FiniteCapacity<Capacity2>;

/// The unique capacity on a one-point index set.
Capacity point_capacity();

/// sup{α : C({c : c(F) ≥ α}) ≥ α} for each F.
Capacity mu_M(const Capacity2& c2);

/// Unit at MX: the Dirac capacity at c.
Capacity2 eta_MM(const Capacity& c);
/// Unit at M²X.
Capacity3 eta_MMM(const Capacity2& c2);

/// M(η_M)(c): c pushed forward along x ↦ dirac(x).
Capacity2 map_eta(const Capacity& c);
/// M(η_MX)(C): C pushed forward along c ↦ eta_MM(c).
Capacity3 map_eta2(const Capacity2& c2);

/// M(Mf)(C)
Capacity2 pushforward2(const SpaceMap& f, const Capacity2& c2);

/// Multiplication at MX: M³X → M²X.
Capacity2 mu_MM(const Capacity3& c3);
/// M(μ_M)(C3): μ_M applied to each support point.
Capacity2 map_mu(const Capacity3& c3);

/// Sugeno integral of i ↦ sugeno(support[i], φ) with respect to the index
/// capacity; equals sugeno(mu_M(C), φ).
UnitValue mu_via_delta(const Capacity2& c2, const Observable& phi);

/// Level-2 encoding of a finitely generated element of G²X: the support is
/// the embedded hyperspaces occurring in generators, and the index capacity
/// is 1 exactly on sets of them containing some generator.
Capacity2 encode_hyperhyperspace(const GeneratedHyperHyperspace& hh);

/// Checks both morphism squares for hyperspace → capacity on this input:
/// embed(eta_G(x)) = dirac(x) for all x, and
/// embed(mu_G(hh)) = mu_M(encode_hyperhyperspace(hh)).
Report check_morphism(const GeneratedHyperHyperspace& hh);

}  // namespace capkit
