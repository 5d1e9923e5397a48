#pragma once

#include <span>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/space.hpp"

namespace capkit {

/// An inclusion hyperspace: a non-empty upward-closed family of non-empty
/// subsets, held as its antichain of minimal members in canonical order.
class InclusionHyperspace {
 public:
  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] std::span<const Subset> minimal() const { return minimal_; }

  /// F ⊇ K for some minimal K.
  [[nodiscard]] bool member(Subset f) const;
  /// Every member of this family is a member of `o`.
  [[nodiscard]] bool subfamily_of(const InclusionHyperspace& o) const;

  friend bool operator==(const InclusionHyperspace& a, const InclusionHyperspace& b) {
    return a.ground_ == b.ground_ && a.minimal_ == b.minimal_;
  }
  friend bool operator<(const InclusionHyperspace& a, const InclusionHyperspace& b) {
    return a.minimal_ < b.minimal_;
  }

 private:
  friend InclusionHyperspace up_closure(const GroundSet& ground, std::span<const Subset> sets);
  InclusionHyperspace(GroundSet ground, std::vector<Subset> minimal)
      : ground_(std::move(ground)), minimal_(std::move(minimal)) {}

  GroundSet ground_;
  std::vector<Subset> minimal_;
};

/// The upward closure of `sets`; rejects an empty list and the empty set.
InclusionHyperspace up_closure(const GroundSet& ground, std::span<const Subset> sets);
InclusionHyperspace up_closure(const GroundSet& ground, std::initializer_list<Subset> sets);

/// All subsets containing x.
InclusionHyperspace eta_G(const GroundSet& ground, std::size_t x);

/// Gf: the family of supersets of images of members.
InclusionHyperspace map_hyperspace(const SpaceMap& f, const InclusionHyperspace& h);

/// Intersection of the families (as sets of subsets), for a non-empty list.
InclusionHyperspace intersect(std::span<const InclusionHyperspace> families);

/// Every inclusion hyperspace on `ground`, in canonical order. Exponential;
/// meant for small ground sets.
std::vector<InclusionHyperspace> all_hyperspaces(const GroundSet& ground);

/// A finitely generated element of G²X: the upward closure (in the powerset
/// of GX) of the given generator sets.
struct GeneratedHyperHyperspace {
  GroundSet ground;
  std::vector<std::vector<InclusionHyperspace>> generators;

  /// Checks non-empty generators on a common ground; throws DomainError.
  void validate() const;
};

/// Union over generators of the intersection of their families.
InclusionHyperspace mu_G(const GeneratedHyperHyperspace& hh);

/// Unit at GX: the principal family {H : h ∈ H}, generated by {{h}}.
GeneratedHyperHyperspace eta_GG(const InclusionHyperspace& h);
/// G(η_G)(h): generated by {{η_G(x) : x ∈ K} : K minimal in h}.
GeneratedHyperHyperspace map_eta_G(const InclusionHyperspace& h);

/// A finitely generated element of G³X.
struct GeneratedHyper3 {
  GroundSet ground;
  std::vector<std::vector<GeneratedHyperHyperspace>> generators;
};

/// Multiplication at GX, G³X → G²X. The intersection of finitely generated
/// families is generated by unions of one generator from each.
GeneratedHyperHyperspace mu_GG(const GeneratedHyper3& hhh);
/// G(μ_G): each generator's members replaced by their μ_G image.
GeneratedHyperHyperspace map_mu_G(const GeneratedHyper3& hhh);

/// min over members F of max_F phi.
UnitValue m_lower(const InclusionHyperspace& h, const Observable& phi);
/// max over members F of min_F phi.
UnitValue m_upper(const InclusionHyperspace& h, const Observable& phi);

/// The 0/1 capacity c(F) = [F ∈ h].
Capacity embed_capacity(const InclusionHyperspace& h);

}  // namespace capkit
