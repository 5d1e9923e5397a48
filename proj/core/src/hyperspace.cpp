#include "capkit/hyperspace.hpp"

#include <algorithm>

namespace capkit {

bool InclusionHyperspace::member(Subset f) const {
  return std::any_of(minimal_.begin(), minimal_.end(), [f](Subset k) { return k.subset_of(f); });
}

bool InclusionHyperspace::subfamily_of(const InclusionHyperspace& o) const {
  return std::all_of(minimal_.begin(), minimal_.end(), [&](Subset k) { return o.member(k); });
}

InclusionHyperspace up_closure(const GroundSet& ground, std::span<const Subset> sets) {
  if (sets.empty()) throw DomainError("up_closure: empty generating list");
  std::vector<Subset> sorted(sets.begin(), sets.end());
  for (const auto s : sorted) {
    if (s.is_empty()) throw DomainError("up_closure: the empty set cannot belong to an inclusion hyperspace");
    if (!ground.valid(s)) throw DomainError("up_closure: subset outside the ground set");
  }
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // A set can only be absorbed by one that sorts before it.
  std::vector<Subset> minimal;
  for (const auto s : sorted) {
    if (std::none_of(minimal.begin(), minimal.end(), [s](Subset k) { return k.subset_of(s); })) {
      minimal.push_back(s);
    }
  }
  return InclusionHyperspace(ground, std::move(minimal));
}

InclusionHyperspace up_closure(const GroundSet& ground, std::initializer_list<Subset> sets) {
  return up_closure(ground, std::span<const Subset>(sets.begin(), sets.size()));
}

InclusionHyperspace eta_G(const GroundSet& ground, std::size_t x) {
  if (x >= ground.size()) throw DomainError("eta_G: element index out of range");
  return up_closure(ground, {Subset::singleton(x)});
}

InclusionHyperspace map_hyperspace(const SpaceMap& f, const InclusionHyperspace& h) {
  require_same_ground(f.domain(), h.ground(), "map_hyperspace");
  std::vector<Subset> images;
  images.reserve(h.minimal().size());
  for (const auto k : h.minimal()) images.push_back(f.image(k));
  return up_closure(f.codomain(), images);
}

InclusionHyperspace intersect(std::span<const InclusionHyperspace> families) {
  if (families.empty()) throw DomainError("intersect: empty list of families");
  const GroundSet& ground = families.front().ground();
  for (const auto& h : families) require_same_ground(ground, h.ground(), "intersect");
  std::vector<Subset> members;
  const auto size = static_cast<std::uint32_t>(ground.powerset_size());
  for (std::uint32_t m = 1; m < size; ++m) {
    const Subset f{m};
    if (std::all_of(families.begin(), families.end(), [f](const InclusionHyperspace& h) { return h.member(f); })) {
      members.push_back(f);
    }
  }
  if (members.empty()) throw DomainError("intersect: intersection contains no sets");
  return up_closure(ground, members);
}

std::vector<InclusionHyperspace> all_hyperspaces(const GroundSet& ground) {
  // Upward-closed families of non-empty subsets correspond to non-empty
  // antichains; enumerate antichains by extending in canonical order.
  std::vector<Subset> candidates;
  const auto size = static_cast<std::uint32_t>(ground.powerset_size());
  for (std::uint32_t m = 1; m < size; ++m) candidates.push_back(Subset{m});
  std::sort(candidates.begin(), candidates.end(), canonical_less);

  std::vector<InclusionHyperspace> out;
  std::vector<Subset> chosen;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty()) out.push_back(up_closure(ground, chosen));
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const Subset s = candidates[i];
      if (std::any_of(chosen.begin(), chosen.end(), [s](Subset k) { return k.subset_of(s) || s.subset_of(k); })) {
        continue;
      }
      chosen.push_back(s);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

void GeneratedHyperHyperspace::validate() const {
  if (generators.empty()) throw DomainError("hyper-hyperspace needs at least one generator");
  for (const auto& gen : generators) {
    if (gen.empty()) throw DomainError("hyper-hyperspace generator must be non-empty");
    for (const auto& h : gen) require_same_ground(ground, h.ground(), "hyper-hyperspace");
  }
}

InclusionHyperspace mu_G(const GeneratedHyperHyperspace& hh) {
  hh.validate();
  // Any H containing a generator H₀ has ⋂H ⊆ ⋂H₀, so generators suffice.
  std::vector<Subset> members;
  for (const auto& gen : hh.generators) {
    const InclusionHyperspace meet = intersect(gen);
    members.insert(members.end(), meet.minimal().begin(), meet.minimal().end());
  }
  return up_closure(hh.ground, members);
}

UnitValue m_lower(const InclusionHyperspace& h, const Observable& phi) {
  require_same_ground(h.ground(), phi.ground(), "m_lower");
  UnitValue best = UnitValue::one();
  for (const auto k : h.minimal()) best = std::min(best, phi.max_on(k));
  return best;
}

UnitValue m_upper(const InclusionHyperspace& h, const Observable& phi) {
  require_same_ground(h.ground(), phi.ground(), "m_upper");
  UnitValue best = UnitValue::zero();
  for (const auto k : h.minimal()) best = std::max(best, phi.min_on(k));
  return best;
}

Capacity embed_capacity(const InclusionHyperspace& h) {
  std::vector<UnitValue> table(h.ground().powerset_size());
  for (std::uint32_t m = 0; m < table.size(); ++m) {
    table[m] = h.member(Subset{m}) ? UnitValue::one() : UnitValue::zero();
  }
  return Capacity::from_table(h.ground(), std::move(table), {h.ground().size()});
}

GeneratedHyperHyperspace eta_GG(const InclusionHyperspace& h) { return {h.ground(), {{h}}}; }

GeneratedHyperHyperspace map_eta_G(const InclusionHyperspace& h) {
  GeneratedHyperHyperspace out{h.ground(), {}};
  for (const auto k : h.minimal()) {
    auto& gen = out.generators.emplace_back();
    for (std::size_t x = 0; x < h.ground().size(); ++x) {
      if (k.contains(x)) gen.push_back(eta_G(h.ground(), x));
    }
  }
  return out;
}

GeneratedHyperHyperspace mu_GG(const GeneratedHyper3& hhh) {
  if (hhh.generators.empty()) throw DomainError("level-3 hyperspace needs at least one generator");
  GeneratedHyperHyperspace out{hhh.ground, {}};
  for (const auto& gen : hhh.generators) {
    if (gen.empty()) throw DomainError("level-3 generator must be non-empty");
    // Generators of the intersection: one generator from each member, united.
    std::vector<std::vector<InclusionHyperspace>> meet{{}};
    for (const auto& member : gen) {
      member.validate();
      require_same_ground(hhh.ground, member.ground, "mu_GG");
      std::vector<std::vector<InclusionHyperspace>> next;
      for (const auto& partial : meet) {
        for (const auto& g : member.generators) {
          std::vector<InclusionHyperspace> united = partial;
          united.insert(united.end(), g.begin(), g.end());
          std::sort(united.begin(), united.end());
          united.erase(std::unique(united.begin(), united.end()), united.end());
          next.push_back(std::move(united));
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      meet = std::move(next);
    }
    out.generators.insert(out.generators.end(), meet.begin(), meet.end());
  }
  return out;
}

GeneratedHyperHyperspace map_mu_G(const GeneratedHyper3& hhh) {
  GeneratedHyperHyperspace out{hhh.ground, {}};
  for (const auto& gen : hhh.generators) {
    auto& image = out.generators.emplace_back();
    for (const auto& member : gen) image.push_back(mu_G(member));
  }
  return out;
}

}  // namespace capkit
