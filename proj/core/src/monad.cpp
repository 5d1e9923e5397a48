#include "capkit/monad.hpp"

#include <map>
#include <set>

#include "capkit/integrals.hpp"

namespace capkit {
namespace {

/// Largest candidate α with g(α) ≥ α. Correct whenever g is non-increasing,
/// left-continuous and only jumps right after candidate points, and the
/// candidates include the values of g together with 0 and 1.
template <class G>
UnitValue attained_sup(std::set<UnitValue> candidates, G&& g) {
  candidates.insert(UnitValue::zero());
  candidates.insert(UnitValue::one());
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    if (g(*it) >= *it) return *it;
  }
  return UnitValue::zero();
}

/// Relabels the elements of `ground` as "0".."n-1", keeping their order.
SpaceMap to_indices(const GroundSet& ground) {
  std::vector<std::size_t> image(ground.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return SpaceMap(ground, GroundSet::indices(ground.size()), std::move(image));
}

}  // namespace

Capacity point_capacity() {
  return Capacity::from_table(GroundSet::indices(1), {UnitValue::zero(), UnitValue::one()});
}

Capacity mu_M(const Capacity2& c2) {
  const GroundSet& ground = c2.ground();
  const auto support = c2.support();
  const std::set<UnitValue> base(c2.index().table().begin(), c2.index().table().end());

  std::vector<UnitValue> table(ground.powerset_size());
  for (std::uint32_t m = 0; m < table.size(); ++m) {
    const Subset f{m};
    std::set<UnitValue> candidates = base;
    for (const auto& c : support) candidates.insert(c(f));
    table[m] = attained_sup(std::move(candidates), [&](const UnitValue& alpha) {
      return c2.value([&](const Capacity& c) { return c(f) >= alpha; });
    });
  }
  return Capacity::from_table(ground, std::move(table), {ground.size()});
}

Capacity2 eta_MM(const Capacity& c) { return Capacity2::make({c}, point_capacity()); }

Capacity3 eta_MMM(const Capacity2& c2) { return Capacity3::make({c2}, point_capacity()); }

Capacity2 map_eta(const Capacity& c) {
  const GroundSet& ground = c.ground();
  std::vector<Capacity> points;
  points.reserve(ground.size());
  for (std::size_t x = 0; x < ground.size(); ++x) points.push_back(dirac(ground, x));
  return Capacity2::make(std::move(points), pushforward(to_indices(ground), c));
}

Capacity3 map_eta2(const Capacity2& c2) {
  std::vector<Capacity2> points;
  points.reserve(c2.support().size());
  for (const auto& c : c2.support()) points.push_back(eta_MM(c));
  return Capacity3::make(std::move(points), c2.index());
}

Capacity2 pushforward2(const SpaceMap& f, const Capacity2& c2) {
  require_same_ground(f.domain(), c2.ground(), "pushforward2");
  std::vector<Capacity> points;
  points.reserve(c2.support().size());
  for (const auto& c : c2.support()) points.push_back(pushforward(f, c));
  return Capacity2::make(std::move(points), c2.index());
}

Capacity2 mu_MM(const Capacity3& c3) {
  // Union of the inner supports, in canonical order.
  std::vector<Capacity> united;
  for (const auto& inner : c3.support()) united.insert(united.end(), inner.support().begin(), inner.support().end());
  std::sort(united.begin(), united.end());
  united.erase(std::unique(united.begin(), united.end()), united.end());
  if (united.size() > kMaskWidth) throw DomainError("mu_MM: united support too large");

  // position[j][i]: where inner support point i of C_j sits in `united`.
  std::vector<std::vector<std::size_t>> position;
  for (const auto& inner : c3.support()) {
    auto& pos = position.emplace_back();
    for (const auto& c : inner.support()) {
      pos.push_back(static_cast<std::size_t>(std::lower_bound(united.begin(), united.end(), c) - united.begin()));
    }
  }

  const std::set<UnitValue> base(c3.index().table().begin(), c3.index().table().end());
  const GroundSet index_ground = GroundSet::indices(united.size());
  std::vector<UnitValue> table(index_ground.powerset_size());
  for (std::uint32_t m = 0; m < table.size(); ++m) {
    const Subset s{m};
    // Value of each C_j on the set s of capacities.
    std::vector<UnitValue> inner_values;
    inner_values.reserve(c3.support().size());
    for (std::size_t j = 0; j < c3.support().size(); ++j) {
      const auto& inner = c3.support()[j];
      Subset hit;
      for (std::size_t i = 0; i < inner.support().size(); ++i) {
        if (s.contains(position[j][i])) hit = hit.with(i);
      }
      inner_values.push_back(inner.index()(hit));
    }
    std::set<UnitValue> candidates = base;
    candidates.insert(inner_values.begin(), inner_values.end());
    table[m] = attained_sup(std::move(candidates), [&](const UnitValue& alpha) {
      Subset chosen;
      for (std::size_t j = 0; j < inner_values.size(); ++j) {
        if (inner_values[j] >= alpha) chosen = chosen.with(j);
      }
      return c3.index()(chosen);
    });
  }
  return Capacity2::make(std::move(united), Capacity::from_table(index_ground, std::move(table), {united.size()}));
}

Capacity2 map_mu(const Capacity3& c3) {
  std::vector<Capacity> points;
  points.reserve(c3.support().size());
  for (const auto& inner : c3.support()) points.push_back(mu_M(inner));
  return Capacity2::make(std::move(points), c3.index());
}

UnitValue mu_via_delta(const Capacity2& c2, const Observable& phi) {
  require_same_ground(c2.ground(), phi.ground(), "mu_via_delta");
  std::vector<UnitValue> delta;
  delta.reserve(c2.support().size());
  for (const auto& c : c2.support()) delta.push_back(sugeno(c, phi));
  return sugeno(c2.index(), Observable(c2.index().ground(), std::move(delta)));
}

Capacity2 encode_hyperhyperspace(const GeneratedHyperHyperspace& hh) {
  hh.validate();
  std::vector<InclusionHyperspace> occurring;
  for (const auto& gen : hh.generators) occurring.insert(occurring.end(), gen.begin(), gen.end());
  std::sort(occurring.begin(), occurring.end());
  occurring.erase(std::unique(occurring.begin(), occurring.end()), occurring.end());
  if (occurring.size() > kMaskWidth) throw DomainError("encode: too many distinct hyperspaces");

  std::vector<Subset> generator_sets;
  for (const auto& gen : hh.generators) {
    Subset s;
    for (const auto& h : gen) {
      s = s.with(static_cast<std::size_t>(std::lower_bound(occurring.begin(), occurring.end(), h) - occurring.begin()));
    }
    generator_sets.push_back(s);
  }

  const GroundSet index_ground = GroundSet::indices(occurring.size());
  std::vector<UnitValue> table(index_ground.powerset_size());
  for (std::uint32_t m = 0; m < table.size(); ++m) {
    const bool hit = std::any_of(generator_sets.begin(), generator_sets.end(),
                                 [m](Subset g) { return g.subset_of(Subset{m}); });
    table[m] = hit ? UnitValue::one() : UnitValue::zero();
  }

  std::vector<Capacity> points;
  points.reserve(occurring.size());
  for (const auto& h : occurring) points.push_back(embed_capacity(h));
  return Capacity2::make(std::move(points), Capacity::from_table(index_ground, std::move(table), {occurring.size()}));
}

Report check_morphism(const GeneratedHyperHyperspace& hh) {
  Report report;
  const GroundSet& ground = hh.ground;

  for (std::size_t x = 0; x < ground.size(); ++x) {
    ++report.checked;
    const Capacity lhs = embed_capacity(eta_G(ground, x));
    const Capacity rhs = dirac(ground, x);
    if (lhs == rhs) continue;
    for (std::uint32_t m = 0; m < ground.powerset_size(); ++m) {
      if (lhs(Subset{m}) != rhs(Subset{m})) {
        report.add({"unit-square", "embed(eta_G(" + ground.name(x) + ")) ≠ dirac(" + ground.name(x) + ")",
                    {Subset{m}}, {lhs(Subset{m}), rhs(Subset{m})}});
        break;
      }
    }
  }

  ++report.checked;
  const Capacity lhs = embed_capacity(mu_G(hh));
  const Capacity rhs = mu_M(encode_hyperhyperspace(hh));
  for (std::uint32_t m = 0; m < ground.powerset_size(); ++m) {
    if (lhs(Subset{m}) != rhs(Subset{m})) {
      report.add({"multiplication-square", "embed(mu_G) ≠ mu_M(encode) at " + ground.describe(Subset{m}),
                  {Subset{m}}, {lhs(Subset{m}), rhs(Subset{m})}});
      break;
    }
  }
  return report;
}

}  // namespace capkit
