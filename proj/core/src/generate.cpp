#include "capkit/generate.hpp"

#include <algorithm>

namespace capkit {
namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

UnitValue random_value(Rng& rng, std::int64_t den) {
  return UnitValue(std::uniform_int_distribution<std::int64_t>(0, den)(rng), den);
}

Observable random_observable(Rng& rng, const GroundSet& ground, std::int64_t den) {
  std::vector<UnitValue> values(ground.size());
  for (auto& v : values) v = random_value(rng, den);
  return Observable(ground, std::move(values));
}

Capacity random_capacity(Rng& rng, const GroundSet& ground, std::int64_t den) {
  std::vector<Assignment> raw;
  const auto full = ground.full();
  for (std::uint32_t m = 1; m < full.bits; ++m) {
    // Sparse raw assignments give more varied completions than dense ones.
    if (uniform(rng, 0, 2) == 0) continue;
    raw.push_back({Subset{m}, random_value(rng, den)});
  }
  return build_capacity(ground, raw, BuildMode::monotone_completion);
}

Capacity random_probability(Rng& rng, const GroundSet& ground, std::int64_t den, std::vector<UnitValue>* weights) {
  // Random composition of den into n parts.
  std::vector<std::int64_t> cuts{0, den};
  for (std::size_t i = 1; i < ground.size(); ++i) cuts.push_back(std::uniform_int_distribution<std::int64_t>(0, den)(rng));
  std::sort(cuts.begin(), cuts.end());
  std::vector<UnitValue> p(ground.size());
  for (std::size_t i = 0; i < ground.size(); ++i) p[i] = UnitValue(cuts[i + 1] - cuts[i], den);

  std::vector<UnitValue> table(ground.powerset_size());
  for (std::uint32_t m = 0; m < table.size(); ++m) {
    Rational sum;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (Subset{m}.contains(i)) sum += p[i].rational();
    }
    table[m] = UnitValue(sum);
  }
  if (weights) *weights = p;
  return Capacity::from_table(ground, std::move(table));
}

InclusionHyperspace random_hyperspace(Rng& rng, const GroundSet& ground) {
  const auto top = ground.full().bits;
  std::vector<Subset> sets(uniform(rng, 1, 3));
  for (auto& s : sets) s = Subset{static_cast<std::uint32_t>(uniform(rng, 1, top))};
  return up_closure(ground, sets);
}

SpaceMap random_map(Rng& rng, const GroundSet& domain, const GroundSet& codomain) {
  std::vector<std::size_t> image(domain.size());
  for (auto& y : image) y = uniform(rng, 0, codomain.size() - 1);
  return SpaceMap(domain, codomain, std::move(image));
}

Capacity2 random_capacity2(Rng& rng, const GroundSet& ground, std::int64_t den, std::size_t max_support) {
  const std::size_t k = uniform(rng, 1, max_support);
  std::vector<Capacity> points;
  for (std::size_t i = 0; i < k; ++i) points.push_back(random_capacity(rng, ground, den));
  return Capacity2::make(std::move(points), random_capacity(rng, GroundSet::indices(k), den));
}

Capacity3 random_capacity3(Rng& rng, const GroundSet& ground, std::int64_t den, std::size_t max_outer,
                           std::size_t max_inner) {
  const std::size_t k = uniform(rng, 1, max_outer);
  std::vector<Capacity2> points;
  for (std::size_t i = 0; i < k; ++i) points.push_back(random_capacity2(rng, ground, den, max_inner));
  return Capacity3::make(std::move(points), random_capacity(rng, GroundSet::indices(k), den));
}

GeneratedHyperHyperspace random_hyperhyperspace(Rng& rng, const GroundSet& ground, std::size_t max_generators,
                                                std::size_t max_generator_size) {
  GeneratedHyperHyperspace out{ground, {}};
  const std::size_t gens = uniform(rng, 1, max_generators);
  for (std::size_t g = 0; g < gens; ++g) {
    auto& gen = out.generators.emplace_back();
    const std::size_t size = uniform(rng, 1, max_generator_size);
    for (std::size_t i = 0; i < size; ++i) gen.push_back(random_hyperspace(rng, ground));
  }
  return out;
}

GeneratedHyper3 random_hyper3(Rng& rng, const GroundSet& ground, std::size_t max_generators,
                              std::size_t max_generator_size) {
  GeneratedHyper3 out{ground, {}};
  const std::size_t gens = uniform(rng, 1, max_generators);
  for (std::size_t g = 0; g < gens; ++g) {
    auto& gen = out.generators.emplace_back();
    const std::size_t size = uniform(rng, 1, max_generator_size);
    for (std::size_t i = 0; i < size; ++i) {
      gen.push_back(random_hyperhyperspace(rng, ground, max_generators, max_generator_size));
    }
  }
  return out;
}

std::vector<Capacity> all_capacities(const GroundSet& ground, std::int64_t den) {
  const std::size_t size = ground.powerset_size();
  const std::uint32_t full = ground.full().bits;
  std::vector<UnitValue> grid;
  for (std::int64_t k = 0; k <= den; ++k) grid.emplace_back(k, den);

  std::vector<Capacity> out;
  std::vector<UnitValue> table(size, UnitValue::zero());
  table[full] = UnitValue::one();
  // Masks in increasing order see all their proper subsets first.
  auto fill = [&](auto&& self, std::uint32_t m) -> void {
    if (m >= full) {
      out.push_back(Capacity::from_table(ground, table, {ground.size()}));
      return;
    }
    UnitValue floor = UnitValue::zero();
    for (std::size_t x = 0; x < ground.size(); ++x) {
      if (Subset{m}.contains(x)) floor = std::max(floor, table[Subset{m}.without(x).bits]);
    }
    for (const auto& v : grid) {
      if (v < floor) continue;
      table[m] = v;
      self(self, m + 1);
    }
  };
  fill(fill, 1);
  std::sort(out.begin(), out.end());
  return out;
}

GroundSet letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(names));
}

}  // namespace capkit
