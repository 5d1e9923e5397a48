#pragma once

// Random and exhaustive instance generators for property checks.

#include <random>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/hyperspace.hpp"
#include "capkit/monad.hpp"

namespace capkit {

using Rng = std::mt19937_64;

/// Uniform value on the 1/den lattice.
UnitValue random_value(Rng& rng, std::int64_t den);
Observable random_observable(Rng& rng, const GroundSet& ground, std::int64_t den);
/// Monotone completion of random raw values on the 1/den lattice.
Capacity random_capacity(Rng& rng, const GroundSet& ground, std::int64_t den);
/// Additive capacity c(F) = Σ_{x∈F} p(x) for random weights on the 1/den lattice.
Capacity random_probability(Rng& rng, const GroundSet& ground, std::int64_t den, std::vector<UnitValue>* weights = nullptr);
InclusionHyperspace random_hyperspace(Rng& rng, const GroundSet& ground);
SpaceMap random_map(Rng& rng, const GroundSet& domain, const GroundSet& codomain);

/// Capacity2 with 1..max_support support points.
Capacity2 random_capacity2(Rng& rng, const GroundSet& ground, std::int64_t den, std::size_t max_support);
Capacity3 random_capacity3(Rng& rng, const GroundSet& ground, std::int64_t den, std::size_t max_outer,
                           std::size_t max_inner);

GeneratedHyperHyperspace random_hyperhyperspace(Rng& rng, const GroundSet& ground, std::size_t max_generators,
                                                std::size_t max_generator_size);
GeneratedHyper3 random_hyper3(Rng& rng, const GroundSet& ground, std::size_t max_generators,
                              std::size_t max_generator_size);

/// Every capacity on `ground` with values on the 1/den lattice, in
/// lexicographic table order.
std::vector<Capacity> all_capacities(const GroundSet& ground, std::int64_t den);

/// Elements named "a", "b", ... .
GroundSet letters(std::size_t n);

}  // namespace capkit
