#include "capkit/laws.hpp"

#include <algorithm>

#include "capkit/functional.hpp"
#include "capkit/generate.hpp"
#include "capkit/integrals.hpp"
#include "capkit/monad.hpp"
#include "capkit/subgraph.hpp"

namespace capkit {
namespace {

constexpr std::size_t kMaxWitnesses = 5;

std::string describe(const Capacity& c) {
  std::string out = "[";
  for (std::size_t m = 0; m < c.table().size(); ++m) {
    if (m) out += ' ';
    out += c.table()[m].str();
  }
  return out + "]";
}

std::string describe(const Observable& phi) {
  std::string out = "(";
  for (std::size_t i = 0; i < phi.values().size(); ++i) {
    if (i) out += ' ';
    out += phi(i).str();
  }
  return out + ")";
}

std::string describe(const InclusionHyperspace& h) {
  std::string out = "up{";
  for (std::size_t i = 0; i < h.minimal().size(); ++i) {
    if (i) out += ',';
    out += h.ground().describe(h.minimal()[i]);
  }
  return out + "}";
}

std::int64_t lcm_of(const Capacity& c, const Observable& phi) {
  std::int64_t d = c.common_denominator();
  for (const auto& v : phi.values()) d = lcm_checked(d, v.den());
  return d;
}

/// Capacity2 over the 9 capacities on {a,b} with values in {0,1/2,1}:
/// every single point, and every pair with every grid index capacity.
std::vector<Capacity2> exhaustive_capacity2(const std::vector<Capacity>& family) {
  std::vector<Capacity2> out;
  for (const auto& c : family) out.push_back(eta_MM(c));
  const auto pair_weights = all_capacities(GroundSet::indices(2), 2);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      for (const auto& w : pair_weights) out.push_back(Capacity2::make({family[i], family[j]}, w));
    }
  }
  return out;
}

}  // namespace

void LawCheck::record(bool ok, const std::string& witness) {
  ++instances;
  if (ok) return;
  ++failures;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness);
}

bool LawReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.failures == 0; });
}

LawReport run_monad_m_laws(const LawOptions& options) {
  Rng rng(options.seed);
  LawReport report{"monad-m", {}};
  LawCheck left{"unit-left mu_M . eta_MM = id"};
  LawCheck right{"unit-right mu_M . M(eta_M) = id"};
  LawCheck left2{"level-2 unit-left mu_MM . eta = id"};
  LawCheck right2{"level-2 unit-right mu_MM . M(eta_MX) = id"};
  LawCheck assoc{"associativity mu_M . M(mu_M) = mu_M . mu_MM"};
  LawCheck natural{"naturality Mf . mu_M = mu_M . M(Mf)"};
  LawCheck delta{"delta identity mu_M(C)(phi) = C(delta_phi)"};

  const GroundSet pair = letters(2);
  const auto family = all_capacities(pair, 2);
  for (const auto& c : family) {
    left.record(mu_M(eta_MM(c)) == c, describe(c));
    right.record(mu_M(map_eta(c)) == c, describe(c));
  }
  for (const auto& c2 : exhaustive_capacity2(family)) {
    left2.record(mu_MM(eta_MMM(c2)) == c2, describe(mu_M(c2)));
    right2.record(mu_MM(map_eta2(c2)) == c2, describe(mu_M(c2)));
  }

  for (std::size_t n = 0; n < options.random_instances; ++n) {
    const GroundSet ground = letters(1 + n % 3);
    const std::int64_t den = 1 + static_cast<std::int64_t>(n % 6);
    const Capacity c = random_capacity(rng, ground, den);
    left.record(mu_M(eta_MM(c)) == c, describe(c));
    right.record(mu_M(map_eta(c)) == c, describe(c));

    const Capacity3 c3 = random_capacity3(rng, ground, den, 3, 3);
    const Capacity lhs = mu_M(map_mu(c3));
    const Capacity rhs = mu_M(mu_MM(c3));
    assoc.record(lhs == rhs, describe(lhs) + " vs " + describe(rhs));

    const Capacity2 c2 = random_capacity2(rng, ground, den, 3);
    const GroundSet target = letters(1 + (n / 3) % 3);
    const SpaceMap f = random_map(rng, ground, target);
    natural.record(pushforward(f, mu_M(c2)) == mu_M(pushforward2(f, c2)), describe(mu_M(c2)));

    const Observable phi = random_observable(rng, ground, den);
    delta.record(mu_via_delta(c2, phi) == sugeno(mu_M(c2), phi), describe(mu_M(c2)) + " phi=" + describe(phi));
  }
  report.checks = {left, right, left2, right2, assoc, natural, delta};
  return report;
}

LawReport run_monad_g_laws(const LawOptions& options) {
  Rng rng(options.seed);
  LawReport report{"monad-g", {}};
  LawCheck left{"unit-left mu_G . eta_GG = id"};
  LawCheck right{"unit-right mu_G . G(eta_G) = id"};
  LawCheck assoc{"associativity mu_G . G(mu_G) = mu_G . mu_GG"};
  LawCheck functor{"functoriality G(g . f) = Gg . Gf"};
  LawCheck natural{"naturality Gf . eta_G = eta_G . f"};

  for (std::size_t n = 1; n <= 3; ++n) {
    const GroundSet ground = letters(n);
    for (const auto& h : all_hyperspaces(ground)) {
      left.record(mu_G(eta_GG(h)) == h, describe(h));
      right.record(mu_G(map_eta_G(h)) == h, describe(h));
      functor.record(map_hyperspace(SpaceMap::identity(ground), h) == h, describe(h));
    }
  }

  const std::size_t assoc_instances = std::max<std::size_t>(500, options.random_instances / 2);
  for (std::size_t n = 0; n < assoc_instances; ++n) {
    const GroundSet ground = letters(1 + n % 3);
    const GeneratedHyper3 hhh = random_hyper3(rng, ground, 2, 2);
    const InclusionHyperspace lhs = mu_G(map_mu_G(hhh));
    const InclusionHyperspace rhs = mu_G(mu_GG(hhh));
    assoc.record(lhs == rhs, describe(lhs) + " vs " + describe(rhs));

    const InclusionHyperspace h = random_hyperspace(rng, ground);
    const GroundSet mid = letters(1 + (n / 3) % 3);
    const GroundSet last = letters(1 + (n / 9) % 3);
    const SpaceMap f = random_map(rng, ground, mid);
    const SpaceMap g = random_map(rng, mid, last);
    functor.record(map_hyperspace(SpaceMap::compose(g, f), h) == map_hyperspace(g, map_hyperspace(f, h)), describe(h));
    const std::size_t x = n % ground.size();
    natural.record(map_hyperspace(f, eta_G(ground, x)) == eta_G(mid, f(x)), describe(h));
  }
  report.checks = {left, right, assoc, functor, natural};
  return report;
}

LawReport run_morphism_laws(const LawOptions& options) {
  Rng rng(options.seed);
  LawReport report{"morphism", {}};
  LawCheck exhaustive{"morphism squares, |X|=2 exhaustive"};
  LawCheck randomized{"morphism squares, |X|=3 randomized"};

  const GroundSet pair = letters(2);
  const auto spaces = all_hyperspaces(pair);
  std::vector<std::vector<InclusionHyperspace>> generator_sets;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    generator_sets.push_back({spaces[i]});
    for (std::size_t j = i + 1; j < spaces.size(); ++j) generator_sets.push_back({spaces[i], spaces[j]});
  }
  const std::uint32_t combos = std::uint32_t{1} << generator_sets.size();
  for (std::uint32_t m = 1; m < combos; ++m) {
    GeneratedHyperHyperspace hh{pair, {}};
    for (std::size_t g = 0; g < generator_sets.size(); ++g) {
      if (Subset{m}.contains(g)) hh.generators.push_back(generator_sets[g]);
    }
    const Report r = check_morphism(hh);
    exhaustive.record(r.passed(), r.passed() ? "" : r.violations.front().detail);
  }

  const std::size_t instances = std::max<std::size_t>(500, options.random_instances / 2);
  const GroundSet triple = letters(3);
  for (std::size_t n = 0; n < instances; ++n) {
    const Report r = check_morphism(random_hyperhyperspace(rng, triple, 3, 3));
    randomized.record(r.passed(), r.passed() ? "" : r.violations.front().detail);
  }
  report.checks = {exhaustive, randomized};
  return report;
}

LawReport run_integral_laws(const LawOptions& options) {
  Rng rng(options.seed);
  LawReport report{"integrals", {}};
  LawCheck grid{"sugeno candidate set = dense grid"};
  LawCheck fuzzy_min{"fuzzy(min) = sugeno"};
  LawCheck expectation{"choquet = expectation for probabilities"};
  LawCheck comonotone{"choquet comonotone additivity"};
  LawCheck indicator{"indicator recovery"};
  LawCheck upper{"sugeno(embed(F), phi) = m_upper(F, phi)"};
  LawCheck roundtrip{"reconstruct(sugeno functional) = c"};

  for (std::size_t n = 0; n < options.random_instances; ++n) {
    const GroundSet ground = letters(1 + n % 4);
    const std::int64_t den = 1 + static_cast<std::int64_t>(n % 8);
    const Capacity c = random_capacity(rng, ground, den);
    const Observable phi = random_observable(rng, ground, 1 + static_cast<std::int64_t>((n / 8) % 7));

    const std::int64_t d = lcm_of(c, phi);
    UnitValue brute = UnitValue::zero();
    for (std::int64_t k = 0; k <= d; ++k) {
      const UnitValue alpha(k, d);
      brute = std::max(brute, std::min(alpha, c(upset_threshold(phi, alpha))));
    }
    const UnitValue s = sugeno(c, phi);
    grid.record(s == brute, describe(c) + " phi=" + describe(phi));
    fuzzy_min.record(fuzzy(c, phi, Pseudomultiplication::min()).value == s, describe(c) + " phi=" + describe(phi));

    std::vector<UnitValue> weights;
    const Capacity p = random_probability(rng, ground, den, &weights);
    Rational mean;
    for (std::size_t i = 0; i < ground.size(); ++i) mean += weights[i].rational() * phi(i).rational();
    expectation.record(choquet(p, phi).rational() == mean, describe(p) + " phi=" + describe(phi));

    // Comonotone pair: two non-decreasing value lists laid out along a common permutation.
    std::vector<std::size_t> order(ground.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<UnitValue> u(ground.size()), v(ground.size());
    for (auto& x : u) x = random_value(rng, den);
    for (auto& x : v) x = random_value(rng, den);
    std::sort(u.begin(), u.end());
    std::sort(v.begin(), v.end());
    std::vector<UnitValue> pu(ground.size()), pv(ground.size()), mid(ground.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      pu[order[i]] = u[i];
      pv[order[i]] = v[i];
      mid[order[i]] = UnitValue((u[i].rational() + v[i].rational()) / Rational(2));
    }
    const Rational lhs = choquet(c, Observable(ground, mid)).rational();
    const Rational rhs = (choquet(c, Observable(ground, pu)).rational() + choquet(c, Observable(ground, pv)).rational()) /
                         Rational(2);
    comonotone.record(lhs == rhs, describe(c));

    const Subset f{static_cast<std::uint32_t>(n % ground.powerset_size())};
    const Observable chi = Observable::indicator(ground, f);
    indicator.record(sugeno(c, chi) == c(f) && choquet(c, chi) == c(f), describe(c));

    const InclusionHyperspace h = random_hyperspace(rng, ground);
    upper.record(sugeno(embed_capacity(h), phi) == m_upper(h, phi), describe(h) + " phi=" + describe(phi));

    if (ground.size() <= 3) roundtrip.record(reconstruct(Functional::sugeno_of(c)) == c, describe(c));
  }
  report.checks = {grid, fuzzy_min, expectation, comonotone, indicator, upper, roundtrip};
  return report;
}

LawReport run_law_suite(const std::string& suite, const LawOptions& options) {
  if (suite == "monad-m") return run_monad_m_laws(options);
  if (suite == "monad-g") return run_monad_g_laws(options);
  if (suite == "morphism") return run_morphism_laws(options);
  if (suite == "integrals") return run_integral_laws(options);
  throw DomainError("unknown law suite '" + suite + "'");
}

}  // namespace capkit
