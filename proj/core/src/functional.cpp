#include "capkit/functional.hpp"

#include <algorithm>

#include "capkit/integrals.hpp"

namespace capkit {
namespace {

std::vector<UnitValue> grid_values(std::int64_t grid) {
  std::vector<UnitValue> out;
  for (std::int64_t k = 0; k <= grid; ++k) out.emplace_back(k, grid);
  return out;
}

std::vector<UnitValue> observable_values(const Observable& phi) { return {phi.values().begin(), phi.values().end()}; }

}  // namespace

Functional::Functional(GroundSet ground, std::string name, Rule rule, std::int64_t grid)
    : ground_(std::move(ground)), name_(std::move(name)), rule_(std::move(rule)), grid_(grid) {
  if (grid_ < 1) throw DomainError("functional grid must be positive");
}

Functional Functional::sugeno_of(const Capacity& c) {
  return Functional(c.ground(), "sugeno", [c](const Observable& phi) { return sugeno(c, phi); },
                    c.common_denominator());
}

Functional Functional::max_value(const GroundSet& ground) {
  return Functional(ground, "max", [](const Observable& phi) { return phi.max_on(phi.ground().full()); }, 1);
}

Functional Functional::point_evaluation(const GroundSet& ground, std::size_t x) {
  if (x >= ground.size()) throw DomainError("point evaluation: element index out of range");
  return Functional(ground, "eval:" + ground.name(x), [x](const Observable& phi) { return phi(x); }, 1);
}

Functional Functional::from_table(const GroundSet& ground, std::int64_t grid,
                                  std::map<std::vector<UnitValue>, UnitValue> table) {
  for (const auto& [key, value] : table) {
    if (key.size() != ground.size()) throw DomainError("functional table entry has the wrong arity");
    for (const auto& v : key) {
      if ((v.rational() * Rational(grid)).den() != 1) {
        throw DomainError("functional table entry off the 1/" + std::to_string(grid) + " grid");
      }
    }
  }
  auto shared = std::make_shared<const std::map<std::vector<UnitValue>, UnitValue>>(std::move(table));
  return Functional(
      ground, "table",
      [shared](const Observable& phi) {
        const auto it = shared->find(observable_values(phi));
        if (it == shared->end()) throw DomainError("functional table has no entry for the requested observable");
        return it->second;
      },
      grid);
}

UnitValue Functional::operator()(const Observable& phi) const {
  require_same_ground(ground_, phi.ground(), "functional " + name_);
  return rule_(phi);
}

std::vector<SugenoSample> exhaustive_samples(const GroundSet& ground, std::int64_t grid) {
  const auto alphas = grid_values(grid);
  std::vector<Observable> bases;
  for (std::uint32_t m = 0; m < ground.powerset_size(); ++m) bases.push_back(Observable::indicator(ground, Subset{m}));
  for (const auto& beta : alphas) bases.push_back(Observable::constant(ground, beta));

  std::vector<SugenoSample> out;
  out.reserve(bases.size() * alphas.size());
  for (const auto& phi : bases) {
    for (const auto& alpha : alphas) out.push_back({phi, alpha});
  }
  return out;
}

Report check_sugeno_axioms(const Functional& i, std::span<const SugenoSample> samples) {
  Report report;
  std::vector<Observable> pool;
  auto remember = [&pool](const Observable& phi) {
    if (std::find(pool.begin(), pool.end(), phi) == pool.end()) pool.push_back(phi);
  };

  for (const auto& [phi, alpha] : samples) {
    const UnitValue base = i(phi);
    const Observable lowered = phi.meet(alpha);
    const Observable raised = phi.join(alpha);
    const UnitValue at_meet = i(lowered);
    const UnitValue at_join = i(raised);
    report.checked += 2;
    if (at_meet != std::min(alpha, base)) {
      report.add({"meet-homogeneity", "i(α∧φ) ≠ α∧i(φ)", {}, {alpha, at_meet, std::min(alpha, base)}});
    }
    if (at_join != std::max(alpha, base)) {
      report.add({"join-homogeneity", "i(α∨φ) ≠ α∨i(φ)", {}, {alpha, at_join, std::max(alpha, base)}});
    }
    remember(phi);
    remember(lowered);
    remember(raised);
  }

  std::vector<UnitValue> values;
  values.reserve(pool.size());
  for (const auto& phi : pool) values.push_back(i(phi));
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = 0; b < pool.size(); ++b) {
      if (a == b || !pool[a].leq(pool[b])) continue;
      ++report.checked;
      if (values[a] > values[b]) {
        std::vector<UnitValue> witness(pool[a].values().begin(), pool[a].values().end());
        witness.insert(witness.end(), pool[b].values().begin(), pool[b].values().end());
        witness.push_back(values[a]);
        witness.push_back(values[b]);
        report.add({"monotonicity", "φ ≤ ψ but i(φ) > i(ψ)", {}, std::move(witness)});
      }
    }
  }
  return report;
}

Report check_tau_smooth(const Functional& i, std::span<const Chain> chains) {
  Report report;
  for (std::size_t n = 0; n < chains.size(); ++n) {
    const Chain& chain = chains[n];
    if (chain.steps.empty()) throw ValidationError("chain " + std::to_string(n) + " is empty");
    const bool decreasing = chain.direction == Chain::Direction::decreasing;
    for (std::size_t k = 1; k < chain.steps.size(); ++k) {
      const bool ok = decreasing ? chain.steps[k].leq(chain.steps[k - 1]) : chain.steps[k - 1].leq(chain.steps[k]);
      if (!ok) throw ValidationError("chain " + std::to_string(n) + " is not monotone at step " + std::to_string(k));
    }
    // A finite monotone chain attains its pointwise limit at the last step.
    const Observable& limit = chain.steps.back();
    if (decreasing ? !limit.leq(chain.target) : !chain.target.leq(limit)) {
      throw ValidationError("chain " + std::to_string(n) + " limit is not related to its target as required");
    }

    UnitValue bound = decreasing ? UnitValue::one() : UnitValue::zero();
    for (const auto& step : chain.steps) bound = decreasing ? std::min(bound, i(step)) : std::max(bound, i(step));
    const UnitValue at_target = i(chain.target);
    ++report.checked;
    if (decreasing && bound > at_target) {
      report.add({"tau-smoothness", "inf i(φ_k) > i(ψ) on chain " + std::to_string(n), {}, {bound, at_target}});
    }
    if (!decreasing && bound < at_target) {
      report.add({"radon-condition", "sup i(φ_k) < i(ψ) on chain " + std::to_string(n), {}, {bound, at_target}});
    }
  }
  return report;
}

Capacity reconstruct(const Functional& i, std::optional<std::int64_t> grid) {
  const auto samples = exhaustive_samples(i.ground(), grid.value_or(i.grid()));
  Report gate = check_sugeno_axioms(i, samples);
  if (!gate.passed()) {
    const std::string first = gate.violations.front().rule;
    throw FunctionalError("functional '" + i.name() + "' violates " + first, std::move(gate));
  }
  std::vector<UnitValue> table(i.ground().powerset_size());
  for (std::uint32_t m = 0; m < table.size(); ++m) table[m] = i(Observable::indicator(i.ground(), Subset{m}));
  return Capacity::from_table(i.ground(), std::move(table));
}

UnitValue delta_eval(const DeltaFunctional& delta, const Capacity& c) { return sugeno(c, delta.phi); }

}  // namespace capkit
