#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/report.hpp"

namespace capkit {

/// A deterministic functional from observables on `ground` to [0,1].
class Functional {
 public:
  using Rule = std::function<UnitValue(const Observable&)>;

  /// `grid` is the denominator of the rational grid the functional is meant
  /// to be probed on.
  Functional(GroundSet ground, std::string name, Rule rule, std::int64_t grid);

  /// φ ↦ sugeno(c, φ)
  static Functional sugeno_of(const Capacity& c);
  /// φ ↦ max φ
  static Functional max_value(const GroundSet& ground);
  /// φ ↦ φ(x)
  static Functional point_evaluation(const GroundSet& ground, std::size_t x);
  /// Finite table over observables with values on the 1/grid lattice.
  /// Evaluating an observable absent from the table throws DomainError.
  static Functional from_table(const GroundSet& ground, std::int64_t grid,
                               std::map<std::vector<UnitValue>, UnitValue> table);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::int64_t grid() const { return grid_; }

  [[nodiscard]] UnitValue operator()(const Observable& phi) const;

 private:
  GroundSet ground_;
  std::string name_;
  Rule rule_;
  std::int64_t grid_;
};

struct SugenoSample {
  Observable phi;
  UnitValue alpha;
};

/// Indicators and constants paired with every α on the 1/grid lattice.
std::vector<SugenoSample> exhaustive_samples(const GroundSet& ground, std::int64_t grid);

/// Monotonicity, i(α∧φ) = α∧i(φ) and i(α∨φ) = α∨i(φ) over the samples.
Report check_sugeno_axioms(const Functional& i, std::span<const SugenoSample> samples);

/// A finite monotone sequence together with the comparison point ψ.
struct Chain {
  enum class Direction { decreasing, increasing };
  Direction direction;
  std::vector<Observable> steps;
  Observable target;
};

/// Decreasing chains with pointwise inf ≤ ψ must satisfy inf i(φ_k) ≤ i(ψ);
/// increasing chains with pointwise sup ≥ ψ must satisfy sup i(φ_k) ≥ i(ψ).
/// Throws ValidationError when a chain is not monotone or not related to
/// its target as required.
Report check_tau_smooth(const Functional& i, std::span<const Chain> chains);

class FunctionalError : public ValidationError {
 public:
  FunctionalError(const std::string& what, Report report) : ValidationError(what), report(std::move(report)) {}
  Report report;
};

/// c(F) = i(χ_F). The axioms are first checked on exhaustive_samples at the
/// given grid (default: the functional's own grid); a failure throws
/// FunctionalError, an invalid resulting table throws CapacityError.
Capacity reconstruct(const Functional& i, std::optional<std::int64_t> grid = std::nullopt);

/// δ_φ : c ↦ sugeno(c, φ)
struct DeltaFunctional {
  Observable phi;
};

UnitValue delta_eval(const DeltaFunctional& delta, const Capacity& c);

}  // namespace capkit
