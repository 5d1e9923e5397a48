#pragma once

#include <string>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/space.hpp"

namespace capkit {

/// An isotone binary operation on [0,1] standing in for ∧ in a generalized
/// fuzzy integral.
class Pseudomultiplication {
 public:
  enum class Kind { min, product, probabilistic_sum, table };

  static Pseudomultiplication min();
  static Pseudomultiplication product();
  /// h(a,b) = a + b - ab. Isotone, but a ⊙ b does not vanish as b → 0.
  static Pseudomultiplication probabilistic_sum();
  /// values[i][j] = (i/grid) ⊙ (j/grid). Must be isotone in both arguments.
  static Pseudomultiplication from_table(std::int64_t grid, std::vector<std::vector<UnitValue>> values);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] std::string name() const;
  /// Whether a ⊙ b → 0 uniformly as b → 0. For tables: a ⊙ 0 = 0 for all a.
  [[nodiscard]] bool uniform_vanishing() const { return uniform_vanishing_; }

  /// Throws DomainError for off-grid arguments of a table operation.
  [[nodiscard]] UnitValue operator()(const UnitValue& a, const UnitValue& b) const;

 private:
  explicit Pseudomultiplication(Kind kind, bool vanishing) : kind_(kind), uniform_vanishing_(vanishing) {}

  Kind kind_;
  bool uniform_vanishing_;
  std::int64_t grid_ = 0;
  std::vector<std::vector<UnitValue>> table_;
};

/// sup over α of α ∧ c({φ ≥ α}), evaluated on the values of φ where the
/// supremum is attained.
UnitValue sugeno(const Capacity& c, const Observable& phi);

/// Layer-cake sum Σ (v_i − v_{i+1}) · c({φ ≥ v_i}) over the distinct values
/// of φ in descending order, with v_{k+1} = 0.
UnitValue choquet(const Capacity& c, const Observable& phi);

struct FuzzyResult {
  UnitValue value;
  /// False when ⊙ does not vanish uniformly, so continuity in c is not
  /// guaranteed for this integral.
  bool continuity_hypothesis = true;
};

/// max over non-empty F of (min_F φ) ⊙ c(F), by exhaustive enumeration.
FuzzyResult fuzzy(const Capacity& c, const Observable& phi, const Pseudomultiplication& op);

}  // namespace capkit
