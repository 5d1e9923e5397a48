#include <gtest/gtest.h>

#include "capkit/generate.hpp"
#include "capkit/integrals.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace capkit {
namespace {

using testing::c0;
using testing::phi0;
using testing::q;

TEST(Sugeno, Examples) {
  EXPECT_EQ(sugeno(c0(), phi0()), q(1, 2));
  const GroundSet abc = letters(3);
  const auto phi = testing::obs(abc, {q(1, 3), q(5, 6), q(0)});
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(sugeno(dirac(abc, x), phi), phi(x));
  EXPECT_EQ(sugeno(c0(), Observable::constant(letters(2), q(2, 9))), q(2, 9));
  EXPECT_THROW(sugeno(c0(), Observable::constant(abc, q(0))), DomainError);
}

TEST(Choquet, Examples) {
  EXPECT_EQ(choquet(c0(), phi0()), q(59, 100));
  const GroundSet abc = letters(3);
  const auto phi = testing::obs(abc, {q(1, 3), q(5, 6), q(0)});
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(choquet(dirac(abc, x), phi), phi(x));
}

TEST(Choquet, MatchesPermutationFormula) {
  Rng rng(12);
  for (int n = 0; n < 500; ++n) {
    const GroundSet g = letters(1 + n % 5);
    const Capacity c = random_capacity(rng, g, 1 + n % 7);
    const Observable phi = random_observable(rng, g, 1 + n % 9);
    EXPECT_EQ(choquet(c, phi).rational(), testing::choquet_permutation(c, phi));
  }
}

TEST(Choquet, AdditiveCapacityGivesExpectation) {
  Rng rng(13);
  for (int n = 0; n < 300; ++n) {
    const GroundSet g = letters(1 + n % 5);
    std::vector<UnitValue> p;
    const Capacity c = random_probability(rng, g, 1 + n % 12, &p);
    const Observable phi = random_observable(rng, g, 1 + n % 10);
    Rational mean;
    for (std::size_t i = 0; i < g.size(); ++i) mean += p[i].rational() * phi(i).rational();
    EXPECT_EQ(choquet(c, phi).rational(), mean);
  }
}

TEST(Fuzzy, Examples) {
  EXPECT_EQ(fuzzy(c0(), phi0(), Pseudomultiplication::min()).value, q(1, 2));
  EXPECT_EQ(fuzzy(c0(), phi0(), Pseudomultiplication::product()).value, q(1, 2));
  const GroundSet abc = letters(3);
  const auto phi = testing::obs(abc, {q(1, 3), q(5, 6), q(0)});
  for (std::size_t x = 0; x < 3; ++x) {
    EXPECT_EQ(fuzzy(dirac(abc, x), phi, Pseudomultiplication::product()).value, phi(x));
  }
}

TEST(Fuzzy, ProbabilisticSumIsFlagged) {
  const auto r = fuzzy(c0(), phi0(), Pseudomultiplication::probabilistic_sum());
  EXPECT_FALSE(r.continuity_hypothesis);
  // max over F of h(min_F φ, c(F)): {a}: 4/5+3/10-6/25 = 43/50; {b}: 1/2+3/5-3/10 = 4/5; X: 1.
  EXPECT_EQ(r.value, q(1));
  EXPECT_TRUE(fuzzy(c0(), phi0(), Pseudomultiplication::product()).continuity_hypothesis);
}

TEST(Fuzzy, TableOperation) {
  // Łukasiewicz t-norm max(0, a+b-1) on the quarter grid.
  std::vector<std::vector<UnitValue>> t(5, std::vector<UnitValue>(5));
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) t[i][j] = q(std::max(0, i + j - 4), 4);
  }
  const auto op = Pseudomultiplication::from_table(4, t);
  EXPECT_TRUE(op.uniform_vanishing());
  EXPECT_EQ(op(q(3, 4), q(1, 2)), q(1, 4));
  EXPECT_THROW((void)op(q(1, 3), q(1, 2)), DomainError);

  t[2][2] = q(1);
  EXPECT_THROW(Pseudomultiplication::from_table(4, t), ValidationError);
}

TEST(Fuzzy, MinEqualsSugenoAndIsIsotoneInCapacity) {
  Rng rng(14);
  const auto ops = {Pseudomultiplication::min(), Pseudomultiplication::product(),
                    Pseudomultiplication::probabilistic_sum()};
  for (int n = 0; n < 400; ++n) {
    const GroundSet g = letters(1 + n % 4);
    const Capacity c = random_capacity(rng, g, 6);
    const Observable phi = random_observable(rng, g, 5);
    EXPECT_EQ(fuzzy(c, phi, Pseudomultiplication::min()).value, sugeno(c, phi));

    // c ∨ d pointwise dominates c.
    const Capacity d = random_capacity(rng, g, 6);
    std::vector<UnitValue> joined(c.table().size());
    for (std::size_t m = 0; m < joined.size(); ++m) joined[m] = std::max(c.table()[m], d.table()[m]);
    const Capacity upper = Capacity::from_table(g, joined);
    for (const auto& op : ops) EXPECT_LE(fuzzy(c, phi, op).value, fuzzy(upper, phi, op).value);
    EXPECT_LE(sugeno(c, phi), sugeno(upper, phi));
    EXPECT_LE(choquet(c, phi), choquet(upper, phi));
  }
}

TEST(Sugeno, MatchesDenseGrid) {
  Rng rng(15);
  for (int n = 0; n < 1000; ++n) {
    const GroundSet g = letters(1 + n % 5);
    const Capacity c = random_capacity(rng, g, 1 + n % 7);
    const Observable phi = random_observable(rng, g, 1 + n % 11);
    ASSERT_EQ(sugeno(c, phi), testing::sugeno_grid(c, phi));
  }
}

TEST(Integrals, IndicatorRecovery) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const GroundSet g = letters(n);
    for (const auto& c : all_capacities(g, 3)) {
      for (std::uint32_t m = 0; m < g.powerset_size(); ++m) {
        const auto chi = Observable::indicator(g, Subset{m});
        EXPECT_EQ(sugeno(c, chi), c(Subset{m}));
        EXPECT_EQ(choquet(c, chi), c(Subset{m}));
      }
    }
  }
}

TEST(Sugeno, HomogeneityAndIsotonicity) {
  Rng rng(16);
  for (int n = 0; n < 500; ++n) {
    const GroundSet g = letters(1 + n % 4);
    const Capacity c = random_capacity(rng, g, 5);
    const Observable phi = random_observable(rng, g, 6);
    const UnitValue alpha = random_value(rng, 8);
    EXPECT_EQ(sugeno(c, phi.meet(alpha)), std::min(alpha, sugeno(c, phi)));
    EXPECT_EQ(sugeno(c, phi.join(alpha)), std::max(alpha, sugeno(c, phi)));
    const Observable bigger = phi.join(alpha);
    EXPECT_LE(sugeno(c, phi), sugeno(c, bigger));
    EXPECT_LE(choquet(c, phi), choquet(c, bigger));
  }
}

}  // namespace
}  // namespace capkit
