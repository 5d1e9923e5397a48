#include <gtest/gtest.h>

#include "capkit/generate.hpp"
#include "capkit/integrals.hpp"
#include "capkit/monad.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace capkit {
namespace {

using testing::c0;
using testing::q;

const GroundSet kAb = letters(2);

/// support {dirac(a), dirac(b)}, index {1} ↦ 2/5, {2} ↦ 0.
Capacity2 two_diracs() {
  const Capacity w = Capacity::from_table(GroundSet::indices(2), {q(0), q(2, 5), q(0), q(1)});
  return Capacity2::make({dirac(kAb, 0), dirac(kAb, 1)}, w);
}

TEST(FiniteCapacity, CanonicalizesSupport) {
  const Capacity w = Capacity::from_table(GroundSet::indices(3), {q(0), q(1, 4), q(1, 2), q(1, 2), q(0), q(1, 4),
                                                                   q(1, 2), q(1)});
  const auto c2 = Capacity2::make({c0(), dirac(kAb, 0), c0()}, w);
  ASSERT_EQ(c2.support().size(), 2u);
  EXPECT_TRUE(c2.support()[0] < c2.support()[1]);
  // The two copies of c₀ (indices 0 and 2) merge.
  EXPECT_EQ(c2.value([](const Capacity& c) { return c == c0(); }), q(1, 4));
  EXPECT_EQ(c2.value([](const Capacity& c) { return c == dirac(kAb, 0); }), q(1, 2));
  EXPECT_EQ(Capacity2::make({dirac(kAb, 0), c0(), c0()}, w).index().table().size(), 4u);
}

TEST(MuM, Examples) {
  const Capacity mu = mu_M(two_diracs());
  EXPECT_EQ(mu(Subset{1}), q(2, 5));
  EXPECT_EQ(mu(Subset{2}), q(0));
  EXPECT_EQ(mu(Subset{3}), q(1));

  EXPECT_EQ(mu_M(Capacity2::make({c0()}, point_capacity())), c0());
  const Capacity w = Capacity::from_table(GroundSet::indices(2), {q(0), q(1, 3), q(1, 5), q(1)});
  EXPECT_EQ(mu_M(Capacity2::make({c0(), c0()}, w)), c0());
}

TEST(MuM, MatchesDenseGrid) {
  Rng rng(40);
  for (int n = 0; n < 500; ++n) {
    const auto c2 = random_capacity2(rng, letters(1 + n % 3), 1 + n % 6, 3);
    ASSERT_EQ(mu_M(c2), testing::mu_M_grid(c2));
  }
}

TEST(MonadM, UnitLaws) {
  for (const auto& c : all_capacities(kAb, 4)) {
    EXPECT_EQ(mu_M(eta_MM(c)), c);
    EXPECT_EQ(mu_M(map_eta(c)), c);
  }
  const auto me = map_eta(c0());
  ASSERT_EQ(me.support().size(), 2u);
  EXPECT_EQ(me.value([](const Capacity& c) { return c == dirac(kAb, 0); }), q(3, 10));
  EXPECT_EQ(me.value([](const Capacity& c) { return c == dirac(kAb, 1); }), q(6, 10));
  const GroundSet one = letters(1);
  EXPECT_EQ(map_eta(dirac(one, 0)), eta_MM(dirac(one, 0)));
}

TEST(MonadM, LevelTwoUnitLaws) {
  Rng rng(41);
  for (int n = 0; n < 200; ++n) {
    const auto c2 = random_capacity2(rng, letters(1 + n % 3), 1 + n % 5, 3);
    EXPECT_EQ(mu_MM(eta_MMM(c2)), c2);
    EXPECT_EQ(mu_MM(map_eta2(c2)), c2);
  }
}

TEST(MonadM, Associativity) {
  Rng rng(42);
  for (int n = 0; n < 300; ++n) {
    const auto c3 = random_capacity3(rng, letters(1 + n % 3), 1 + n % 6, 3, 3);
    ASSERT_EQ(mu_M(map_mu(c3)), mu_M(mu_MM(c3)));
  }
  const auto single = Capacity3::make({two_diracs()}, point_capacity());
  EXPECT_EQ(mu_MM(single), two_diracs());
  // Nested units collapse to the base capacity.
  EXPECT_EQ(mu_M(mu_MM(eta_MMM(eta_MM(c0())))), c0());
}

TEST(Pushforward2, Examples) {
  const auto c2 = two_diracs();
  EXPECT_EQ(pushforward2(SpaceMap::identity(kAb), c2), c2);

  const GroundSet pt({"pt"});
  const auto collapsed = pushforward2(SpaceMap(kAb, pt, {0, 0}), c2);
  EXPECT_EQ(collapsed.support().size(), 1u);
  EXPECT_EQ(collapsed.index(), point_capacity());

  const GroundSet uv({"u", "v"});
  const SpaceMap f(kAb, uv, {0, 1});
  EXPECT_EQ(pushforward(f, mu_M(c2)), mu_M(pushforward2(f, c2)));
}

TEST(MonadM, Naturality) {
  Rng rng(43);
  const GroundSet pqr({"p", "q", "r"});
  for (int n = 0; n < 300; ++n) {
    const auto c2 = random_capacity2(rng, letters(1 + n % 3), 1 + n % 6, 3);
    const SpaceMap f = random_map(rng, c2.ground(), pqr);
    EXPECT_EQ(pushforward(f, mu_M(c2)), mu_M(pushforward2(f, c2)));
  }
}

TEST(MuViaDelta, Examples) {
  const auto c2 = two_diracs();
  EXPECT_EQ(mu_via_delta(c2, Observable::indicator(kAb, Subset{1})), q(2, 5));
  EXPECT_EQ(mu_via_delta(eta_MM(c0()), testing::phi0()), sugeno(c0(), testing::phi0()));
  EXPECT_EQ(mu_via_delta(c2, Observable::constant(kAb, q(3, 8))), q(3, 8));
}

TEST(MuViaDelta, AgreesWithMultiplication) {
  Rng rng(44);
  for (int n = 0; n < 500; ++n) {
    const auto c2 = random_capacity2(rng, letters(1 + n % 3), 1 + n % 6, 4);
    const auto phi = random_observable(rng, c2.ground(), 1 + n % 7);
    ASSERT_EQ(mu_via_delta(c2, phi), sugeno(mu_M(c2), phi));
  }
}

TEST(Morphism, Examples) {
  const GroundSet abc = letters(3);
  const GeneratedHyperHyperspace hh{abc, {{up_closure(abc, {Subset{1}}), up_closure(abc, {Subset{2}, Subset{4}})}}};
  EXPECT_TRUE(check_morphism(hh).passed());
  EXPECT_EQ(mu_M(encode_hyperhyperspace(hh)), embed_capacity(up_closure(abc, {Subset{3}, Subset{5}})));

  const auto h = up_closure(abc, {Subset{1}, Subset{6}});
  const GeneratedHyperHyperspace single{abc, {{h}}};
  EXPECT_EQ(mu_M(encode_hyperhyperspace(single)), embed_capacity(h));
  EXPECT_TRUE(check_morphism(single).passed());

  const GroundSet one = letters(1);
  EXPECT_TRUE(check_morphism({one, {{eta_G(one, 0)}}}).passed());
}

TEST(Morphism, RandomizedInstances) {
  Rng rng(45);
  for (int n = 0; n < 300; ++n) {
    EXPECT_TRUE(check_morphism(random_hyperhyperspace(rng, letters(1 + n % 3), 3, 3)).passed());
  }
}

}  // namespace
}  // namespace capkit
