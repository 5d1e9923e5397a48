#include <gtest/gtest.h>

#include "capkit/generate.hpp"
#include "capkit/hyperspace.hpp"
#include "capkit/integrals.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace capkit {
namespace {

using testing::q;

const GroundSet kAbc = letters(3);
constexpr Subset A{0b001}, B{0b010}, C{0b100}, AB{0b011}, AC{0b101}, BC{0b110};

TEST(UpClosure, Canonicalizes) {
  EXPECT_EQ(up_closure(kAbc, {AB, B}).minimal().size(), 1u);
  EXPECT_EQ(up_closure(kAbc, {AB, B}).minimal()[0], B);
  const auto h = up_closure(kAbc, {BC, A});
  ASSERT_EQ(h.minimal().size(), 2u);
  EXPECT_EQ(h.minimal()[0], A);
  EXPECT_EQ(h.minimal()[1], BC);
  EXPECT_THROW(up_closure(kAbc, {Subset::empty()}), DomainError);
  EXPECT_THROW(up_closure(kAbc, std::span<const Subset>{}), DomainError);
}

TEST(UpClosure, IdempotentAndRepresentationIndependent) {
  Rng rng(1);
  for (int n = 0; n < 300; ++n) {
    const auto h = random_hyperspace(rng, letters(1 + n % 4));
    EXPECT_EQ(up_closure(h.ground(), h.minimal()), h);
    // Adding members of the family does not change it.
    std::vector<Subset> more(h.minimal().begin(), h.minimal().end());
    more.push_back(h.ground().full());
    for (const auto k : h.minimal()) more.push_back(k | Subset::singleton(n % h.ground().size()));
    EXPECT_EQ(up_closure(h.ground(), more), h);
  }
}

TEST(Member, Examples) {
  const auto h = up_closure(kAbc, {A});
  EXPECT_TRUE(h.member(AC));
  EXPECT_FALSE(h.member(BC));
  Rng rng(2);
  for (int n = 0; n < 100; ++n) EXPECT_TRUE(random_hyperspace(rng, kAbc).member(kAbc.full()));
}

TEST(EtaG, Examples) {
  const GroundSet ab = letters(2);
  EXPECT_EQ(eta_G(ab, 0), up_closure(ab, {Subset{1}}));
  EXPECT_TRUE(eta_G(ab, 0).member(Subset{3}));
  EXPECT_FALSE(eta_G(ab, 0).member(Subset{2}));
  EXPECT_THROW(eta_G(ab, 2), DomainError);
}

TEST(MapHyperspace, Examples) {
  const GroundSet uv({"u", "v"});
  const SpaceMap f(kAbc, uv, {0, 1, 1});
  EXPECT_EQ(map_hyperspace(f, up_closure(kAbc, {A, BC})), up_closure(uv, {Subset{1}, Subset{2}}));
  const auto h = up_closure(kAbc, {A, BC});
  EXPECT_EQ(map_hyperspace(SpaceMap::identity(kAbc), h), h);
  const GroundSet pt({"pt"});
  EXPECT_EQ(map_hyperspace(SpaceMap(kAbc, pt, {0, 0, 0}), h), up_closure(pt, {Subset{1}}));
}

TEST(AllHyperspaces, Counts) {
  // Non-empty upsets of the powerset that avoid ∅: Dedekind number minus 2.
  EXPECT_EQ(all_hyperspaces(letters(1)).size(), 1u);
  EXPECT_EQ(all_hyperspaces(letters(2)).size(), 4u);
  EXPECT_EQ(all_hyperspaces(letters(3)).size(), 18u);
  EXPECT_EQ(all_hyperspaces(letters(4)).size(), 166u);
}

TEST(MuG, Examples) {
  const GeneratedHyperHyperspace hh{kAbc, {{up_closure(kAbc, {A}), up_closure(kAbc, {B, C})}}};
  EXPECT_EQ(mu_G(hh), up_closure(kAbc, {AB, AC}));

  const auto h = up_closure(kAbc, {A, BC});
  EXPECT_EQ(mu_G(GeneratedHyperHyperspace{kAbc, {{h}}}), h);
  EXPECT_EQ(mu_G(eta_GG(h)), h);

  EXPECT_THROW(mu_G(GeneratedHyperHyperspace{kAbc, {}}), DomainError);
  EXPECT_THROW(mu_G(GeneratedHyperHyperspace{kAbc, {{}}}), DomainError);
}

TEST(MuG, MatchesFamilyOracle) {
  Rng rng(4);
  for (int n = 0; n < 500; ++n) {
    const auto hh = random_hyperhyperspace(rng, letters(1 + n % 4), 3, 3);
    EXPECT_EQ(testing::family(mu_G(hh)), testing::mu_G_families(hh));
  }
}

TEST(MonadG, UnitLawsExhaustive) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& h : all_hyperspaces(letters(n))) {
      EXPECT_EQ(mu_G(eta_GG(h)), h);
      EXPECT_EQ(mu_G(map_eta_G(h)), h);
    }
  }
}

TEST(MonadG, Associativity) {
  Rng rng(6);
  for (int n = 0; n < 300; ++n) {
    const auto hhh = random_hyper3(rng, letters(1 + n % 3), 2, 3);
    EXPECT_EQ(mu_G(map_mu_G(hhh)), mu_G(mu_GG(hhh)));
  }
}

TEST(MonadG, FunctorialityAndNaturality) {
  Rng rng(8);
  const GroundSet pq({"p", "q"});
  const GroundSet rst({"r", "s", "t"});
  for (int n = 0; n < 300; ++n) {
    const GroundSet x = letters(1 + n % 4);
    const auto h = random_hyperspace(rng, x);
    const SpaceMap f = random_map(rng, x, rst);
    const SpaceMap g = random_map(rng, rst, pq);
    EXPECT_EQ(map_hyperspace(SpaceMap::compose(g, f), h), map_hyperspace(g, map_hyperspace(f, h)));
    for (std::size_t e = 0; e < x.size(); ++e) EXPECT_EQ(map_hyperspace(f, eta_G(x, e)), eta_G(rst, f(e)));
  }
}

TEST(WeakFunctionals, Examples) {
  const auto h = up_closure(kAbc, {A, BC});
  const auto phi = testing::obs(kAbc, {q(1, 4), q(3, 4), q(1, 2)});
  EXPECT_EQ(m_lower(h, phi), q(1, 4));
  EXPECT_EQ(m_upper(h, phi), q(1, 2));

  const auto top = up_closure(kAbc, {kAbc.full()});
  EXPECT_EQ(m_lower(top, phi), q(3, 4));
  EXPECT_EQ(m_upper(eta_G(kAbc, 1), phi), q(3, 4));

  const auto flat = Observable::constant(kAbc, q(2, 7));
  EXPECT_EQ(m_lower(h, flat), q(2, 7));
  EXPECT_EQ(m_upper(h, flat), q(2, 7));
}

TEST(EmbedCapacity, Examples) {
  const GroundSet ab = letters(2);
  EXPECT_EQ(embed_capacity(up_closure(ab, {Subset{1}})), dirac(ab, "a"));
  const Capacity any = embed_capacity(up_closure(ab, {Subset{1}, Subset{2}}));
  for (std::uint32_t m = 0; m < 4; ++m) EXPECT_EQ(any(Subset{m}), m ? q(1) : q(0));
  const Capacity all = embed_capacity(up_closure(ab, {Subset{3}}));
  for (std::uint32_t m = 0; m < 4; ++m) EXPECT_EQ(all(Subset{m}), m == 3 ? q(1) : q(0));
}

TEST(EmbedCapacity, InjectiveAndMatchesUpperFunctional) {
  Rng rng(10);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto spaces = all_hyperspaces(letters(n));
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      for (std::size_t j = i + 1; j < spaces.size(); ++j) {
        EXPECT_FALSE(embed_capacity(spaces[i]) == embed_capacity(spaces[j]));
      }
      for (int k = 0; k < 20; ++k) {
        const auto phi = random_observable(rng, letters(n), 5);
        EXPECT_EQ(sugeno(embed_capacity(spaces[i]), phi), m_upper(spaces[i], phi));
      }
    }
  }
}

}  // namespace
}  // namespace capkit
