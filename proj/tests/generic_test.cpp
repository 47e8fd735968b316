#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rankarg/generic.hpp"
#include "rankarg/jz_solver.hpp"
#include "rankarg/principles.hpp"

namespace rankarg {
namespace {

using testing::fixture;
using testing::make;
using testing::sets;

constexpr auto F = ArgState::XFalse;
constexpr auto Y = ArgState::XY;
constexpr auto N = ArgState::XNotY;

TEST(GenericSpace, EncodingRoundTrips) {
  GenericWorldSpace space(3);
  EXPECT_EQ(space.world_count(), 27u);
  for (std::size_t w = 0; w < space.world_count(); ++w) {
    const auto world = space.decode(w);
    ASSERT_EQ(space.encode(world), w);
    for (std::size_t a = 0; a < 3; ++a) ASSERT_EQ(space.state(w, a), world[a]);
  }
  EXPECT_EQ(space.premise(0).count(), 18u);
  EXPECT_EQ(space.claim(0).count(), 9u);
  EXPECT_THROW(GenericWorldSpace(13), std::invalid_argument);
}

TEST(GenericDelta, Sizes) {
  auto chain = make({"p", "q", "r"}, {"p q", "q r"});
  const GenericWorldSpace space(3);
  const auto inst = generic_instantiation(space);
  EXPECT_EQ(generic_delta(chain, inst).size(), 7u);
  EXPECT_EQ(jz_shifts(chain).size(), 7u);
  auto free = make({"a", "b", "c"}, {});
  EXPECT_EQ(generic_delta(free, inst).size(), 3u);
  auto loop = make({"a", "b"}, {"a b", "b a"});
  const auto two = generic_instantiation(GenericWorldSpace(2));
  EXPECT_EQ(generic_delta(loop, two).size(), 3u);  // two defaults, one conflict, no one-sided attack
}

TEST(JzWorldRank, Examples) {
  auto chain = make({"p", "q", "r"}, {"p q", "q r"});
  EXPECT_EQ(jz_world_rank(chain, GenericWorld{Y, N, Y}), Rank(2));
  EXPECT_EQ(jz_world_rank(chain, GenericWorld{F, F, F}), Rank(0));
  EXPECT_EQ(jz_world_rank(chain, GenericWorld{Y, Y, F}), Rank::top());
  EXPECT_EQ(jz_world_rank(chain, GenericWorld{N, N, N}), Rank(5));
  EXPECT_EQ(jz_world_rank(chain, GenericWorld{N, F, F}), Rank(1));  // q's premise is false

  auto loop = make({"a", "b"}, {"a b", "b a"});
  EXPECT_EQ(jz_world_rank(loop, GenericWorld{Y, Y}), Rank::top());
  EXPECT_EQ(jz_world_rank(loop, GenericWorld{N, Y}), Rank(1));
  auto self = make({"a"}, {"a a"});
  EXPECT_EQ(jz_world_rank(self, GenericWorld{N}), Rank::top());
  EXPECT_EQ(jz_world_rank(self, GenericWorld{Y}), Rank::top());
  EXPECT_EQ(jz_world_rank(self, GenericWorld{F}), Rank(0));
}

TEST(JzMeasure, IsNormalizedModelOfDelta) {
  for (const auto& af : random_corpus(41, 120, 6)) {
    const GenericWorldSpace space(af.size());
    const auto inst = generic_instantiation(space);
    const auto r = jz_measure(af, space);
    ASSERT_TRUE(r.is_normalized());
    ASSERT_EQ(r.world_rank(0), Rank(0));
    ASSERT_TRUE(satisfies_base(r, generic_delta(af, inst)));
  }
}

TEST(JzMeasure, ConstructionMatchesClosedForm) {
  for (const auto& af : random_corpus(42, 150, 6)) {
    const GenericWorldSpace space(af.size());
    const auto inst = generic_instantiation(space);
    ASSERT_EQ(construct(generic_delta(af, inst), jz_shifts(af)), jz_measure(af, space));
  }
}

TEST(JzMeasure, ShiftsAreJustified) {
  for (const auto& af : random_corpus(43, 60, 5)) {
    const auto inst = generic_instantiation(GenericWorldSpace(af.size()));
    ASSERT_TRUE(is_justifiably_constructible(generic_delta(af, inst), jz_shifts(af)));
  }
}

TEST(JzMeasure, UniqueJustifiablyConstructibleModelOnTinyFrameworks) {
  std::vector<ArgumentationFramework> cases{
      make({"a"}, {}),
      make({"a"}, {"a a"}),
      make({"a", "b"}, {"a b"}),
      make({"a", "b"}, {"a b", "b a"}),
      make({"a", "b"}, {"a a", "a b"}),
      make({"p", "q", "r"}, {"p q", "q r"}),
      make({"a", "b", "c"}, {"a b", "b c", "c a"}),
  };
  for (const auto& af : random_corpus(44, 10, 3)) cases.push_back(af);
  for (const auto& af : cases) {
    const GenericWorldSpace space(af.size());
    const auto inst = generic_instantiation(space);
    const auto found = jj_search(generic_delta(af, inst), 4);
    ASSERT_EQ(found.size(), 1u) << af.size();
    ASSERT_EQ(found[0].measure, jz_measure(af, space));
  }
}

TEST(Propositions, ThetaAndPsi) {
  auto chain = make({"p", "q", "r"}, {"p q", "q r"});
  const GenericWorldSpace space(3);
  const auto inst = generic_instantiation(space);
  const auto r = jz_measure(chain, space);
  EXPECT_EQ(theta_proposition(inst, {}), Proposition::top(27));
  EXPECT_EQ(rank_of(r, psi_proposition(inst, chain.all(), {})), Rank(5));
  EXPECT_EQ(rank_of(r, psi_proposition(inst, chain.all(), chain.set_of({"p", "r"}))), Rank(2));
  EXPECT_THROW(psi_proposition(inst, chain.set_of({"p"}), chain.set_of({"q"})), std::invalid_argument);
}

TEST(CoherentSets, Examples) {
  auto loop31 = fixture("three_one_loop");
  EXPECT_EQ(maximal_coherent_sets(loop31), sets(loop31, {{"b", "c"}}));
  auto selves = make({"a", "b"}, {"a a", "b b", "a b"});
  EXPECT_EQ(maximal_coherent_sets(selves), ExtensionSet{ArgumentSet{}});
  auto chain = fixture("pqr_chain");
  EXPECT_EQ(maximal_coherent_sets(chain), ExtensionSet{chain.all()});
}

TEST(CoherentSets, AreTheNonSelfAttackingArguments) {
  for (const auto& af : random_corpus(45, 150, 7)) {
    ASSERT_EQ(maximal_coherent_sets(af), ExtensionSet{non_self_attacking(af)});
  }
}

TEST(SemanticExtensions, MatchDirectSolver) {
  for (const char* name : {"simple_reinstatement", "three_loop", "attack_on_two_loop", "attack_from_two_loop",
                           "three_one_loop", "three_two_loop", "two_loop_chain", "splitted_three_chain", "spoon",
                           "pqr_chain", "rej_cut", "rej_cm"}) {
    auto af = fixture(name);
    ASSERT_EQ(ranking_extensions_semantic(af), jz_extensions(af)) << name;
  }
  for (const auto& af : random_corpus(46, 200, 7)) {
    ASSERT_EQ(ranking_extensions_semantic(af), oracle::jz(af));
  }
}

TEST(DeriveAttacks, RecoversAttacksAmongNonSelfAttacking) {
  for (const auto& af : random_corpus(47, 200, 7)) {
    const GenericWorldSpace space(af.size());
    const auto inst = generic_instantiation(space);
    const auto derived = derive_attacks(jz_measure(af, space), inst);
    const ArgumentSet plus = non_self_attacking(af);
    std::vector<AttackPair> inside, expected;
    for (const auto& p : derived) {
      if (plus.contains(p.first) && plus.contains(p.second)) inside.push_back(p);
    }
    for (const auto& p : af.attack_pairs()) {
      if (plus.contains(p.first) && plus.contains(p.second)) expected.push_back(p);
    }
    ASSERT_EQ(inside, expected);
    // A self-attacker's premise is impossible, so it attacks and is attacked by everything.
    for (std::size_t a = 0; a < af.size(); ++a) {
      if (plus.contains(a)) continue;
      for (std::size_t b = 0; b < af.size(); ++b) {
        ASSERT_NE(std::find(derived.begin(), derived.end(), AttackPair{a, b}), derived.end());
        ASSERT_NE(std::find(derived.begin(), derived.end(), AttackPair{b, a}), derived.end());
      }
    }
  }
}

TEST(DeriveAttacks, RequiresArgumentBase) {
  const auto inst = generic_instantiation(GenericWorldSpace(2));
  EXPECT_THROW(derive_attacks(RankingMeasure::uniform(9), inst), NotAnInstantiationModel);
}

TEST(InstantiationModels, RoundTrip) {
  for (const auto& af : random_corpus(48, 200, 7)) {
    const GenericWorldSpace space(af.size());
    const auto inst = generic_instantiation(space);
    ASSERT_TRUE(is_ranking_instantiation_model(af, jz_measure(af, space), inst));
  }
  auto ab = make({"a", "b"}, {"a b"});
  const GenericWorldSpace two(2);
  EXPECT_FALSE(is_ranking_instantiation_model(ab, RankingMeasure::uniform(9), generic_instantiation(two)));
  EXPECT_FALSE(is_ranking_instantiation_model(make({"a", "b"}, {"b a"}), jz_measure(ab, two),
                                              generic_instantiation(two)));
}

TEST(InstantiationModels, PerturbationChangesExtensions) {
  auto chain = fixture("pqr_chain");
  const GenericWorldSpace space(3);
  const auto inst = generic_instantiation(space);
  const auto base = jz_measure(chain, space);
  const auto p = *chain.index_of("p"), q = *chain.index_of("q"), r = *chain.index_of("r");
  const auto perturbed = shift(base, inst.claim(p) & inst.claim(r) & inst.premise(q), Rank::top());
  EXPECT_TRUE(is_ranking_instantiation_model(chain, perturbed, inst));
  EXPECT_EQ(ranking_extensions(base, inst), sets(chain, {{"p", "r"}}));
  EXPECT_EQ(ranking_extensions(perturbed, inst), sets(chain, {{"p"}, {"q"}}));
}

TEST(FrameworkEquivalence, AttacksTouchingSelfAttackersDoNotMatter) {
  std::mt19937_64 rng(49);
  for (const auto& af : random_corpus(50, 200, 7)) {
    const ArgumentSet plus = non_self_attacking(af);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [f, t] : af.attack_pairs()) {
      if (plus.contains(f) && plus.contains(t)) edges.emplace_back(f, t);
      if (f == t) edges.emplace_back(f, t);
    }
    for (std::size_t f = 0; f < af.size(); ++f) {
      for (std::size_t t = 0; t < af.size(); ++t) {
        if (f != t && !(plus.contains(f) && plus.contains(t)) && rng() % 2 == 0) edges.emplace_back(f, t);
      }
    }
    const ArgumentationFramework other(af.names(), edges);
    ASSERT_EQ(ranking_extensions_semantic(af), ranking_extensions_semantic(other));
  }
}

TEST(Conflicts, RebuttalsOnlyUnderTheJzModel) {
  for (const auto& af : random_corpus(51, 100, 6)) {
    const GenericWorldSpace space(af.size());
    const auto inst = generic_instantiation(space);
    const auto r = jz_measure(af, space);
    const ArgumentSet plus = non_self_attacking(af);
    for (std::size_t a : plus) {
      for (std::size_t b : plus) {
        const bool conflict = af.attacks(a, b) || af.attacks(b, a);
        ASSERT_EQ(rebuts(r, inst, a, b), conflict);
        ASSERT_EQ(rebuts(r, inst, a, b), rebuts(r, inst, b, a));
        ASSERT_FALSE(undermines(r, inst, a, b));
      }
    }
  }
}

TEST(CompactSpace, AgreesWithFullBooleanSpace) {
  for (const auto& af : random_corpus(52, 40, 3)) {
    const GenericWorldSpace compact(af.size());
    const auto small = generic_instantiation(compact);
    const auto rc = jz_measure(af, compact);
    const WorldSpace full_space = generic_boolean_space(af);
    const auto big = generic_instantiation(af, full_space);
    const auto rf = construct(generic_delta(af, big), jz_shifts(af));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << af.size()); ++s) {
      const auto sset = ArgumentSet::from_mask(s);
      ASSERT_EQ(rank_of(rc, theta_proposition(small, sset)), rank_of(rf, theta_proposition(big, sset)));
      for (std::uint64_t e = s;; e = (e - 1) & s) {
        const auto eset = ArgumentSet::from_mask(e);
        ASSERT_EQ(rank_of(rc, psi_proposition(small, sset, eset)), rank_of(rf, psi_proposition(big, sset, eset)));
        if (e == 0) break;
      }
    }
  }
}

TEST(Instantiation, RejectsBrokenEntailmentChain) {
  WorldSpace space({"x"});
  std::vector<ArgumentContent> bad{{space.bottom(), space.top(), space.top()}};
  EXPECT_THROW(ShallowInstantiation{bad}, std::invalid_argument);
}

}  // namespace
}  // namespace rankarg
