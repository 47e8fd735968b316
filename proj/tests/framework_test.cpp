#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "rankarg/framework.hpp"
#include "rankarg/principles.hpp"

namespace rankarg {
namespace {

using testing::make;
using testing::sets;

TEST(Framework, RejectsUndeclaredEndpointsAndDuplicates) {
  EXPECT_THROW(make({"a"}, {"a b"}), FrameworkError);
  EXPECT_THROW(make({"a", "a"}, {}), FrameworkError);
}

TEST(Framework, DuplicateAttacksCollapse) {
  auto af = make({"a", "b"}, {"a b", "a b", "b b"});
  EXPECT_EQ(af.attack_pairs().size(), 2u);
  EXPECT_TRUE(af.attacks(1, 1));
}

TEST(Framework, NonSelfAttacking) {
  auto af = make({"a", "b", "c"}, {"a a", "a b", "b c", "c a"});
  EXPECT_EQ(non_self_attacking(af), af.set_of({"b", "c"}));
  auto free = make({"a", "b"}, {});
  EXPECT_EQ(non_self_attacking(free), free.all());
  auto loop = make({"a"}, {"a a"});
  EXPECT_TRUE(non_self_attacking(loop).empty());
}

TEST(Framework, ConflictFreedom) {
  auto chain = make({"a", "b", "c"}, {"a b", "b c"});
  EXPECT_TRUE(is_conflict_free(chain, chain.set_of({"a", "c"})));
  EXPECT_TRUE(is_conflict_free(chain, {}));
  EXPECT_FALSE(is_conflict_free(chain, chain.set_of({"a", "b"})));
  auto loop = make({"a"}, {"a a"});
  EXPECT_FALSE(is_conflict_free(loop, loop.all()));
}

TEST(Framework, AttackImage) {
  auto chain = make({"a", "b", "c"}, {"a b", "b c"});
  EXPECT_EQ(attack_image(chain, chain.set_of({"a"})), chain.set_of({"b"}));
  EXPECT_TRUE(attack_image(chain, {}).empty());

  auto af = make({"a", "b", "c"}, {"b a", "a b", "b c"});
  const ArgumentSet expected = af.set_of({"a", "c"});
  EXPECT_EQ(attack_image(af, af.set_of({"b"})), expected);
  EXPECT_EQ(ArgumentSet::from_mask(oracle::image(oracle::attack_matrix(af), af.set_of({"b"}).mask())), expected);
}

TEST(Framework, EnumerationOrderIsInclusionFirst) {
  auto af = make({"a", "b"}, {"a b"});
  const auto sets_found = enumerate_conflict_free(af, af.all());
  const std::vector<ArgumentSet> expected{af.set_of({"a"}), af.set_of({"b"}), ArgumentSet{}};
  EXPECT_EQ(sets_found, expected);
  EXPECT_EQ(normalized(sets_found), oracle::all_conflict_free(af));
}

TEST(Framework, EnumerationEdgeCases) {
  auto af = make({"a", "b", "c"}, {"a b", "b c", "c a"});
  EXPECT_EQ(enumerate_conflict_free(af, ArgumentSet{}), std::vector<ArgumentSet>{ArgumentSet{}});
  EXPECT_EQ(normalized(enumerate_conflict_free(af, af.all())), sets(af, {{}, {"a"}, {"b"}, {"c"}}));
}

TEST(Framework, EnumerationMatchesBruteForceOnRandomFrameworks) {
  for (const auto& af : random_corpus(11, 300, 12)) {
    const auto found = enumerate_conflict_free(af, af.all());
    ASSERT_EQ(found.size(), oracle::all_conflict_free(af).size()) << af.size();
    ASSERT_EQ(normalized(found), oracle::all_conflict_free(af));
  }
}

TEST(Framework, EnumerationRespectsUniverse) {
  std::mt19937_64 rng(3);
  for (const auto& af : random_corpus(5, 100, 9)) {
    const ArgumentSet universe = ArgumentSet::from_mask(rng() & af.all().mask());
    for (ArgumentSet s : enumerate_conflict_free(af, universe)) {
      ASSERT_TRUE(s.is_subset_of(universe));
      ASSERT_TRUE(is_conflict_free(af, s));
    }
  }
}

TEST(Framework, Restrict) {
  auto af = make({"a", "b", "c"}, {"b c", "c a", "a b", "b a"});
  const auto sub = restrict(af, af.set_of({"b", "c"}));
  EXPECT_EQ(sub, make({"b", "c"}, {"b c"}));
  EXPECT_EQ(restrict(af, af.all()), af);
  EXPECT_EQ(restrict(af, {}), ArgumentationFramework());
}

TEST(Framework, RestrictIsMonotone) {
  std::mt19937_64 rng(8);
  for (const auto& af : random_corpus(21, 100, 10)) {
    const ArgumentSet keep = ArgumentSet::from_mask(rng() & af.all().mask());
    const auto sub = restrict(af, keep);
    for (const auto& [f, t] : sub.attack_pairs()) {
      ASSERT_TRUE(af.attacks(*af.index_of(sub.name(f)), *af.index_of(sub.name(t))));
    }
    ASSERT_EQ(restrict(af, af.all()), af);
  }
}

TEST(Framework, AttackImageDistributesOverUnion) {
  std::mt19937_64 rng(9);
  for (const auto& af : random_corpus(31, 200, 10)) {
    const ArgumentSet s = ArgumentSet::from_mask(rng() & af.all().mask());
    const ArgumentSet t = ArgumentSet::from_mask(rng() & af.all().mask());
    ASSERT_EQ(attack_image(af, s | t), attack_image(af, s) | attack_image(af, t));
  }
}

TEST(Framework, Isomorphism) {
  auto af = make({"a", "b"}, {"a b"});
  EXPECT_EQ(apply_isomorphism(af, {{"a", "x"}, {"b", "y"}}), make({"x", "y"}, {"x y"}));
  EXPECT_EQ(apply_isomorphism(af, {{"a", "a"}, {"b", "b"}}), af);
  EXPECT_THROW(apply_isomorphism(af, {{"a", "x"}, {"b", "x"}}), FrameworkError);
  EXPECT_THROW(apply_isomorphism(af, {{"a", "x"}}), FrameworkError);
}

TEST(Framework, RotatingAThreeLoopKeepsItsShape) {
  auto loop = make({"a", "b", "c"}, {"a b", "b c", "c a"});
  const auto rotated = apply_isomorphism(loop, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [f, t] : rotated.attack_pairs()) edges.emplace(rotated.name(f), rotated.name(t));
  const std::set<std::pair<std::string, std::string>> expected{{"a", "b"}, {"b", "c"}, {"c", "a"}};
  EXPECT_EQ(edges, expected);
}

TEST(Framework, CanonicalOrderIsSizeThenLexicographic) {
  auto af = make({"a", "b", "c"}, {});
  EXPECT_EQ(normalized({af.set_of({"b", "c"}), af.set_of({"c"}), af.set_of({"a", "c"}), ArgumentSet{},
                        af.set_of({"a"})}),
            (ExtensionSet{ArgumentSet{}, af.set_of({"a"}), af.set_of({"c"}), af.set_of({"a", "c"}),
                          af.set_of({"b", "c"})}));
}

}  // namespace
}  // namespace rankarg
