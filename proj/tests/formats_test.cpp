#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rankarg/formats.hpp"
#include "rankarg/generic.hpp"
#include "rankarg/principles.hpp"

namespace rankarg {
namespace {

using testing::fixture_text;
using testing::make;

std::size_t error_line(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError";
  return 0;
}

TEST(Apx, ParsesStatementsAndComments) {
  const auto af = parse_apx("% header\narg(a). arg(b).\narg(c).\natt(a,b). % comment\n  att( b , c ) .\n");
  EXPECT_EQ(af, make({"a", "b", "c"}, {"a b", "b c"}));
}

TEST(Apx, DeclarationsAreIdempotentAndAttacksMayComeFirst) {
  EXPECT_EQ(parse_apx("att(a,b).\narg(a).\narg(b).\narg(a).\n"), make({"a", "b"}, {"a b"}));
  EXPECT_EQ(parse_apx(""), ArgumentationFramework());
}

TEST(Apx, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line([] { parse_apx("arg(a).\n\natt(a,z).\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_apx("arg(a).\nargh(b).\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_apx("arg(a)\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_apx("arg(a).\narg(b).\natt(a b).\n"); }), 3u);
  EXPECT_THROW(parse_apx("arg().\n"), ParseError);
}

TEST(Tgf, ParsesNodesAndEdges) {
  EXPECT_EQ(parse_tgf("a\nb\n\nc\n#\na b\nb c\n"), make({"a", "b", "c"}, {"a b", "b c"}));
  EXPECT_EQ(parse_tgf("#\n"), ArgumentationFramework());
}

TEST(Tgf, Errors) {
  EXPECT_EQ(error_line([] { parse_tgf("a\nb\n#\na c\n"); }), 4u);
  EXPECT_EQ(error_line([] { parse_tgf("a\n#\na\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_tgf("a b\n#\n"); }), 1u);
  EXPECT_THROW(parse_tgf("a\nb\n"), ParseError);
}

TEST(RoundTrip, Fixtures) {
  for (const char* name : {"simple_reinstatement", "three_loop", "attack_on_two_loop", "attack_from_two_loop",
                           "three_one_loop", "three_two_loop", "two_loop_chain", "splitted_three_chain", "spoon",
                           "pqr_chain", "rej_cut", "rej_cm"}) {
    const auto af = parse_apx(fixture_text(std::string(name) + ".apx"));
    ASSERT_EQ(parse_apx(serialize_apx(af)), af) << name;
    ASSERT_EQ(parse_tgf(serialize_tgf(af)), af) << name;
  }
}

TEST(RoundTrip, RandomCorpus) {
  for (const auto& af : random_corpus(81, 200, 12)) {
    ASSERT_EQ(parse_apx(serialize_apx(af)), af);
    ASSERT_EQ(parse_tgf(serialize_tgf(af)), af);
    ASSERT_EQ(serialize_apx(parse_apx(serialize_apx(af))), serialize_apx(af));
  }
}

std::string measure_text(const ArgumentationFramework& af, const RankingMeasure& r) {
  const GenericWorldSpace space(af.size());
  std::string out = "# generated\n";
  for (std::size_t w = 0; w < space.world_count(); ++w) {
    if (r.world_rank(w).is_top() && w % 2 == 0) continue;  // unlisted worlds default to inf
    for (ArgState s : space.decode(w)) out += static_cast<char>('0' + static_cast<int>(s));
    out += " " + r.world_rank(w).to_string() + "\n";
  }
  return out;
}

TEST(Measure, ReadsBackJzModel) {
  for (const auto& af : random_corpus(82, 60, 5)) {
    const auto r = jz_measure(af, GenericWorldSpace(af.size()));
    ASSERT_EQ(parse_measure(measure_text(af, r), af), r);
  }
}

TEST(Measure, Errors) {
  auto af = make({"a", "b"}, {"a b"});
  EXPECT_EQ(error_line([&] { parse_measure("00 0\n01 1\n01 2\n", af); }), 3u);
  EXPECT_EQ(error_line([&] { parse_measure("00 0\n0 1\n", af); }), 2u);
  EXPECT_EQ(error_line([&] { parse_measure("00 0\n03 1\n", af); }), 2u);
  EXPECT_EQ(error_line([&] { parse_measure("00 0\n01 -1\n", af); }), 2u);
  EXPECT_EQ(error_line([&] { parse_measure("00\n", af); }), 1u);
  EXPECT_THROW(parse_measure("00 1\n", af), ParseError);
}

TEST(Measure, FractionsAndEmptyFramework) {
  auto af = make({"a"}, {});
  const auto r = parse_measure("0 0\n1 1/2\n2 inf\n", af);
  EXPECT_EQ(r.world_rank(1), Rank(Rank::Value(1, 2)));
  EXPECT_TRUE(r.world_rank(2).is_top());
  EXPECT_EQ(parse_measure("0\n", ArgumentationFramework()), RankingMeasure::uniform(1));
}

}  // namespace
}  // namespace rankarg
