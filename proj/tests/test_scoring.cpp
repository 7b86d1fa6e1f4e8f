#include <doctest.h>

#include "fixtures.hpp"
#include "povote/enumerate.hpp"
#include "povote/rules.hpp"

using namespace povote;

namespace {

std::vector<Score> row(const ScoringFunction& s, const PartialOrder& po) {
  std::vector<Score> out;
  for (int a = 0; a < po.m(); ++a) out.push_back(s(po, a));
  return out;
}

void check_hierarchy(const ClassMembership& c) {
  if (c.uniform_plurality) CHECK(c.monotonic_simple_plurality);
  if (c.monotonic_simple_plurality) CHECK(c.simple_plurality);
  if (c.simple_plurality) CHECK(c.plurality_class);
  if (c.uniform_anti_plurality) CHECK(c.monotonic_simple_anti_plurality);
  if (c.monotonic_simple_anti_plurality) CHECK(c.simple_anti_plurality);
  if (c.simple_anti_plurality) CHECK(c.anti_plurality_class);
}

}  // namespace

TEST_SUITE_BEGIN("scoring");

TEST_CASE("uniform plurality scores tops only") {
  const ScoringFunction s = uniform_plurality_scoring();
  CHECK(row(s, fixtures::order(3, {{1, 0}, {2, 0}})) == std::vector<Score>{0, 1, 1});
  CHECK(row(s, PartialOrder::empty_order(3)) == std::vector<Score>{1, 1, 1});
  CHECK(row(s, fixtures::linear({0, 1, 2})) == std::vector<Score>{1, 0, 0});
}

TEST_CASE("dominance plurality weighs tops by what they beat") {
  const ScoringFunction s = dominance_plurality_scoring();
  CHECK(row(s, fixtures::dominance_figure_left()) == std::vector<Score>{3, 0, 0, 0, 1});
  CHECK(row(s, fixtures::dominance_figure_right()) == std::vector<Score>{2, 2, 0, 0, 1});
  CHECK(row(s, PartialOrder::empty_order(3)) == std::vector<Score>{0, 0, 0});
}

TEST_CASE("borda-style scoring counts dominated alternatives everywhere") {
  const ScoringFunction s = borda_dominance_scoring();
  CHECK(row(s, fixtures::order(3, {{0, 1}, {0, 2}})) == std::vector<Score>{2, 0, 0});
  CHECK(row(s, fixtures::linear({0, 1, 2})) == std::vector<Score>{2, 1, 0});
}

TEST_CASE("uniform anti-plurality penalizes bottoms only") {
  const ScoringFunction s = uniform_anti_plurality_scoring();
  CHECK(row(s, fixtures::order(3, {{0, 1}})) == std::vector<Score>{0, -1, -1});
  CHECK(row(s, PartialOrder::empty_order(3)) == std::vector<Score>{-1, -1, -1});
  CHECK(row(s, fixtures::linear({0, 1, 2})) == std::vector<Score>{0, 0, -1});
}

TEST_CASE("size family: constant weights reproduce uniform plurality") {
  const ScoringFunction sized = size_family_scoring({Score(1), Score(1), Score(1)});
  const ScoringFunction uniform = uniform_plurality_scoring();
  for (const PartialOrder& po : enumerate_partial_orders(3)) CHECK(row(sized, po) == row(uniform, po));
}

TEST_CASE("size family applies the weight of the top-set size") {
  const ScoringFunction s = size_family_scoring({Score(3), Score(2), Score(1)});
  CHECK(row(s, fixtures::order(3, {{0, 2}, {1, 2}})) == std::vector<Score>{2, 2, 0});
  CHECK(row(s, fixtures::linear({0, 1, 2})) == std::vector<Score>{3, 0, 0});
  CHECK(row(s, PartialOrder::empty_order(3)) == std::vector<Score>{1, 1, 1});
}

TEST_CASE("weight sequences must be non-increasing and positive off the tail") {
  CHECK_THROWS_AS(size_family_scoring({Score(1), Score(2), Score(3)}), WeightError);
  CHECK_THROWS_AS(size_family_scoring({Score(1), Score(0), Score(0)}), WeightError);
  CHECK_THROWS_AS(size_family_scoring({Score(3), Score(2), Score(-1)}), WeightError);
  CHECK_THROWS_AS(anti_size_family_scoring({Score(1), Score(2), Score(3)}), WeightError);
  CHECK_NOTHROW(size_family_scoring({Score(2), Score(1), Score(0)}));
}

TEST_CASE("anti-size family mirrors on bottom sets") {
  const ScoringFunction s = anti_size_family_scoring({Score(2), Score(1), Score(1)});
  CHECK(row(s, fixtures::order(3, {{0, 1}, {0, 2}})) == std::vector<Score>{0, -1, -1});

  const ScoringFunction flat = anti_size_family_scoring({Score(1), Score(1), Score(1)});
  const ScoringFunction uniform = uniform_anti_plurality_scoring();
  for (const PartialOrder& po : enumerate_partial_orders(3)) CHECK(row(flat, po) == row(uniform, po));
}

TEST_CASE("affine transforms rescale scores but not winners") {
  CHECK_THROWS_AS(affine_transform(uniform_plurality_scoring(), Score(0), Score(1)), AlphaError);
  CHECK_THROWS_AS(affine_transform(uniform_plurality_scoring(), Score(-2), Score(0)), AlphaError);

  const Profile example = fixtures::two_voter_hourglass();
  const ScoringFunction stretched = affine_transform(borda_dominance_scoring(), Score(4), Score(-1));
  CHECK(score_totals(stretched, example) == std::vector<Score>{6, 2, 2});
  const ScoringFunction stretched_uniform =
      affine_transform(uniform_plurality_scoring(), Score(4), Score(-1));
  CHECK(score_totals(stretched_uniform, example) == std::vector<Score>{2, 2, 2});

  const ScoringFunction identity = affine_transform(borda_dominance_scoring(), Score(1), Score(0));
  for (const PartialOrder& po : enumerate_partial_orders(3))
    CHECK(row(identity, po) == row(borda_dominance_scoring(), po));
}

TEST_CASE("affine transforms preserve winners on every two-voter profile") {
  const VotingRule plain = scoring_rule(uniform_plurality_scoring());
  const VotingRule stretched =
      scoring_rule(affine_transform(uniform_plurality_scoring(), Score(4), Score(-1)));
  const std::vector<PartialOrder> orders = enumerate_partial_orders(3);
  for (const PartialOrder& first : orders)
    for (const PartialOrder& second : orders) {
      const Profile p = Profile::of({{1, first}, {2, second}});
      CHECK(plain.winners(p) == stretched.winners(p));
    }
}

TEST_CASE("built-in scoring functions are positional at m=3") {
  CHECK(is_positional(uniform_plurality_scoring(), 3));
  CHECK(is_positional(dominance_plurality_scoring(), 3));
  CHECK(is_positional(borda_dominance_scoring(), 3));
  CHECK(is_positional(uniform_anti_plurality_scoring(), 3));
  CHECK(is_positional(size_family_scoring({Score(3), Score(2), Score(1)}), 3));
  CHECK(is_positional(anti_size_family_scoring({Score(3), Score(2), Score(1)}), 3));
}

TEST_CASE("a fixed-alternative doubling is not positional") {
  const ScoringFunction doubled("doubled-first", [](const PartialOrder& po, int a) {
    const Score base = po.top().contains(a) ? Score(1) : Score(0);
    return a == 0 ? Score(2) * base : base;
  });
  CHECK_FALSE(is_positional(doubled, 3));
}

TEST_CASE("tabulation covers every order deterministically") {
  const ScoringTable t = tabulate(uniform_plurality_scoring(), 2);
  CHECK(t.orders.size() == 3);
  for (const auto& scores : t.scores) CHECK(scores.size() == 2);
  const ScoringTable again = tabulate(uniform_plurality_scoring(), 2);
  CHECK(t.scores == again.scores);
  CHECK(t.orders == again.orders);
}

TEST_CASE("classification of the built-in rules at m=3") {
  const ClassMembership uniform = classify(tabulate(uniform_plurality_scoring(), 3));
  CHECK(uniform.plurality_class);
  CHECK(uniform.simple_plurality);
  CHECK(uniform.monotonic_simple_plurality);
  CHECK(uniform.uniform_plurality);
  CHECK_FALSE(uniform.anti_plurality_class);

  const ClassMembership dominance = classify(tabulate(dominance_plurality_scoring(), 3));
  CHECK(dominance.plurality_class);
  CHECK_FALSE(dominance.simple_plurality);  // tops 2 and 1 coexist
  CHECK_FALSE(dominance.uniform_plurality);

  const ClassMembership borda = classify(tabulate(borda_dominance_scoring(), 3));
  CHECK_FALSE(borda.plurality_class);  // linear order: non-top scores 1 and 0
  CHECK_FALSE(borda.anti_plurality_class);

  const ClassMembership anti = classify(tabulate(uniform_anti_plurality_scoring(), 3));
  CHECK(anti.anti_plurality_class);
  CHECK(anti.simple_anti_plurality);
  CHECK(anti.monotonic_simple_anti_plurality);
  CHECK(anti.uniform_anti_plurality);
  CHECK_FALSE(anti.plurality_class);

  const ClassMembership sized = classify(tabulate(size_family_scoring({Score(3), Score(2), Score(1)}), 3));
  CHECK(sized.monotonic_simple_plurality);
  CHECK_FALSE(sized.uniform_plurality);

  const ClassMembership flat_sized = classify(tabulate(size_family_scoring({Score(1), Score(1), Score(1)}), 3));
  CHECK(flat_sized.uniform_plurality);

  const ClassMembership anti_sized =
      classify(tabulate(anti_size_family_scoring({Score(3), Score(2), Score(1)}), 3));
  CHECK(anti_sized.monotonic_simple_anti_plurality);
  CHECK_FALSE(anti_sized.uniform_anti_plurality);

  for (const ClassMembership& c : {uniform, dominance, borda, anti, sized, flat_sized, anti_sized})
    check_hierarchy(c);
}

TEST_CASE("classification is invariant under positive affine transforms") {
  const std::vector<ScoringFunction> builtins = {
      uniform_plurality_scoring(), dominance_plurality_scoring(), borda_dominance_scoring(),
      uniform_anti_plurality_scoring(), size_family_scoring({Score(3), Score(2), Score(1)})};
  for (const ScoringFunction& s : builtins) {
    const ClassMembership plain = classify(tabulate(s, 3));
    const ClassMembership moved = classify(tabulate(affine_transform(s, Score(4), Score(-1)), 3));
    CHECK(plain == moved);
    const ClassMembership scaled =
        classify(tabulate(affine_transform(s, Score(1, 2), Score(3)), 3));
    CHECK(plain == scaled);
  }
}

TEST_CASE("score formatting and parsing round-trip") {
  CHECK(format_score(Score(2)) == "2/1");
  CHECK(format_score(Score(-1, 3)) == "-1/3");
  CHECK(parse_score("2") == Score(2));
  CHECK(parse_score("-4/6") == Score(-2, 3));
  CHECK_THROWS_AS(parse_score("x"), GrammarError);
  CHECK_THROWS_AS(parse_score("1/0"), GrammarError);
  CHECK_THROWS_AS(parse_score("1/-2"), GrammarError);
}

TEST_SUITE_END();
