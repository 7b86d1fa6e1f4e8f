#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "povote/enumerate.hpp"

using namespace povote;

TEST_SUITE_BEGIN("partial_order");

TEST_CASE("edge construction closes transitively") {
  const PartialOrder po = fixtures::order(3, {{0, 1}, {1, 2}});
  CHECK(po.dominates(0, 1));
  CHECK(po.dominates(1, 2));
  CHECK(po.dominates(0, 2));  // forced
  CHECK(po.edge_count() == 3);
}

TEST_CASE("empty edge set gives the empty relation") {
  const PartialOrder po = PartialOrder::empty_order(3);
  CHECK(po.edge_count() == 0);
  CHECK(po.top() == AltSet::full(3));
  CHECK(po.bottom() == AltSet::full(3));
}

TEST_CASE("two-cycles and out-of-range indices are rejected") {
  CHECK_THROWS_AS(fixtures::order(3, {{0, 1}, {1, 0}}), CycleError);
  CHECK_THROWS_AS(fixtures::order(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
  CHECK_THROWS_AS(fixtures::order(3, {{0, 3}}), IndexError);
  CHECK_THROWS_AS(fixtures::order(3, {{-1, 0}}), IndexError);
}

TEST_CASE("construction is idempotent on closed edge sets") {
  for (const PartialOrder& po : enumerate_partial_orders(3)) {
    const auto closed = po.edges();
    CHECK(PartialOrder::from_edges(3, closed) == po);
  }
}

TEST_CASE("mobile apps example: tops, bottoms and their overlap") {
  const PartialOrder po = fixtures::mobile_apps();
  CHECK(po.top() == (AltSet::single(0) | AltSet::single(3) | AltSet::single(4)));
  CHECK(po.bottom() == (AltSet::single(2) | AltSet::single(3) | AltSet::single(5)));
  CHECK((po.top() & po.bottom()) == AltSet::single(3));  // Uber sits in both
  CHECK(po.kind() == BallotKind::general);
}

TEST_CASE("linear chain basics") {
  const PartialOrder po = fixtures::linear({0, 1, 2});
  CHECK(po.top() == AltSet::single(0));
  CHECK(po.bottom() == AltSet::single(2));
  CHECK(po.dominance_count(1) == 1);
  CHECK(po.kind() == BallotKind::linear);
}

TEST_CASE("dominance counts on the worked five-alternative figure") {
  const PartialOrder po = fixtures::dominance_figure_left();
  CHECK(po.dominance_count(0) == 3);  // a beats b, c and (closed) d
  CHECK(po.dominance_count(4) == 1);
  CHECK(PartialOrder::empty_order(4).dominance_count(2) == 0);
}

TEST_CASE("dominance counts sum to the edge count") {
  for (const PartialOrder& po : enumerate_partial_orders(3)) {
    int sum = 0;
    for (int a = 0; a < 3; ++a) sum += po.dominance_count(a);
    CHECK(sum == po.edge_count());
  }
}

TEST_CASE("relabeling by a transposition swaps the pair") {
  const PartialOrder po = fixtures::order(2, {{0, 1}});
  const PartialOrder swapped = po.relabeled(Permutation::transposition(2, 0, 1));
  CHECK(swapped.dominates(1, 0));
  CHECK_FALSE(swapped.dominates(0, 1));
  CHECK(po.relabeled(Permutation::identity(2)) == po);
}

TEST_CASE("tops and bottoms commute with relabeling") {
  const auto sigmas = Permutation::all(3);
  for (const PartialOrder& po : enumerate_partial_orders(3))
    for (const Permutation& sigma : sigmas) {
      const PartialOrder relabeled = po.relabeled(sigma);
      CHECK(relabeled.top() == sigma.apply(po.top()));
      CHECK(relabeled.bottom() == sigma.apply(po.bottom()));
    }
}

TEST_CASE("enumeration counts match the brute-force oracle") {
  CHECK(oracles::brute_force_poset_count(1) == 1);
  CHECK(oracles::brute_force_poset_count(2) == 3);
  CHECK(oracles::brute_force_poset_count(3) == 19);
  CHECK(enumerate_partial_orders(1).size() == 1);
  CHECK(enumerate_partial_orders(2).size() == 3);
  CHECK(enumerate_partial_orders(3).size() == 19);
}

TEST_CASE("enumeration at m=3 yields exactly the oracle's order set") {
  std::vector<PartialOrder> expected = oracles::brute_force_posets(3);
  std::sort(expected.begin(), expected.end(), PartialOrder::lex_less);
  const std::vector<PartialOrder> actual = enumerate_partial_orders(3);
  REQUIRE(actual.size() == expected.size());
  for (size_t i = 0; i < actual.size(); ++i) CHECK(actual[i] == expected[i]);
}

TEST_CASE("enumerated orders are canonical, valid and duplicate-free") {
  const std::vector<PartialOrder> orders = enumerate_partial_orders(4);
  CHECK(orders.size() == 219);
  CHECK(orders.front() == PartialOrder::empty_order(4));
  for (size_t i = 0; i + 1 < orders.size(); ++i) {
    CHECK(PartialOrder::lex_less(orders[i], orders[i + 1]));  // sorted, no duplicates
  }
  for (const PartialOrder& po : orders) {
    CHECK_FALSE(po.top().empty());
    CHECK_FALSE(po.bottom().empty());
    for (int a = 0; a < 4; ++a) {
      CHECK_FALSE(po.dominates(a, a));
      for (int b = 0; b < 4; ++b) {
        if (po.dominates(a, b)) CHECK_FALSE(po.dominates(b, a));
        for (int c = 0; c < 4; ++c)
          if (po.dominates(a, b) && po.dominates(b, c)) CHECK(po.dominates(a, c));
      }
    }
  }
}

TEST_CASE("enumeration rejects sizes beyond the configured bound") {
  CHECK_THROWS_AS(enumerate_partial_orders(enumeration_bound() + 1), ResourceError);
  CHECK_THROWS_AS(enumerate_partial_orders(0), Error);
}

TEST_CASE("approval ballots put approved above everything else") {
  const PartialOrder po = approval_ballot(AltSet::single(0) | AltSet::single(1), 3);
  CHECK(po.dominates(0, 2));
  CHECK(po.dominates(1, 2));
  CHECK(po.edge_count() == 2);
  CHECK(po.top() == (AltSet::single(0) | AltSet::single(1)));
  CHECK(po.bottom() == AltSet::single(2));
  CHECK(po.kind() == BallotKind::approval);

  CHECK_THROWS_AS(approval_ballot(AltSet{}, 3), DegenerateBallotError);
  CHECK_THROWS_AS(approval_ballot(AltSet::full(3), 3), DegenerateBallotError);
}

TEST_CASE("every nonempty proper subset yields an approval ballot at m=4") {
  int checked = 0;
  for (std::uint64_t bits = 1; bits < 15; ++bits) {
    const PartialOrder po = approval_ballot(AltSet(bits), 4);
    CHECK(po.satisfies_approval_condition());
    CHECK(po.top() == AltSet(bits));
    ++checked;
  }
  CHECK(checked == 14);
}

TEST_CASE("ballot kind precedence: linear wins over approval at m=2") {
  const PartialOrder po = fixtures::linear({0, 1});
  CHECK(po.satisfies_approval_condition());
  CHECK(po.kind() == BallotKind::linear);
}

TEST_CASE("permutations must be bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 1, 3}), Error);
  CHECK(Permutation::all(3).size() == 6);
}

TEST_SUITE_END();
