#pragma once

// Worked-example preferences and profiles shared by the test suites.

#include <utility>
#include <vector>

#include "povote/profile.hpp"

namespace fixtures {

using povote::PartialOrder;
using povote::Profile;
using povote::Vote;

inline PartialOrder order(int m, std::vector<std::pair<int, int>> edges) {
  return PartialOrder::from_edges(m, edges);
}

inline PartialOrder linear(std::vector<int> chain) { return PartialOrder::chain(chain); }

// Instagram(0) > Facebook(1) > TikTok(2); Gmail(4) > Yahoo(5); Uber(3) isolated.
inline PartialOrder mobile_apps() { return order(6, {{0, 1}, {1, 2}, {4, 5}}); }

// Two voters over {a,b,c}: (a>b, a>c) and (b>a, c>a).
inline Profile two_voter_hourglass() {
  return Profile::of({{1, order(3, {{0, 1}, {0, 2}})}, {2, order(3, {{1, 0}, {2, 0}})}});
}

// Five alternatives {a,b,c,d,e}: a>b, a>c, b>d, e>c.
inline PartialOrder dominance_figure_left() { return order(5, {{0, 1}, {0, 2}, {1, 3}, {4, 2}}); }

// Five alternatives: a>c, b>c, c>d, e>d.
inline PartialOrder dominance_figure_right() { return order(5, {{0, 2}, {1, 2}, {2, 3}, {4, 3}}); }

// The two-step rule's continuity counterexample: (a>b>c ; b>a, c>a).
inline Profile two_step_pair() {
  return Profile::of({{1, linear({0, 1, 2})}, {2, order(3, {{1, 0}, {2, 0}})}});
}

inline Profile two_step_extra(int id) { return Profile::of({{id, order(3, {{1, 0}, {2, 0}})}}); }

// n_a voters with a on top, then n_b voters with b on top, linear over {a,b,c};
// ids consecutive from first_id.
inline Profile tops_profile(int n_a, int n_b, int first_id) {
  std::vector<Vote> votes;
  int id = first_id;
  for (int i = 0; i < n_a; ++i) votes.push_back(Vote{id++, linear({0, 1, 2})});
  for (int i = 0; i < n_b; ++i) votes.push_back(Vote{id++, linear({1, 0, 2})});
  return Profile(std::move(votes));
}

}  // namespace fixtures
