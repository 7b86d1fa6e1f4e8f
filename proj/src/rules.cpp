#include "povote/rules.hpp"

#include <algorithm>
#include <limits>

namespace povote {

std::vector<Score> score_totals(const ScoringFunction& s, const Profile& p) {
  std::vector<Score> totals(static_cast<size_t>(p.m()), Score(0));
  for (const Vote& v : p.votes())
    for (int a = 0; a < p.m(); ++a) totals[static_cast<size_t>(a)] += s(v.preference, a);
  return totals;
}

namespace {

template <typename T>
AltSet argmax_impl(const std::vector<T>& totals) {
  const T best = *std::max_element(totals.begin(), totals.end());
  AltSet out;
  for (int a = 0; a < static_cast<int>(totals.size()); ++a)
    if (totals[static_cast<size_t>(a)] == best) out = out.with(a);
  return out;
}

}  // namespace

AltSet argmax_set(const std::vector<Score>& totals) { return argmax_impl(totals); }
AltSet argmax_set(const std::vector<long long>& totals) { return argmax_impl(totals); }

std::vector<long long> side_counts(const Profile& p, Side side) {
  std::vector<long long> counts(static_cast<size_t>(p.m()), 0);
  for (const Vote& v : p.votes()) {
    const AltSet s = side == Side::top ? v.preference.top() : v.preference.bottom();
    for (int a : s.to_vector()) ++counts[static_cast<size_t>(a)];
  }
  return counts;
}

namespace {

// Uniform plurality totals are top counts; uniform anti-plurality totals are
// negated bottom counts.
std::vector<long long> uniform_totals(const Profile& p, Side side) {
  std::vector<long long> totals = side_counts(p, side);
  if (side == Side::bottom)
    for (long long& t : totals) t = -t;
  return totals;
}

}  // namespace

VotingRule scoring_rule(ScoringFunction s) {
  VotingRule rule;
  rule.name = s.name();
  rule.scoring = s;
  rule.eval = [s = std::move(s)](const Profile& p) { return argmax_set(score_totals(s, p)); };
  return rule;
}

VotingRule standard_approval_rule() {
  VotingRule rule;
  rule.name = "approval";
  rule.eval = [](const Profile& p) {
    for (const Vote& v : p.votes())
      if (!v.preference.satisfies_approval_condition())
        throw DomainError("voter " + std::to_string(v.voter_id) + " did not cast an approval ballot");
    return argmax_set(side_counts(p, Side::top));
  };
  return rule;
}

VotingRule full_set_rule() {
  VotingRule rule;
  rule.name = "full-set";
  rule.eval = [](const Profile& p) { return AltSet::full(p.m()); };
  return rule;
}

VotingRule two_step_rule(Side side) {
  VotingRule rule;
  rule.name = side == Side::top ? "two-step-top" : "two-step-bottom";
  rule.eval = [side](const Profile& p) {
    const AltSet first = argmax_set(uniform_totals(p, side));
    // Composite scoring: break step-1 ties by how often an alternative is a
    // voter's unique top (maximized) resp. unique bottom (minimized). With no
    // unique appearances at all, the whole step-1 set stays.
    std::vector<long long> tie_break(static_cast<size_t>(p.m()), 0);
    for (const Vote& v : p.votes()) {
      const AltSet s = side == Side::top ? v.preference.top() : v.preference.bottom();
      if (s.count() == 1)
        tie_break[static_cast<size_t>(s.to_vector().front())] += side == Side::top ? 1 : -1;
    }
    long long best = std::numeric_limits<long long>::min();
    for (int a : first.to_vector())
      best = std::max(best, tie_break[static_cast<size_t>(a)]);
    AltSet out;
    for (int a : first.to_vector())
      if (tie_break[static_cast<size_t>(a)] == best) out = out.with(a);
    return out;
  };
  return rule;
}

VotingRule runner_up_rule(Side side) {
  VotingRule rule;
  rule.name = side == Side::top ? "runner-up-plurality" : "runner-up-anti-plurality";
  rule.eval = [side](const Profile& p) {
    if (p.size() == 1) {
      const PartialOrder& po = p.vote(0).preference;
      if (side == Side::top) return po.top();
      const AltSet non_bottom = AltSet::full(p.m()) - po.bottom();
      return non_bottom.empty() ? AltSet::full(p.m()) : non_bottom;
    }
    const std::vector<long long> totals = uniform_totals(p, side);
    const long long best = *std::max_element(totals.begin(), totals.end());
    AltSet out;
    for (int a = 0; a < p.m(); ++a) {
      const long long t = totals[static_cast<size_t>(a)];
      // Runner-up slots need actual support: an alternative nobody tops must
      // not slip in just because the leaders have a single point.
      const bool runner_up = t == best - 1 && (side == Side::bottom || t > 0);
      if (t == best || runner_up) out = out.with(a);
    }
    return out;
  };
  return rule;
}

VotingRule biased_alternative_rule(int alternative, Side side, std::string label) {
  VotingRule rule;
  rule.name = "double:" + (label.empty() ? "#" + std::to_string(alternative) : std::move(label)) +
              (side == Side::top ? "-top" : "-bottom");
  rule.neutral = false;
  rule.eval = [alternative, side](const Profile& p) {
    if (alternative < 0 || alternative >= p.m())
      throw IndexError("biased alternative outside universe");
    std::vector<long long> totals = uniform_totals(p, side);
    totals[static_cast<size_t>(alternative)] *= 2;
    return argmax_set(totals);
  };
  return rule;
}

VotingRule voter_privilege_rule(Side side) {
  VotingRule rule;
  rule.name = side == Side::top ? "voter1-top" : "voter1-bottom";
  rule.anonymous = false;
  rule.needs_voter_ids = true;
  rule.eval = [side](const Profile& p) {
    std::vector<long long> totals(static_cast<size_t>(p.m()), 0);
    for (const Vote& v : p.votes()) {
      const long long unit = (v.voter_id == 1 ? 2 : 1) * (side == Side::top ? 1 : -1);
      const AltSet s = side == Side::top ? v.preference.top() : v.preference.bottom();
      for (int a : s.to_vector()) totals[static_cast<size_t>(a)] += unit;
    }
    return argmax_set(totals);
  };
  return rule;
}

}  // namespace povote
