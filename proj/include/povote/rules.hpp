#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "povote/profile.hpp"
#include "povote/scoring.hpp"

namespace povote {

enum class Side { top, bottom };

/// A voting rule: total map from profiles to nonempty winner sets.
struct VotingRule {
  std::string name;
  bool anonymous = true;
  bool neutral = true;
  bool needs_voter_ids = false;
  /// Rules derived from a positional scoring rule carry their scoring
  /// function (drives analytic continuity bounds and classification).
  std::optional<ScoringFunction> scoring;
  std::function<AltSet(const Profile&)> eval;

  AltSet winners(const Profile& p) const { return eval(p); }
};

/// Per-alternative exact score totals for a profile (the score board).
std::vector<Score> score_totals(const ScoringFunction& s, const Profile& p);

/// Indices attaining the maximum. Works for any strictly ordered score type.
AltSet argmax_set(const std::vector<Score>& totals);
AltSet argmax_set(const std::vector<long long>& totals);

/// How often each alternative appears in a voter's top (resp. bottom).
std::vector<long long> side_counts(const Profile& p, Side side);

/// The positional scoring rule F_s (argmax of exact summed scores).
VotingRule scoring_rule(ScoringFunction s);

/// Argmax of approval counts. Every ballot must satisfy the approval-ballot
/// condition; throws DomainError otherwise.
VotingRule standard_approval_rule();

/// Always selects every alternative.
VotingRule full_set_rule();

/// Step 1: uniform (anti-)plurality winners. Step 2 keeps the winners that are
/// (top side) the unique top of some voter / (bottom side) not the unique
/// bottom of any voter, falling back to step 1 when step 2 empties the set.
VotingRule two_step_rule(Side side);

/// Single voter: the top (resp. non-bottom) set. Otherwise the uniform
/// (anti-)plurality winners plus everything exactly one point below them.
VotingRule runner_up_rule(Side side);

/// Uniform (anti-)plurality totals with one fixed alternative's total doubled.
VotingRule biased_alternative_rule(int alternative, Side side, std::string label = "");

/// Uniform (anti-)plurality scoring except voter id 1 contributes 2 (resp. -2)
/// per top (bottom) alternative. Without a voter 1 it is the uniform rule.
VotingRule voter_privilege_rule(Side side);

}  // namespace povote
