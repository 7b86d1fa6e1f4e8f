#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "povote/rules.hpp"

namespace povote {

enum class Axiom {
  anonymity,
  neutrality,
  reinforcement,
  continuity,
  partial_faithfulness,
  faithfulness,
  partial_averseness,
  averseness,
  t_congruity,
  b_congruity,
  contraction,
  strong_contraction,
  expansion,
  strong_expansion,
  tops_only,
  bottoms_only,
};

const std::vector<Axiom>& all_axioms();
std::string axiom_name(Axiom axiom);
/// Throws GrammarError for unknown names.
Axiom axiom_from_name(const std::string& name);

enum class PreferenceDomain { all, linear, approval };

std::string to_string(PreferenceDomain domain);

/// Bounds for the exhaustive checkers. All quantifiers over preferences draw
/// from enumerate_partial_orders(m) filtered by the domain restriction.
struct CheckConfig {
  int m = 3;
  int max_voters = 2;              // per quantified profile
  PreferenceDomain domain = PreferenceDomain::all;
  int k_max = 25;                  // continuity bound search range
  int verify_window = 5;           // continuity verification tail
  /// Tried before the enumerated instances by the single-profile checkers.
  std::vector<Profile> seed_profiles;
  /// Tried before the enumerated pairs by the two-profile checkers.
  std::vector<std::pair<Profile, Profile>> seed_pairs;

  /// Throws Error on invalid bounds (m must be >= 3 and within the
  /// enumeration bound, max_voters >= 1, verify_window >= 1).
  void validate() const;
};

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict verdict);

/// The concrete instance falsifying an axiom; replayable standalone.
struct Witness {
  /// Role -> profile ("profile", "profile2", "replacement", ...).
  std::vector<std::pair<std::string, Profile>> profiles;
  std::optional<Permutation> permutation;                     // neutrality
  std::optional<std::vector<std::pair<int, int>>> id_renaming;  // anonymity (old, new)
  std::optional<int> alternative;                             // congruity x
  std::optional<int> voter_id;                                // replaced voter
  std::optional<int> k;                                       // continuity replication
  std::string note;

  const Profile& profile(const std::string& role) const;
};

struct CheckResult {
  Verdict verdict = Verdict::inconclusive;
  long long instances_checked = 0;
  std::optional<Witness> witness;  // Fail only
  std::string reason;              // Inconclusive only
};

CheckResult check_anonymity(const VotingRule& rule, const CheckConfig& cfg);
CheckResult check_neutrality(const VotingRule& rule, const CheckConfig& cfg);
CheckResult check_reinforcement(const VotingRule& rule, const CheckConfig& cfg);
CheckResult check_continuity(const VotingRule& rule, const CheckConfig& cfg);
CheckResult check_faithfulness(const VotingRule& rule, const CheckConfig& cfg, bool partial);
CheckResult check_averseness(const VotingRule& rule, const CheckConfig& cfg, bool partial);
CheckResult check_t_congruity(const VotingRule& rule, const CheckConfig& cfg);
CheckResult check_b_congruity(const VotingRule& rule, const CheckConfig& cfg);
CheckResult check_contraction(const VotingRule& rule, const CheckConfig& cfg, bool strong);
CheckResult check_expansion(const VotingRule& rule, const CheckConfig& cfg, bool strong);
CheckResult check_tops_only(const VotingRule& rule, const CheckConfig& cfg);
CheckResult check_bottoms_only(const VotingRule& rule, const CheckConfig& cfg);

CheckResult check_axiom(const VotingRule& rule, Axiom axiom, const CheckConfig& cfg);

/// Analytic continuity bound of a positional scoring rule for one pair: for
/// every k past it, the winners of k copies of left plus right are contained
/// in the winners of left.
long long continuity_bound(const ScoringFunction& s, const Profile& left, const Profile& right);

/// Every checker, in all_axioms() order.
std::vector<std::pair<Axiom, CheckResult>> check_all(const VotingRule& rule, const CheckConfig& cfg);

/// Meta-consistency: true iff NOT (premise passes and conclusion fails).
bool cross_check_implication(const VotingRule& rule, const CheckConfig& cfg, Axiom premise,
                             Axiom conclusion);

}  // namespace povote
