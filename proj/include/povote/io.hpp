#pragma once

#include <json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "povote/axioms.hpp"
#include "povote/rules.hpp"

namespace povote::io {

/// Any syntactic or semantic defect in a ballot document, with its position.
struct ParseError : Error {
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct CycleError : ParseError {
  CycleError(int line, int column, int voter_id)
      : ParseError(line, column,
                   "ballot of voter " + std::to_string(voter_id) + " closes to a cycle"),
        voter_id(voter_id) {}
  int voter_id;
};

struct DuplicateVoterError : ParseError {
  DuplicateVoterError(int line, int column, int voter_id)
      : ParseError(line, column, "duplicate voter id " + std::to_string(voter_id)),
        voter_id(voter_id) {}
  int voter_id;
};

struct UnknownLabelError : ParseError {
  UnknownLabelError(int line, int column, const std::string& label)
      : ParseError(line, column, "unknown alternative '" + label + "'"), label(label) {}
  std::string label;
};

struct DegenerateBallotError : ParseError {
  DegenerateBallotError(int line, int column)
      : ParseError(line, column, "approval set must be a nonempty proper subset of the universe") {}
};

/// A parsed ballot file: the universe's labels, the profile, and the source
/// line of each voter for diagnostics.
struct BallotDocument {
  std::vector<std::string> labels;
  Profile profile;
  std::vector<int> voter_lines;  // parallel to profile.votes()
};

/// Grammar (line oriented, '#' starts a comment, whitespace-insensitive):
///   alternatives: <label> <label> ...
///   voter <id>: <edge>, <edge>, ...        edge is <label>><label>
///   voter <id>: approve {<label>, ...}
///   voter <id>: linear <label>><label>>...
///   voter <id>:                            (empty relation)
BallotDocument parse_ballots(std::string_view text);

/// Inverse of parse_ballots up to transitive closure: emits the closed edge
/// list of each preference. parse_ballots(serialize_profile(p, L)) == p.
std::string serialize_profile(const Profile& profile, std::span<const std::string> labels);

/// "a", "b", ... for small universes.
std::vector<std::string> default_labels(int m);

/// Throws Error unless labels are distinct, nonempty and at most the set cap.
void validate_labels(std::span<const std::string> labels);

/// Resolves a rule-spec string against the universe's labels:
///   uniform-plurality | uniform-anti-plurality | dominance-plurality | borda
///   | size-approval:<w1,...,wm> | anti-size:<v1,...,vm> | full-set
///   | two-step-top | two-step-bottom | runner-up-plurality
///   | runner-up-anti-plurality | double:<label>[-top|-bottom]
///   | voter1-top | voter1-bottom | approval
/// Throws GrammarError for unknown specs; WeightError passes through.
VotingRule parse_rule_spec(const std::string& spec, std::span<const std::string> labels);

nlohmann::json witness_to_json(const Witness& witness, std::span<const std::string> labels);
nlohmann::json check_result_to_json(const CheckResult& result, std::span<const std::string> labels);

nlohmann::json compute_report(const VotingRule& rule, AltSet winners,
                              std::span<const std::string> labels,
                              const std::vector<Score>* totals = nullptr);
nlohmann::json axioms_report(const VotingRule& rule, const CheckConfig& cfg,
                             const std::vector<std::pair<Axiom, CheckResult>>& results,
                             std::span<const std::string> labels);
nlohmann::json classify_report(const VotingRule& rule, int m, const ClassMembership& classes);
nlohmann::json enumerate_report(int m, bool count_only);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string serialize_report(const nlohmann::json& report);

/// Aggregate verdict over a report's results (fail > inconclusive > pass).
Verdict aggregate_verdict(const std::vector<std::pair<Axiom, CheckResult>>& results);

}  // namespace povote::io
