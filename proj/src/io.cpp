#include "povote/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "povote/enumerate.hpp"

namespace povote::io {

namespace {

bool is_label_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '>' && c != ',' && c != '{' &&
         c != '}' && c != ':' && c != '#';
}

// Cursor over one source line; columns are 1-based.
struct LineScanner {
  std::string_view text;
  int line;
  size_t pos = 0;

  int column() const { return static_cast<int>(pos) + 1; }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!consume(c))
      throw ParseError(line, column(), std::string("expected '") + c + "'");
  }
  std::string token() {
    skip_ws();
    const size_t start = pos;
    while (pos < text.size() && is_label_char(text[pos])) ++pos;
    if (pos == start) throw ParseError(line, column(), "expected a name");
    return std::string(text.substr(start, pos - start));
  }
  int integer() {
    skip_ws();
    const int col = column();
    const size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(line, col, "expected a positive integer");
    try {
      return std::stoi(std::string(text.substr(start, pos - start)));
    } catch (const std::out_of_range&) {
      throw ParseError(line, col, "integer out of range");
    }
  }
};

struct LabelTable {
  std::vector<std::string> labels;

  int index_at(LineScanner& s) const {
    s.skip_ws();
    const int col = s.column();
    const std::string name = s.token();
    const auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw UnknownLabelError(s.line, col, name);
    return static_cast<int>(it - labels.begin());
  }
};

}  // namespace

void validate_labels(std::span<const std::string> labels) {
  if (labels.empty()) throw Error("universe needs at least one alternative");
  if (static_cast<int>(labels.size()) > kMaxAlternatives)
    throw Error("at most " + std::to_string(kMaxAlternatives) + " alternatives supported");
  std::set<std::string> seen;
  for (const std::string& label : labels) {
    if (label.empty()) throw Error("alternative labels must be nonempty");
    for (char c : label)
      if (!is_label_char(c)) throw Error("label '" + label + "' contains reserved characters");
    if (!seen.insert(label).second) throw Error("duplicate alternative label '" + label + "'");
  }
}

std::vector<std::string> default_labels(int m) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
  return labels;
}

BallotDocument parse_ballots(std::string_view text) {
  std::vector<std::string> lines;
  for (size_t start = 0; start <= text.size();) {
    const size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  for (std::string& l : lines)  // strip comments
    if (const size_t hash = l.find('#'); hash != std::string::npos) l.resize(hash);

  LabelTable table;
  std::vector<Vote> votes;
  std::vector<int> voter_lines;
  std::set<int> ids;

  for (size_t li = 0; li < lines.size(); ++li) {
    LineScanner s{lines[li], static_cast<int>(li) + 1};
    if (s.done()) continue;
    const int keyword_col = s.column();
    const std::string keyword = s.token();

    if (keyword == "alternatives") {
      if (!table.labels.empty()) throw ParseError(s.line, keyword_col, "duplicate header");
      s.expect(':');
      while (!s.done()) table.labels.push_back(s.token());
      try {
        validate_labels(table.labels);
      } catch (const Error& err) {
        throw ParseError(s.line, keyword_col, err.what());
      }
      continue;
    }

    if (keyword != "voter")
      throw ParseError(s.line, keyword_col, "expected 'alternatives' or 'voter'");
    if (table.labels.empty())
      throw ParseError(s.line, keyword_col, "the 'alternatives' header must come first");

    const int id_col = s.column();
    const int id = s.integer();
    if (id < 1) throw ParseError(s.line, id_col, "voter ids must be positive");
    if (!ids.insert(id).second) throw DuplicateVoterError(s.line, id_col, id);
    s.expect(':');
    s.skip_ws();

    const int m = static_cast<int>(table.labels.size());
    const int ballot_col = s.column();
    std::vector<std::pair<int, int>> edges;
    bool handled = false;

    if (!s.done()) {
      const size_t mark = s.pos;
      const std::string word = s.token();
      if (word == "approve" && s.peek() == '{') {
        s.expect('{');
        AltSet approved;
        if (s.peek() != '}')
          do {
            approved = approved.with(table.index_at(s));
          } while (s.consume(','));
        s.expect('}');
        if (approved.empty() || approved == AltSet::full(m))
          throw DegenerateBallotError(s.line, ballot_col);
        for (int a : approved.to_vector())
          for (int b : (AltSet::full(m) - approved).to_vector()) edges.emplace_back(a, b);
        handled = true;
      } else if (word == "linear" && !s.done() && s.peek() != '>' && s.peek() != ',') {
        int prev = table.index_at(s);
        while (s.consume('>')) {
          const int next = table.index_at(s);
          edges.emplace_back(prev, next);
          prev = next;
        }
        if (edges.empty()) throw ParseError(s.line, s.column(), "linear chain needs '>'");
        handled = true;
      } else {
        s.pos = mark;  // plain edge list
      }
      if (!handled) {
        do {
          const int winner = table.index_at(s);
          s.expect('>');
          const int loser = table.index_at(s);
          edges.emplace_back(winner, loser);
        } while (s.consume(','));
      }
    }
    if (!s.done()) throw ParseError(s.line, s.column(), "trailing input after ballot");

    try {
      votes.push_back(Vote{id, PartialOrder::from_edges(m, edges)});
    } catch (const povote::CycleError&) {
      throw CycleError(s.line, ballot_col, id);
    }
    voter_lines.push_back(s.line);
  }

  if (table.labels.empty())
    throw ParseError(static_cast<int>(lines.size()), 1, "missing 'alternatives' header");
  if (votes.empty())
    throw ParseError(static_cast<int>(lines.size()), 1, "no voter lines");
  return BallotDocument{std::move(table.labels), Profile(std::move(votes)), std::move(voter_lines)};
}

std::string serialize_profile(const Profile& profile, std::span<const std::string> labels) {
  validate_labels(labels);
  if (static_cast<int>(labels.size()) != profile.m())
    throw ArityError("label list does not match the profile's universe");
  std::string out = "alternatives:";
  for (const std::string& label : labels) out += " " + label;
  out += "\n";
  for (const Vote& v : profile.votes()) {
    out += "voter " + std::to_string(v.voter_id) + ":";
    bool first = true;
    for (const auto& [winner, loser] : v.preference.edges()) {
      out += first ? " " : ", ";
      out += labels[static_cast<size_t>(winner)] + ">" + labels[static_cast<size_t>(loser)];
      first = false;
    }
    out += "\n";
  }
  return out;
}

namespace {

std::vector<Score> parse_weights(const std::string& text) {
  std::vector<Score> weights;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string part =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    weights.push_back(parse_score(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return weights;
}

int label_index(const std::string& label, std::span<const std::string> labels) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw GrammarError("unknown alternative '" + label + "' in rule spec");
  return static_cast<int>(it - labels.begin());
}

}  // namespace

VotingRule parse_rule_spec(const std::string& spec, std::span<const std::string> labels) {
  validate_labels(labels);
  const int m = static_cast<int>(labels.size());
  const auto sized = [&](std::vector<Score> w) {
    if (static_cast<int>(w.size()) != m)
      throw WeightError("expected " + std::to_string(m) + " weights");
    return w;
  };

  VotingRule rule;
  if (spec == "uniform-plurality") rule = scoring_rule(uniform_plurality_scoring());
  else if (spec == "uniform-anti-plurality") rule = scoring_rule(uniform_anti_plurality_scoring());
  else if (spec == "dominance-plurality") rule = scoring_rule(dominance_plurality_scoring());
  else if (spec == "borda") rule = scoring_rule(borda_dominance_scoring());
  else if (spec.starts_with("size-approval:"))
    rule = scoring_rule(size_family_scoring(sized(parse_weights(spec.substr(14)))));
  else if (spec.starts_with("anti-size:"))
    rule = scoring_rule(anti_size_family_scoring(sized(parse_weights(spec.substr(10)))));
  else if (spec == "full-set") rule = full_set_rule();
  else if (spec == "two-step-top") rule = two_step_rule(Side::top);
  else if (spec == "two-step-bottom") rule = two_step_rule(Side::bottom);
  else if (spec == "runner-up-plurality") rule = runner_up_rule(Side::top);
  else if (spec == "runner-up-anti-plurality") rule = runner_up_rule(Side::bottom);
  else if (spec.starts_with("double:")) {
    std::string rest = spec.substr(7);
    Side side = Side::top;
    if (rest.ends_with("-bottom")) {
      side = Side::bottom;
      rest.resize(rest.size() - 7);
    } else if (rest.ends_with("-top")) {
      rest.resize(rest.size() - 4);
    }
    rule = biased_alternative_rule(label_index(rest, labels), side, rest);
  } else if (spec == "voter1-top") rule = voter_privilege_rule(Side::top);
  else if (spec == "voter1-bottom") rule = voter_privilege_rule(Side::bottom);
  else if (spec == "approval") rule = standard_approval_rule();
  else throw GrammarError("unknown rule spec '" + spec + "'");

  rule.name = spec;
  return rule;
}

namespace {

nlohmann::json labels_of(AltSet set, std::span<const std::string> labels) {
  nlohmann::json out = nlohmann::json::array();
  for (int a : set.to_vector()) out.push_back(labels[static_cast<size_t>(a)]);
  return out;
}

}  // namespace

nlohmann::json witness_to_json(const Witness& witness, std::span<const std::string> labels) {
  nlohmann::json j;
  nlohmann::json profiles;
  for (const auto& [role, profile] : witness.profiles)
    profiles[role] = serialize_profile(profile, labels);
  j["profiles"] = std::move(profiles);
  if (witness.permutation) {
    nlohmann::json sigma = nlohmann::json::array();
    for (int a = 0; a < witness.permutation->size(); ++a)
      sigma.push_back(labels[static_cast<size_t>((*witness.permutation)(a))]);
    j["permutation"] = std::move(sigma);
  }
  if (witness.id_renaming) {
    nlohmann::json renaming;
    for (const auto& [from, to] : *witness.id_renaming) renaming[std::to_string(from)] = to;
    j["id_renaming"] = std::move(renaming);
  }
  if (witness.alternative) j["alternative"] = labels[static_cast<size_t>(*witness.alternative)];
  if (witness.voter_id) j["voter_id"] = *witness.voter_id;
  if (witness.k) j["k"] = *witness.k;
  if (!witness.note.empty()) j["note"] = witness.note;
  return j;
}

nlohmann::json check_result_to_json(const CheckResult& result, std::span<const std::string> labels) {
  nlohmann::json j;
  j["verdict"] = to_string(result.verdict);
  j["instances_checked"] = result.instances_checked;
  if (result.witness) j["witness"] = witness_to_json(*result.witness, labels);
  if (!result.reason.empty()) j["reason"] = result.reason;
  return j;
}

nlohmann::json compute_report(const VotingRule& rule, AltSet winners,
                              std::span<const std::string> labels,
                              const std::vector<Score>* totals) {
  nlohmann::json j;
  j["rule"] = rule.name;
  j["winners"] = labels_of(winners, labels);
  if (totals) {
    nlohmann::json scores;
    for (size_t a = 0; a < totals->size(); ++a) scores[labels[a]] = format_score((*totals)[a]);
    j["scores"] = std::move(scores);
  }
  return j;
}

nlohmann::json axioms_report(const VotingRule& rule, const CheckConfig& cfg,
                             const std::vector<std::pair<Axiom, CheckResult>>& results,
                             std::span<const std::string> labels) {
  nlohmann::json j;
  j["rule"] = rule.name;
  j["config"] = {{"m", cfg.m},
                 {"max_voters", cfg.max_voters},
                 {"domain", to_string(cfg.domain)},
                 {"k_max", cfg.k_max},
                 {"verify_window", cfg.verify_window}};
  nlohmann::json body;
  for (const auto& [axiom, result] : results)
    body[axiom_name(axiom)] = check_result_to_json(result, labels);
  j["results"] = std::move(body);
  j["verdict"] = to_string(aggregate_verdict(results));
  return j;
}

nlohmann::json classify_report(const VotingRule& rule, int m, const ClassMembership& classes) {
  nlohmann::json j;
  j["rule"] = rule.name;
  j["m"] = m;
  j["classes"] = {{"plurality_class", classes.plurality_class},
                  {"simple_plurality", classes.simple_plurality},
                  {"monotonic_simple_plurality", classes.monotonic_simple_plurality},
                  {"uniform_plurality", classes.uniform_plurality},
                  {"anti_plurality_class", classes.anti_plurality_class},
                  {"simple_anti_plurality", classes.simple_anti_plurality},
                  {"monotonic_simple_anti_plurality", classes.monotonic_simple_anti_plurality},
                  {"uniform_anti_plurality", classes.uniform_anti_plurality}};
  return j;
}

nlohmann::json enumerate_report(int m, bool count_only) {
  const std::vector<PartialOrder> orders = enumerate_partial_orders(m);
  nlohmann::json j;
  j["m"] = m;
  j["count"] = orders.size();
  if (!count_only) {
    const std::vector<std::string> labels = default_labels(m);
    nlohmann::json body = nlohmann::json::array();
    for (const PartialOrder& po : orders) {
      std::string text;
      bool first = true;
      for (const auto& [winner, loser] : po.edges()) {
        if (!first) text += ", ";
        text += labels[static_cast<size_t>(winner)] + ">" + labels[static_cast<size_t>(loser)];
        first = false;
      }
      body.push_back(std::move(text));
    }
    j["orders"] = std::move(body);
  }
  return j;
}

std::string serialize_report(const nlohmann::json& report) { return report.dump(2) + "\n"; }

Verdict aggregate_verdict(const std::vector<std::pair<Axiom, CheckResult>>& results) {
  Verdict verdict = Verdict::pass;
  for (const auto& [axiom, result] : results) {
    if (result.verdict == Verdict::fail) return Verdict::fail;
    if (result.verdict == Verdict::inconclusive) verdict = Verdict::inconclusive;
  }
  return verdict;
}

}  // namespace povote::io
