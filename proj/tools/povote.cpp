#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "povote/enumerate.hpp"
#include "povote/io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw povote::Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Voting with strict partial orders: winner computation, rule classification,\n"
               "and exhaustive axiom checking on bounded universes."};
  app.require_subcommand(1);

  std::string rule_spec;
  std::string ballots_path;
  bool with_scores = false;
  auto* compute = app.add_subcommand("compute", "Winners of a rule on a ballot file");
  compute->add_option("--rule", rule_spec, "Rule spec")->required();
  compute->add_option("--ballots", ballots_path, "Ballot file")->required();
  compute->add_flag("--scores", with_scores, "Include per-alternative totals (scoring rules)");

  std::string axiom_id = "all";
  int m = 3;
  povote::CheckConfig cfg;
  std::string domain = "all";
  auto* axioms = app.add_subcommand("axioms", "Check axioms exhaustively at bounded universes");
  axioms->add_option("--rule", rule_spec, "Rule spec")->required();
  axioms->add_option("--axiom", axiom_id, "Axiom id or 'all'");
  axioms->add_option("--m", m, "Universe size")->required();
  axioms->add_option("--max-voters", cfg.max_voters, "Voters per quantified profile")->required();
  axioms->add_option("--domain", domain, "Preference domain")
      ->check(CLI::IsMember({"all", "linear", "approval"}));
  axioms->add_option("--kmax", cfg.k_max, "Continuity bound search range");

  auto* classify_cmd = app.add_subcommand("classify", "Class membership of a scoring rule");
  classify_cmd->add_option("--rule", rule_spec, "Rule spec")->required();
  classify_cmd->add_option("--m", m, "Universe size")->required();

  bool count_only = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "All strict partial orders at m");
  enumerate_cmd->add_option("--m", m, "Universe size")->required();
  enumerate_cmd->add_flag("--count-only", count_only, "Print only the count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*compute) {
    const povote::io::BallotDocument doc = povote::io::parse_ballots(read_file(ballots_path));
    const povote::VotingRule rule = povote::io::parse_rule_spec(rule_spec, doc.labels);
    const povote::AltSet winners = rule.winners(doc.profile);
    std::vector<povote::Score> totals;
    if (with_scores) {
      if (!rule.scoring)
        throw povote::GrammarError("--scores needs a scoring-based rule, got '" + rule.name + "'");
      totals = povote::score_totals(*rule.scoring, doc.profile);
    }
    std::cout << povote::io::serialize_report(povote::io::compute_report(
        rule, winners, doc.labels, with_scores ? &totals : nullptr));
    return kExitPass;
  }

  if (*axioms) {
    cfg.m = m;
    cfg.domain = domain == "linear"     ? povote::PreferenceDomain::linear
                 : domain == "approval" ? povote::PreferenceDomain::approval
                                        : povote::PreferenceDomain::all;
    const std::vector<std::string> labels = povote::io::default_labels(m);
    const povote::VotingRule rule = povote::io::parse_rule_spec(rule_spec, labels);
    std::vector<std::pair<povote::Axiom, povote::CheckResult>> results;
    if (axiom_id == "all") {
      results = povote::check_all(rule, cfg);
    } else {
      const povote::Axiom axiom = povote::axiom_from_name(axiom_id);
      results.emplace_back(axiom, povote::check_axiom(rule, axiom, cfg));
    }
    std::cout << povote::io::serialize_report(
        povote::io::axioms_report(rule, cfg, results, labels));
    switch (povote::io::aggregate_verdict(results)) {
      case povote::Verdict::pass: return kExitPass;
      case povote::Verdict::fail: return kExitFail;
      case povote::Verdict::inconclusive: return kExitInconclusive;
    }
  }

  if (*classify_cmd) {
    const std::vector<std::string> labels = povote::io::default_labels(m);
    const povote::VotingRule rule = povote::io::parse_rule_spec(rule_spec, labels);
    if (!rule.scoring)
      throw povote::GrammarError("classify needs a scoring-based rule, got '" + rule.name + "'");
    const povote::ClassMembership classes = povote::classify(povote::tabulate(*rule.scoring, m));
    std::cout << povote::io::serialize_report(povote::io::classify_report(rule, m, classes));
    return kExitPass;
  }

  if (*enumerate_cmd) {
    std::cout << povote::io::serialize_report(povote::io::enumerate_report(m, count_only));
    return kExitPass;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const povote::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
