#include "povote/axioms.hpp"

#include <algorithm>
#include <map>

#include "povote/enumerate.hpp"

namespace povote {

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> axioms = {
      Axiom::anonymity,       Axiom::neutrality,        Axiom::reinforcement,
      Axiom::continuity,      Axiom::partial_faithfulness, Axiom::faithfulness,
      Axiom::partial_averseness, Axiom::averseness,     Axiom::t_congruity,
      Axiom::b_congruity,     Axiom::contraction,       Axiom::strong_contraction,
      Axiom::expansion,       Axiom::strong_expansion,  Axiom::tops_only,
      Axiom::bottoms_only,
  };
  return axioms;
}

std::string axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::anonymity: return "anonymity";
    case Axiom::neutrality: return "neutrality";
    case Axiom::reinforcement: return "reinforcement";
    case Axiom::continuity: return "continuity";
    case Axiom::partial_faithfulness: return "partial-faithfulness";
    case Axiom::faithfulness: return "faithfulness";
    case Axiom::partial_averseness: return "partial-averseness";
    case Axiom::averseness: return "averseness";
    case Axiom::t_congruity: return "t-congruity";
    case Axiom::b_congruity: return "b-congruity";
    case Axiom::contraction: return "contraction";
    case Axiom::strong_contraction: return "strong-contraction";
    case Axiom::expansion: return "expansion";
    case Axiom::strong_expansion: return "strong-expansion";
    case Axiom::tops_only: return "tops-only";
    case Axiom::bottoms_only: return "bottoms-only";
  }
  return "?";
}

Axiom axiom_from_name(const std::string& name) {
  for (Axiom axiom : all_axioms())
    if (axiom_name(axiom) == name) return axiom;
  throw GrammarError("unknown axiom '" + name + "'");
}

std::string to_string(PreferenceDomain domain) {
  switch (domain) {
    case PreferenceDomain::all: return "all";
    case PreferenceDomain::linear: return "linear";
    case PreferenceDomain::approval: return "approval";
  }
  return "all";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

void CheckConfig::validate() const {
  if (m < 3) throw Error("axiom checks need m >= 3");
  if (m > enumeration_bound())
    throw ResourceError("m exceeds the enumeration bound (override with POVOTE_MAX_M)");
  if (max_voters < 1) throw Error("max_voters must be at least 1");
  if (k_max < 0 || verify_window < 1) throw Error("bad continuity bounds");
}

const Profile& Witness::profile(const std::string& role) const {
  for (const auto& [name, p] : profiles)
    if (name == role) return p;
  throw Error("witness has no profile in role '" + role + "'");
}

namespace {

// Instance enumeration order (fixed; a checker reports the first violation):
//   preferences  canonical lexicographic order, filtered by cfg.domain;
//   profiles     voter count ascending, then the tuple of preference indices
//                lexicographically, over the electorate {first..first+n-1};
//   pairs        (left count, right count, left tuple, right tuple), the
//                right electorate starting just after the left one;
//   instance-local loops (alternatives, positions, permutations, renamings,
//                replacement preferences) nest innermost, each ascending.
// Seed profiles/pairs from the config come before all enumerated instances.

std::string set_to_string(AltSet s) {
  std::string out = "{";
  bool first = true;
  for (int a : s.to_vector()) {
    if (!first) out += ",";
    out += "#" + std::to_string(a);
    first = false;
  }
  return out + "}";
}

CheckResult pass_result(long long instances) {
  return CheckResult{Verdict::pass, instances, std::nullopt, ""};
}

CheckResult fail_result(long long instances, Witness witness) {
  return CheckResult{Verdict::fail, instances, std::move(witness), ""};
}

struct Engine {
  const VotingRule& rule;
  const CheckConfig& cfg;
  std::vector<PartialOrder> domain;

  Engine(const VotingRule& r, const CheckConfig& c) : rule(r), cfg(c) {
    cfg.validate();
    for (PartialOrder& po : enumerate_partial_orders(cfg.m)) {
      const bool keep = cfg.domain == PreferenceDomain::all ||
                        (cfg.domain == PreferenceDomain::linear && po.is_linear()) ||
                        (cfg.domain == PreferenceDomain::approval &&
                         po.satisfies_approval_condition());
      if (keep) domain.push_back(std::move(po));
    }
  }

  AltSet winners(const Profile& p) const { return rule.winners(p); }

  Profile profile_from(const std::vector<int>& tuple, int first_id) const {
    std::vector<Vote> votes;
    votes.reserve(tuple.size());
    int id = first_id;
    for (int index : tuple) votes.push_back(Vote{id++, domain[static_cast<size_t>(index)]});
    return Profile(std::move(votes));
  }

  // All |domain|^n index tuples, lexicographic. visit returns false to stop.
  template <typename Fn>
  bool each_tuple(int n, Fn&& visit) const {
    std::vector<int> tuple(static_cast<size_t>(n), 0);
    const int base = static_cast<int>(domain.size());
    while (true) {
      if (!visit(tuple)) return false;
      int pos = n - 1;
      while (pos >= 0 && tuple[static_cast<size_t>(pos)] == base - 1) tuple[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) return true;
      ++tuple[static_cast<size_t>(pos)];
    }
  }

  void require_seed(const Profile& seed) const {
    if (seed.m() != cfg.m) throw ArityError("seed profile universe does not match the config");
  }

  template <typename Fn>
  bool each_profile(Fn&& visit) const {
    for (const Profile& seed : cfg.seed_profiles) {
      require_seed(seed);
      if (!visit(seed)) return false;
    }
    for (int n = 1; n <= cfg.max_voters; ++n)
      if (!each_tuple(n, [&](const std::vector<int>& tuple) { return visit(profile_from(tuple, 1)); }))
        return false;
    return true;
  }

  template <typename Fn>
  bool each_pair(Fn&& visit) const {
    for (const auto& [left, right] : cfg.seed_pairs) {
      require_seed(left);
      require_seed(right);
      if (!visit(left, right)) return false;
    }
    for (int nl = 1; nl <= cfg.max_voters; ++nl)
      for (int nr = 1; nr <= cfg.max_voters; ++nr) {
        const bool go = each_tuple(nl, [&](const std::vector<int>& lt) {
          const Profile left = profile_from(lt, 1);
          return each_tuple(nr, [&](const std::vector<int>& rt) {
            return visit(left, profile_from(rt, nl + 1));
          });
        });
        if (!go) return false;
      }
    return true;
  }

  // All injective id tuples of the given length from the pool
  // {1..max_voters+2}, lexicographic.
  template <typename Fn>
  bool each_injection(int n, Fn&& visit) const {
    const int pool = cfg.max_voters + 2;
    std::vector<int> ids;
    const auto recurse = [&](auto&& self) -> bool {
      if (static_cast<int>(ids.size()) == n) return visit(ids);
      for (int id = 1; id <= pool; ++id) {
        if (std::find(ids.begin(), ids.end(), id) != ids.end()) continue;
        ids.push_back(id);
        if (!self(self)) return false;
        ids.pop_back();
      }
      return true;
    };
    return recurse(recurse);
  }
};

}  // namespace

CheckResult check_anonymity(const VotingRule& rule, const CheckConfig& cfg) {
  Engine e(rule, cfg);
  long long instances = 0;
  std::optional<Witness> found;
  e.each_profile([&](const Profile& p) {
    const AltSet w = e.winners(p);
    return e.each_injection(p.size(), [&](const std::vector<int>& new_ids) {
      ++instances;
      std::vector<Vote> votes(p.votes().begin(), p.votes().end());
      std::vector<std::pair<int, int>> renaming;
      for (size_t i = 0; i < votes.size(); ++i) {
        renaming.emplace_back(votes[i].voter_id, new_ids[i]);
        votes[i].voter_id = new_ids[i];
      }
      const Profile renamed{std::move(votes)};
      if (e.winners(renamed) == w) return true;
      Witness witness;
      witness.profiles = {{"profile", p}, {"profile2", renamed}};
      witness.id_renaming = std::move(renaming);
      witness.note = "renaming voters changes the winners";
      found = std::move(witness);
      return false;
    });
  });
  if (found) return fail_result(instances, std::move(*found));
  return pass_result(instances);
}

CheckResult check_neutrality(const VotingRule& rule, const CheckConfig& cfg) {
  Engine e(rule, cfg);
  const std::vector<Permutation> sigmas = Permutation::all(cfg.m);
  long long instances = 0;
  std::optional<Witness> found;
  e.each_profile([&](const Profile& p) {
    const AltSet w = e.winners(p);
    for (const Permutation& sigma : sigmas) {
      ++instances;
      std::vector<Vote> votes(p.votes().begin(), p.votes().end());
      for (Vote& v : votes) v.preference = v.preference.relabeled(sigma);
      const Profile relabeled{std::move(votes)};
      if (e.winners(relabeled) == sigma.apply(w)) continue;
      Witness witness;
      witness.profiles = {{"profile", p}, {"profile2", relabeled}};
      witness.permutation = sigma;
      witness.note = "winners of the relabeled profile differ from the relabeled winners";
      found = std::move(witness);
      return false;
    }
    return true;
  });
  if (found) return fail_result(instances, std::move(*found));
  return pass_result(instances);
}

CheckResult check_reinforcement(const VotingRule& rule, const CheckConfig& cfg) {
  Engine e(rule, cfg);
  long long instances = 0;
  std::optional<Witness> found;
  e.each_pair([&](const Profile& left, const Profile& right) {
    ++instances;
    const AltSet shared = e.winners(left) & e.winners(right);
    if (shared.empty()) return true;
    const AltSet combined = e.winners(concat_profiles(left, right));
    if (combined == shared) return true;
    Witness witness;
    witness.profiles = {{"profile", left}, {"profile2", right}};
    witness.note = "concatenation gives " + set_to_string(combined) +
                   " instead of the shared winners " + set_to_string(shared);
    found = std::move(witness);
    return false;
  });
  if (found) return fail_result(instances, std::move(*found));
  return pass_result(instances);
}

long long continuity_bound(const ScoringFunction& s, const Profile& left, const Profile& right) {
  const std::vector<Score> per_copy = score_totals(s, left);
  const std::vector<Score> fixed = score_totals(s, right);
  const AltSet winners = argmax_set(per_copy);
  long long bound = 0;
  for (int a = 0; a < left.m(); ++a) {
    if (winners.contains(a)) continue;
    for (int b : winners.to_vector()) {
      const Score gap = per_copy[static_cast<size_t>(b)] - per_copy[static_cast<size_t>(a)];
      const Score diff = fixed[static_cast<size_t>(a)] - fixed[static_cast<size_t>(b)];
      const Score ratio = diff / gap;
      bound = std::max<long long>(bound, ceil_ratio(ratio.numerator(), ratio.denominator()));
    }
  }
  return bound;
}

CheckResult check_continuity(const VotingRule& rule, const CheckConfig& cfg) {
  Engine e(rule, cfg);
  long long instances = 0;
  std::optional<Witness> found;
  std::string first_inconclusive;

  const auto replication = [&](const Profile& left, const Profile& right, long long k) {
    return concat_profiles(replicate_profile(left, static_cast<int>(k), right.ids()), right);
  };

  e.each_pair([&](const Profile& left, const Profile& right) {
    ++instances;
    const AltSet base = e.winners(left);

    if (rule.scoring) {
      // Positional scoring rules admit a closed-form bound: past it, every
      // non-winner of the left profile stays beaten in k copies plus right.
      // Verify the certificate across the window; a mismatch means the rule's
      // eval and its attached scoring function disagree.
      const long long bound = continuity_bound(*rule.scoring, left, right);
      for (long long k = bound + 1; k <= bound + cfg.verify_window; ++k)
        if (!e.winners(replication(left, right, k)).subset_of(base))
          throw Error("rule '" + rule.name + "': analytic continuity bound not honored by eval");
      return true;
    }

    const int horizon = cfg.k_max + cfg.verify_window;
    std::vector<AltSet> outcomes;
    outcomes.reserve(static_cast<size_t>(horizon));
    for (int k = 1; k <= horizon; ++k) outcomes.push_back(e.winners(replication(left, right, k)));

    int last_violation = 0;
    for (int k = horizon; k >= 1; --k)
      if (!outcomes[static_cast<size_t>(k - 1)].subset_of(base)) {
        last_violation = k;
        break;
      }
    if (last_violation <= cfg.k_max) return true;  // bound K = last_violation works

    const AltSet tail = outcomes[static_cast<size_t>(cfg.k_max)];
    const bool stabilized = std::all_of(outcomes.begin() + cfg.k_max, outcomes.end(),
                                        [&](AltSet w) { return w == tail; });
    if (stabilized && !tail.intersects(base)) {
      Witness witness;
      witness.profiles = {{"profile", left}, {"profile2", right}};
      witness.k = cfg.k_max + 1;
      witness.note = "replications k=" + std::to_string(cfg.k_max + 1) + ".." +
                     std::to_string(horizon) + " all return " + set_to_string(tail) +
                     ", disjoint from F(profile)=" + set_to_string(base);
      found = std::move(witness);
      return false;
    }
    if (first_inconclusive.empty())
      first_inconclusive = "no bound K <= " + std::to_string(cfg.k_max) +
                           " found for a pair and the tail outcomes do not certify a violation";
    return true;  // keep scanning: a later pair may still certify a failure
  });

  if (found) return fail_result(instances, std::move(*found));
  if (!first_inconclusive.empty())
    return CheckResult{Verdict::inconclusive, instances, std::nullopt, first_inconclusive};
  return pass_result(instances);
}

namespace {

CheckResult check_single_voter(const VotingRule& rule, const CheckConfig& cfg, bool exempt_full_bottom,
                               const std::function<bool(const PartialOrder&, AltSet)>& holds,
                               const std::string& description) {
  Engine e(rule, cfg);
  long long instances = 0;
  for (const Profile& seed : cfg.seed_profiles) {
    e.require_seed(seed);
    if (seed.size() != 1) continue;
    const PartialOrder& po = seed.vote(0).preference;
    if (exempt_full_bottom && po.bottom() == AltSet::full(cfg.m)) continue;
    ++instances;
    if (!holds(po, e.winners(seed))) {
      Witness witness;
      witness.profiles = {{"profile", seed}};
      witness.note = description;
      return fail_result(instances, std::move(witness));
    }
  }
  for (int id : {1, 2})  // id 1 exercises voter-privilege rules, id 2 the generic path
    for (const PartialOrder& po : e.domain) {
      if (exempt_full_bottom && po.bottom() == AltSet::full(cfg.m)) continue;
      ++instances;
      const Profile p = Profile::of({{id, po}});
      if (holds(po, e.winners(p))) continue;
      Witness witness;
      witness.profiles = {{"profile", p}};
      witness.note = description;
      return fail_result(instances, std::move(witness));
    }
  return pass_result(instances);
}

}  // namespace

CheckResult check_faithfulness(const VotingRule& rule, const CheckConfig& cfg, bool partial) {
  if (partial)
    return check_single_voter(
        rule, cfg, false, [](const PartialOrder& po, AltSet w) { return w.subset_of(po.top()); },
        "winners are not contained in the voter's top");
  return check_single_voter(
      rule, cfg, false, [](const PartialOrder& po, AltSet w) { return w == po.top(); },
      "winners differ from the voter's top");
}

CheckResult check_averseness(const VotingRule& rule, const CheckConfig& cfg, bool partial) {
  if (partial)
    return check_single_voter(
        rule, cfg, true, [](const PartialOrder& po, AltSet w) { return !po.bottom().subset_of(w); },
        "all bottom alternatives were selected");
  return check_single_voter(
      rule, cfg, true, [](const PartialOrder& po, AltSet w) { return !po.bottom().intersects(w); },
      "a bottom alternative was selected");
}

namespace {

CheckResult check_congruity(const VotingRule& rule, const CheckConfig& cfg, bool top_side) {
  Engine e(rule, cfg);
  long long instances = 0;
  std::optional<Witness> found;
  e.each_pair([&](const Profile& left, const Profile& right) {
    const AltSet w = e.winners(left);
    AltSet side_union;
    for (const Vote& v : right.votes())
      side_union = side_union | (top_side ? v.preference.top() : v.preference.bottom());
    std::optional<AltSet> combined;
    for (int x = 0; x < cfg.m; ++x) {
      ++instances;
      if (side_union.contains(x)) continue;
      if (top_side ? w.contains(x) : !w.contains(x)) continue;
      if (!combined) combined = e.winners(concat_profiles(left, right));
      const bool violated = top_side ? combined->contains(x) : !combined->contains(x);
      if (!violated) continue;
      Witness witness;
      witness.profiles = {{"profile", left}, {"profile2", right}};
      witness.alternative = x;
      witness.note = top_side
                         ? "a loser no added voter ranks top re-enters the winners"
                         : "a winner no added voter ranks bottom drops out of the winners";
      found = std::move(witness);
      return false;
    }
    return true;
  });
  if (found) return fail_result(instances, std::move(*found));
  return pass_result(instances);
}

}  // namespace

CheckResult check_t_congruity(const VotingRule& rule, const CheckConfig& cfg) {
  return check_congruity(rule, cfg, true);
}

CheckResult check_b_congruity(const VotingRule& rule, const CheckConfig& cfg) {
  return check_congruity(rule, cfg, false);
}

namespace {

CheckResult check_replacement(const VotingRule& rule, const CheckConfig& cfg, bool top_side,
                              bool strong) {
  Engine e(rule, cfg);
  long long instances = 0;
  std::optional<Witness> found;
  e.each_profile([&](const Profile& p) {
    const AltSet w = e.winners(p);
    for (int i = 0; i < p.size(); ++i) {
      const PartialOrder& current = p.vote(i).preference;
      const AltSet side = top_side ? current.top() : current.bottom();
      for (const PartialOrder& replacement : e.domain) {
        const AltSet new_side = top_side ? replacement.top() : replacement.bottom();
        // Contraction shrinks the top; expansion grows the bottom.
        if (top_side ? !new_side.subset_of(side) : !side.subset_of(new_side)) continue;
        ++instances;
        AltSet required;
        if (strong) {
          required = top_side ? w - (side - new_side) : w - (new_side - side);
        } else {
          required = w & (top_side ? new_side : side);
          if (required.empty()) continue;
        }
        if (required.subset_of(e.winners(p.with_replaced(i, replacement)))) continue;
        Witness witness;
        witness.profiles = {{"profile", p},
                            {"replacement", Profile::of({{p.vote(i).voter_id, replacement}})}};
        witness.voter_id = p.vote(i).voter_id;
        witness.note = "protected alternatives " + set_to_string(required) +
                       " are not all winners after the replacement";
        found = std::move(witness);
        return false;
      }
    }
    return true;
  });
  if (found) return fail_result(instances, std::move(*found));
  return pass_result(instances);
}

CheckResult check_side_only(const VotingRule& rule, const CheckConfig& cfg, bool top_side) {
  Engine e(rule, cfg);
  long long instances = 0;
  std::optional<Witness> found;

  std::map<std::uint64_t, std::vector<const PartialOrder*>> by_side;
  for (const PartialOrder& po : e.domain)
    by_side[(top_side ? po.top() : po.bottom()).bits()].push_back(&po);

  e.each_profile([&](const Profile& p) {
    const AltSet w = e.winners(p);
    // Odometer over per-voter same-side preference choices.
    std::vector<const std::vector<const PartialOrder*>*> choices;
    for (const Vote& v : p.votes()) {
      const AltSet side = top_side ? v.preference.top() : v.preference.bottom();
      const auto it = by_side.find(side.bits());
      if (it == by_side.end()) return true;  // seed voter with no in-domain match
      choices.push_back(&it->second);
    }
    std::vector<size_t> pick(choices.size(), 0);
    while (true) {
      ++instances;
      std::vector<Vote> votes(p.votes().begin(), p.votes().end());
      for (size_t i = 0; i < votes.size(); ++i) votes[i].preference = *(*choices[i])[pick[i]];
      const Profile q{std::move(votes)};
      if (e.winners(q) != w) {
        Witness witness;
        witness.profiles = {{"profile", p}, {"profile2", q}};
        witness.note = top_side ? "profiles with identical tops elect different winners"
                                : "profiles with identical bottoms elect different winners";
        found = std::move(witness);
        return false;
      }
      size_t pos = pick.size();
      while (pos > 0 && pick[pos - 1] + 1 == choices[pos - 1]->size()) pick[--pos] = 0;
      if (pos == 0) break;
      ++pick[pos - 1];
    }
    return true;
  });
  if (found) return fail_result(instances, std::move(*found));
  return pass_result(instances);
}

}  // namespace

CheckResult check_contraction(const VotingRule& rule, const CheckConfig& cfg, bool strong) {
  return check_replacement(rule, cfg, true, strong);
}

CheckResult check_expansion(const VotingRule& rule, const CheckConfig& cfg, bool strong) {
  return check_replacement(rule, cfg, false, strong);
}

CheckResult check_tops_only(const VotingRule& rule, const CheckConfig& cfg) {
  return check_side_only(rule, cfg, true);
}

CheckResult check_bottoms_only(const VotingRule& rule, const CheckConfig& cfg) {
  return check_side_only(rule, cfg, false);
}

CheckResult check_axiom(const VotingRule& rule, Axiom axiom, const CheckConfig& cfg) {
  switch (axiom) {
    case Axiom::anonymity: return check_anonymity(rule, cfg);
    case Axiom::neutrality: return check_neutrality(rule, cfg);
    case Axiom::reinforcement: return check_reinforcement(rule, cfg);
    case Axiom::continuity: return check_continuity(rule, cfg);
    case Axiom::partial_faithfulness: return check_faithfulness(rule, cfg, true);
    case Axiom::faithfulness: return check_faithfulness(rule, cfg, false);
    case Axiom::partial_averseness: return check_averseness(rule, cfg, true);
    case Axiom::averseness: return check_averseness(rule, cfg, false);
    case Axiom::t_congruity: return check_t_congruity(rule, cfg);
    case Axiom::b_congruity: return check_b_congruity(rule, cfg);
    case Axiom::contraction: return check_contraction(rule, cfg, false);
    case Axiom::strong_contraction: return check_contraction(rule, cfg, true);
    case Axiom::expansion: return check_expansion(rule, cfg, false);
    case Axiom::strong_expansion: return check_expansion(rule, cfg, true);
    case Axiom::tops_only: return check_tops_only(rule, cfg);
    case Axiom::bottoms_only: return check_bottoms_only(rule, cfg);
  }
  throw Error("unknown axiom");
}

std::vector<std::pair<Axiom, CheckResult>> check_all(const VotingRule& rule, const CheckConfig& cfg) {
  std::vector<std::pair<Axiom, CheckResult>> out;
  out.reserve(all_axioms().size());
  for (Axiom axiom : all_axioms()) out.emplace_back(axiom, check_axiom(rule, axiom, cfg));
  return out;
}

bool cross_check_implication(const VotingRule& rule, const CheckConfig& cfg, Axiom premise,
                             Axiom conclusion) {
  if (check_axiom(rule, premise, cfg).verdict != Verdict::pass) return true;
  return check_axiom(rule, conclusion, cfg).verdict != Verdict::fail;
}

}  // namespace povote
