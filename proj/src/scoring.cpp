#include "povote/scoring.hpp"

#include <map>
#include <optional>

#include "povote/enumerate.hpp"

namespace povote {

namespace {

void validate_weights(const std::vector<Score>& w) {
  const int m = static_cast<int>(w.size());
  if (m < 1) throw WeightError("weight sequence is empty");
  for (int t = 1; t < m; ++t)
    if (w[static_cast<size_t>(t - 1)] < w[static_cast<size_t>(t)])
      throw WeightError("weights must be non-increasing");
  for (int t = 0; t < m - 1; ++t)
    if (w[static_cast<size_t>(t)] <= Score(0))
      throw WeightError("weights w(1)..w(m-1) must be positive");
  if (w.back() < Score(0)) throw WeightError("w(m) must be non-negative");
}

std::string weights_name(const char* prefix, const std::vector<Score>& w) {
  std::string name = prefix;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) name += ',';
    name += w[i].denominator() == 1 ? std::to_string(w[i].numerator()) : format_score(w[i]);
  }
  return name;
}

void require_arity(const std::vector<Score>& w, const PartialOrder& po) {
  if (po.m() != static_cast<int>(w.size()))
    throw ArityError("weight sequence length does not match universe size");
}

}  // namespace

ScoringFunction uniform_plurality_scoring() {
  return ScoringFunction("uniform-plurality", [](const PartialOrder& po, int a) {
    return Score(po.top().contains(a) ? 1 : 0);
  });
}

ScoringFunction dominance_plurality_scoring() {
  return ScoringFunction("dominance-plurality", [](const PartialOrder& po, int a) {
    return Score(po.top().contains(a) ? po.dominance_count(a) : 0);
  });
}

ScoringFunction borda_dominance_scoring() {
  return ScoringFunction("borda", [](const PartialOrder& po, int a) {
    return Score(po.dominance_count(a));
  });
}

ScoringFunction uniform_anti_plurality_scoring() {
  return ScoringFunction("uniform-anti-plurality", [](const PartialOrder& po, int a) {
    return Score(po.bottom().contains(a) ? -1 : 0);
  });
}

ScoringFunction size_family_scoring(std::vector<Score> weights) {
  validate_weights(weights);
  std::string name = weights_name("size-approval:", weights);
  return ScoringFunction(std::move(name), [w = std::move(weights)](const PartialOrder& po, int a) {
    require_arity(w, po);
    const AltSet top = po.top();
    return top.contains(a) ? w[static_cast<size_t>(top.count() - 1)] : Score(0);
  });
}

ScoringFunction anti_size_family_scoring(std::vector<Score> weights) {
  validate_weights(weights);
  std::string name = weights_name("anti-size:", weights);
  return ScoringFunction(std::move(name), [w = std::move(weights)](const PartialOrder& po, int a) {
    require_arity(w, po);
    const AltSet bottom = po.bottom();
    return bottom.contains(a) ? -w[static_cast<size_t>(bottom.count() - 1)] : Score(0);
  });
}

ScoringFunction affine_transform(const ScoringFunction& s, const Score& alpha, const Score& beta) {
  if (alpha <= Score(0)) throw AlphaError("affine scale must be positive");
  std::string name = "affine(" + format_score(alpha) + "," + format_score(beta) + "):" + s.name();
  return ScoringFunction(std::move(name), [s, alpha, beta](const PartialOrder& po, int a) {
    return alpha * s(po, a) + beta;
  });
}

bool is_positional(const ScoringFunction& s, int m) {
  const std::vector<PartialOrder> orders = enumerate_partial_orders(m);
  const std::vector<Permutation> sigmas = Permutation::all(m);
  for (const PartialOrder& po : orders)
    for (const Permutation& sigma : sigmas) {
      const PartialOrder relabeled = po.relabeled(sigma);
      for (int a = 0; a < m; ++a)
        if (s(po, a) != s(relabeled, sigma(a))) return false;
    }
  return true;
}

ScoringTable tabulate(const ScoringFunction& s, int m) {
  ScoringTable t;
  t.m = m;
  t.orders = enumerate_partial_orders(m);
  t.scores.reserve(t.orders.size());
  for (const PartialOrder& po : t.orders) {
    std::vector<Score> row;
    row.reserve(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) row.push_back(s(po, a));
    t.scores.push_back(std::move(row));
  }
  return t;
}

namespace {

// One side of the classification; the anti side runs the same logic on
// bottom/non-bottom with scores negated (mirrored inequalities).
struct SideResult {
  bool in_class = false;
  bool simple = false;
  bool monotonic = false;
  bool uniform = false;
};

// `special(po)` is the top (resp. bottom) set; scores are raw for the top side
// and negated for the bottom side, so "higher is more distinguished" on both.
//
// Membership is decided up to per-preference additive shifts (shifting one
// preference's scores uniformly never changes the induced rule). Orders whose
// non-special set is nonempty have their shift pinned by the k'=0
// normalization; orders without one (only the empty relation) keep a free
// shift and therefore impose no cross-order constraints.
template <typename SpecialSet>
SideResult classify_side(const ScoringTable& t, SpecialSet special) {
  SideResult r;
  const size_t n = t.orders.size();

  // Class: per order, all non-special scores share one value k', every special
  // score is >= k', and at least one special score is > k' (vacuous when the
  // non-special set is empty). Record per-order scores normalized by k'.
  std::vector<std::vector<Score>> normalized(n);
  std::vector<AltSet> special_sets(n);
  std::vector<bool> pinned(n);
  for (size_t i = 0; i < n; ++i) {
    const PartialOrder& po = t.orders[i];
    const std::vector<Score>& row = t.scores[i];
    const AltSet sp = special(po);
    special_sets[i] = sp;
    std::optional<Score> shared;
    for (int a = 0; a < t.m; ++a) {
      if (sp.contains(a)) continue;
      if (!shared) shared = row[static_cast<size_t>(a)];
      else if (*shared != row[static_cast<size_t>(a)]) return r;
    }
    pinned[i] = shared.has_value();
    std::vector<Score> norm = row;
    if (shared) {
      bool any_strict = false;
      for (int a : sp.to_vector()) {
        if (row[static_cast<size_t>(a)] < *shared) return r;
        if (row[static_cast<size_t>(a)] > *shared) any_strict = true;
      }
      if (!any_strict) return r;
      for (Score& v : norm) v -= *shared;
    }
    // no non-special alternative: Def.-1-style constraints are vacuous
    normalized[i] = std::move(norm);
  }
  r.in_class = true;

  // Simple: within each order, all special scores agree (differences are
  // shift-invariant, so this constrains free-shift orders too).
  std::vector<Score> special_value(n);
  for (size_t i = 0; i < n; ++i) {
    std::optional<Score> k;
    for (int a : special_sets[i].to_vector()) {
      const Score v = normalized[i][static_cast<size_t>(a)];
      if (!k) k = v;
      else if (*k != v) return r;
    }
    special_value[i] = *k;  // special sets are never empty
  }
  r.simple = true;

  // Monotonic: among pinned orders, the special value depends on the
  // special-set size alone and is non-increasing in it.
  std::map<int, Score> by_size;
  for (size_t i = 0; i < n; ++i) {
    if (!pinned[i]) continue;
    const auto [it, inserted] = by_size.emplace(special_sets[i].count(), special_value[i]);
    if (!inserted && it->second != special_value[i]) return r;
  }
  for (auto it = by_size.begin(); it != by_size.end() && std::next(it) != by_size.end(); ++it)
    if (it->second < std::next(it)->second) return r;
  r.monotonic = true;

  // Uniform: one common positive special value across all pinned orders
  // (membership up to affine transformation; canonical representative uses 1).
  std::optional<Score> k;
  for (size_t i = 0; i < n; ++i) {
    if (!pinned[i]) continue;
    if (!k) k = special_value[i];
    else if (*k != special_value[i]) return r;
  }
  if (k && *k <= Score(0)) return r;
  r.uniform = true;
  return r;
}

}  // namespace

ClassMembership classify(const ScoringTable& t) {
  if (t.orders.size() != t.scores.size() || t.orders.empty())
    throw Error("scoring table is incomplete");

  const SideResult plur = classify_side(t, [](const PartialOrder& po) { return po.top(); });

  // Bottom side mirrored: negate scores so Defs. 5-8 become the top-side shape.
  ScoringTable negated;
  negated.m = t.m;
  negated.orders = t.orders;
  negated.scores = t.scores;
  for (auto& row : negated.scores)
    for (Score& v : row) v = -v;
  const SideResult anti = classify_side(negated, [](const PartialOrder& po) { return po.bottom(); });

  ClassMembership out;
  out.plurality_class = plur.in_class;
  out.simple_plurality = plur.simple;
  out.monotonic_simple_plurality = plur.monotonic;
  out.uniform_plurality = plur.uniform;
  out.anti_plurality_class = anti.in_class;
  out.simple_anti_plurality = anti.simple;
  out.monotonic_simple_anti_plurality = anti.monotonic;
  out.uniform_anti_plurality = anti.uniform;
  return out;
}

}  // namespace povote
