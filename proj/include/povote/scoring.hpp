#pragma once

#include <functional>
#include <string>
#include <vector>

#include "povote/partial_order.hpp"
#include "povote/score.hpp"

namespace povote {

/// A positional scoring function: pure map (preference, alternative) -> Score.
/// Positionality itself is a property of the map, checked by is_positional.
class ScoringFunction {
 public:
  using Eval = std::function<Score(const PartialOrder&, int)>;

  ScoringFunction(std::string name, Eval eval) : name_(std::move(name)), eval_(std::move(eval)) {}

  const std::string& name() const { return name_; }
  Score operator()(const PartialOrder& po, int a) const { return eval_(po, a); }

 private:
  std::string name_;
  Eval eval_;
};

/// 1 for every top alternative, 0 otherwise (the canonical plurality extension).
ScoringFunction uniform_plurality_scoring();

/// Number of dominated alternatives for tops, 0 for everything else.
ScoringFunction dominance_plurality_scoring();

/// Number of dominated alternatives for every alternative (Borda-style).
ScoringFunction borda_dominance_scoring();

/// -1 for every bottom alternative, 0 otherwise.
ScoringFunction uniform_anti_plurality_scoring();

/// w(|top|) for tops, 0 otherwise. Requires w(1) >= ... >= w(m), w(t) > 0 for
/// t <= m-1 and w(m) >= 0; throws WeightError otherwise.
ScoringFunction size_family_scoring(std::vector<Score> weights);

/// -v(|bottom|) for bottoms, 0 otherwise. Same weight constraints as the size
/// family; throws WeightError otherwise.
ScoringFunction anti_size_family_scoring(std::vector<Score> weights);

/// Pointwise alpha*s + beta. Induces the same winners as s on every profile.
/// Throws AlphaError if alpha <= 0.
ScoringFunction affine_transform(const ScoringFunction& s, const Score& alpha, const Score& beta);

/// Exhaustive positionality check over every order at this m and every
/// permutation. Throws ResourceError beyond the enumeration bound.
bool is_positional(const ScoringFunction& s, int m);

/// Full score table over enumerate_partial_orders(m), rows in canonical order.
struct ScoringTable {
  int m = 0;
  std::vector<PartialOrder> orders;
  std::vector<std::vector<Score>> scores;  // scores[i][a] for orders[i]
};

ScoringTable tabulate(const ScoringFunction& s, int m);

/// Membership in the eight rule classes, decided up to the per-preference
/// normalization that sets the common non-top (non-bottom) value to 0.
struct ClassMembership {
  bool plurality_class = false;
  bool simple_plurality = false;
  bool monotonic_simple_plurality = false;
  bool uniform_plurality = false;
  bool anti_plurality_class = false;
  bool simple_anti_plurality = false;
  bool monotonic_simple_anti_plurality = false;
  bool uniform_anti_plurality = false;

  friend bool operator==(const ClassMembership&, const ClassMembership&) = default;
};

ClassMembership classify(const ScoringTable& t);

}  // namespace povote
