#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "povote/alt_set.hpp"
#include "povote/errors.hpp"

namespace povote {

class Permutation;

enum class BallotKind { linear, approval, general };

std::string to_string(BallotKind kind);

/// A strict partial order over alternatives 0..m-1, stored transitively closed.
///
/// Invariants (established at construction, never mutated): irreflexive,
/// transitive, antisymmetric. Row a of the incidence matrix is a bitmask of
/// the alternatives dominated by a.
class PartialOrder {
 public:
  /// The order with no comparisons at all.
  static PartialOrder empty_order(int m);

  /// Transitive closure of the given edges; each edge is (winner, loser).
  /// Throws IndexError for out-of-range indices and CycleError if the closure
  /// would relate an alternative to itself.
  static PartialOrder from_edges(int m, std::span<const std::pair<int, int>> edges);

  /// The total order chain[0] ≻ chain[1] ≻ ... (closed).
  static PartialOrder chain(std::span<const int> order);

  int m() const { return m_; }
  bool dominates(int a, int b) const { return (rows_[static_cast<size_t>(a)] >> b) & 1u; }
  AltSet dominated_by(int a) const { return AltSet(rows_[static_cast<size_t>(a)]); }

  /// Alternatives no other alternative dominates. Nonempty for every order.
  AltSet top() const;
  /// Alternatives that dominate nothing. Nonempty; may intersect the top.
  AltSet bottom() const;

  /// |{x : a ≻ x}| under the closed relation.
  int dominance_count(int a) const { return std::popcount(rows_[static_cast<size_t>(a)]); }

  /// Number of ordered pairs in the closed relation.
  int edge_count() const;

  /// All ordered pairs (winner, loser) of the closed relation, row-major.
  std::vector<std::pair<int, int>> edges() const;

  /// The order with every alternative renamed through sigma.
  PartialOrder relabeled(const Permutation& sigma) const;

  /// Copy with one extra dominance a ≻ b, re-closed. Requires that b does not
  /// already dominate a.
  PartialOrder with_edge(int a, int b) const;

  bool is_linear() const;
  /// True iff top and bottom partition the universe.
  bool satisfies_approval_condition() const;
  /// Classification precedence: linear, then approval, then general.
  BallotKind kind() const;

  friend bool operator==(const PartialOrder& x, const PartialOrder& y) = default;

  /// Strict lexicographic order on the row-major incidence bits
  /// (pair (0,0) most significant, false < true).
  static bool lex_less(const PartialOrder& x, const PartialOrder& y);

  std::size_t hash() const;

 private:
  PartialOrder(int m, std::vector<std::uint64_t> rows) : m_(m), rows_(std::move(rows)) {}

  int m_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct PartialOrderHash {
  std::size_t operator()(const PartialOrder& po) const { return po.hash(); }
};

/// A bijection on alternative indices 0..m-1.
class Permutation {
 public:
  /// mapping[a] is the image of a. Throws Error unless it is a bijection.
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int m);
  /// The transposition swapping a and b.
  static Permutation transposition(int m, int a, int b);
  /// All m! permutations, lexicographic by mapping sequence.
  static std::vector<Permutation> all(int m);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int a) const { return map_[static_cast<size_t>(a)]; }
  AltSet apply(AltSet s) const;

  friend bool operator==(const Permutation& x, const Permutation& y) = default;

 private:
  std::vector<int> map_;
};

/// Ballot with every approved alternative above every unapproved one.
/// Throws DegenerateBallotError if approved is empty or the whole universe.
PartialOrder approval_ballot(AltSet approved, int m);

}  // namespace povote
