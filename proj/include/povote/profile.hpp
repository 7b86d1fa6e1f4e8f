#pragma once

#include <span>
#include <utility>
#include <vector>

#include "povote/partial_order.hpp"

namespace povote {

/// A voter's ballot: positive id plus a preference.
struct Vote {
  int voter_id;
  PartialOrder preference;

  friend bool operator==(const Vote& x, const Vote& y) = default;
};

/// An ordered electorate: distinct positive voter ids, each with a preference
/// over a shared universe. Immutable after construction.
class Profile {
 public:
  explicit Profile(std::vector<Vote> votes);

  /// Convenience: votes (id, preference) from parallel arguments.
  static Profile of(std::initializer_list<std::pair<int, PartialOrder>> votes);

  int m() const { return votes_.front().preference.m(); }
  int size() const { return static_cast<int>(votes_.size()); }
  std::span<const Vote> votes() const { return votes_; }
  const Vote& vote(int index) const { return votes_[static_cast<size_t>(index)]; }

  bool has_voter(int id) const;
  std::vector<int> ids() const;

  /// Copy with the preference at the given position replaced (same voter id).
  Profile with_replaced(int index, PartialOrder preference) const;

  friend bool operator==(const Profile& x, const Profile& y) = default;

 private:
  std::vector<Vote> votes_;
};

/// Union of two profiles over disjoint electorates.
/// Throws OverlapError if ids intersect, ArityError if universes differ.
Profile concat_profiles(const Profile& p1, const Profile& p2);

/// k copies of p: the first keeps its ids; each later copy assigns, voter by
/// voter in p's order, the smallest positive id not reserved and not yet used.
Profile replicate_profile(const Profile& p, int k, std::span<const int> reserved);

/// The m!-voter profile containing every relabeling of po, with consecutive
/// ids starting at fresh_ids_from. Throws ResourceError beyond the
/// enumeration bound.
Profile symmetrized_profile(const PartialOrder& po, int fresh_ids_from);

}  // namespace povote
