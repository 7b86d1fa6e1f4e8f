#include "povote/profile.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "povote/enumerate.hpp"

namespace povote {

Profile::Profile(std::vector<Vote> votes) : votes_(std::move(votes)) {
  if (votes_.empty()) throw Error("profile needs at least one voter");
  std::set<int> ids;
  for (const Vote& v : votes_) {
    if (v.voter_id < 1) throw Error("voter ids must be positive");
    if (!ids.insert(v.voter_id).second)
      throw Error("duplicate voter id " + std::to_string(v.voter_id));
    if (v.preference.m() != m())
      throw ArityError("preferences mix universe sizes");
  }
}

Profile Profile::of(std::initializer_list<std::pair<int, PartialOrder>> votes) {
  std::vector<Vote> vs;
  vs.reserve(votes.size());
  for (const auto& [id, po] : votes) vs.push_back(Vote{id, po});
  return Profile(std::move(vs));
}

bool Profile::has_voter(int id) const {
  return std::any_of(votes_.begin(), votes_.end(),
                     [id](const Vote& v) { return v.voter_id == id; });
}

std::vector<int> Profile::ids() const {
  std::vector<int> out;
  out.reserve(votes_.size());
  for (const Vote& v : votes_) out.push_back(v.voter_id);
  return out;
}

Profile Profile::with_replaced(int index, PartialOrder preference) const {
  std::vector<Vote> vs = votes_;
  vs[static_cast<size_t>(index)].preference = std::move(preference);
  return Profile(std::move(vs));
}

Profile concat_profiles(const Profile& p1, const Profile& p2) {
  if (p1.m() != p2.m()) throw ArityError("profiles have different universe sizes");
  for (const Vote& v : p2.votes())
    if (p1.has_voter(v.voter_id))
      throw OverlapError("voter id " + std::to_string(v.voter_id) + " present in both profiles");
  std::vector<Vote> vs(p1.votes().begin(), p1.votes().end());
  vs.insert(vs.end(), p2.votes().begin(), p2.votes().end());
  return Profile(std::move(vs));
}

Profile replicate_profile(const Profile& p, int k, std::span<const int> reserved) {
  if (k < 1) throw Error("replication count must be at least 1");
  std::set<int> taken(reserved.begin(), reserved.end());
  for (const Vote& v : p.votes()) taken.insert(v.voter_id);
  std::vector<Vote> vs(p.votes().begin(), p.votes().end());
  int candidate = 1;
  for (int copy = 1; copy < k; ++copy)
    for (const Vote& v : p.votes()) {
      while (taken.count(candidate)) ++candidate;
      taken.insert(candidate);
      vs.push_back(Vote{candidate, v.preference});
    }
  return Profile(std::move(vs));
}

Profile symmetrized_profile(const PartialOrder& po, int fresh_ids_from) {
  if (po.m() > enumeration_bound())
    throw ResourceError("m! voters would exceed the enumeration bound (override with POVOTE_MAX_M)");
  if (fresh_ids_from < 1) throw Error("voter ids must be positive");
  std::vector<Vote> vs;
  int id = fresh_ids_from;
  for (const Permutation& sigma : Permutation::all(po.m()))
    vs.push_back(Vote{id++, po.relabeled(sigma)});
  return Profile(std::move(vs));
}

}  // namespace povote
