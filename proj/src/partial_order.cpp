#include "povote/partial_order.hpp"

#include <algorithm>
#include <numeric>

namespace povote {

namespace {

void require_index(int m, int a) {
  if (a < 0 || a >= m)
    throw IndexError("alternative index " + std::to_string(a) + " outside 0.." +
                     std::to_string(m - 1));
}

// In-place transitive closure of the row masks.
void close(std::vector<std::uint64_t>& rows) {
  const int m = static_cast<int>(rows.size());
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < m; ++a)
      if ((rows[static_cast<size_t>(a)] >> k) & 1u) rows[static_cast<size_t>(a)] |= rows[static_cast<size_t>(k)];
}

}  // namespace

std::string to_string(BallotKind kind) {
  switch (kind) {
    case BallotKind::linear: return "linear";
    case BallotKind::approval: return "approval";
    case BallotKind::general: return "general";
  }
  return "general";
}

PartialOrder PartialOrder::empty_order(int m) {
  if (m < 1 || m > kMaxAlternatives)
    throw Error("universe size must be in 1.." + std::to_string(kMaxAlternatives));
  return PartialOrder(m, std::vector<std::uint64_t>(static_cast<size_t>(m), 0));
}

PartialOrder PartialOrder::from_edges(int m, std::span<const std::pair<int, int>> edges) {
  PartialOrder po = empty_order(m);
  for (auto [a, b] : edges) {
    require_index(m, a);
    require_index(m, b);
    po.rows_[static_cast<size_t>(a)] |= std::uint64_t{1} << b;
  }
  close(po.rows_);
  for (int a = 0; a < m; ++a)
    if (po.dominates(a, a))
      throw CycleError("edge set closes to a cycle through alternative " + std::to_string(a));
  return po;
}

PartialOrder PartialOrder::chain(std::span<const int> order) {
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i + 1 < order.size(); ++i) edges.emplace_back(order[i], order[i + 1]);
  return from_edges(static_cast<int>(order.size()), edges);
}

AltSet PartialOrder::top() const {
  std::uint64_t dominated = 0;
  for (std::uint64_t row : rows_) dominated |= row;
  return AltSet(~dominated) & AltSet::full(m_);
}

AltSet PartialOrder::bottom() const {
  AltSet out;
  for (int a = 0; a < m_; ++a)
    if (rows_[static_cast<size_t>(a)] == 0) out = out.with(a);
  return out;
}

int PartialOrder::edge_count() const {
  int n = 0;
  for (std::uint64_t row : rows_) n += std::popcount(row);
  return n;
}

std::vector<std::pair<int, int>> PartialOrder::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      if (dominates(a, b)) out.emplace_back(a, b);
  return out;
}

PartialOrder PartialOrder::relabeled(const Permutation& sigma) const {
  if (sigma.size() != m_) throw Error("permutation size does not match universe");
  PartialOrder out = empty_order(m_);
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      if (dominates(a, b))
        out.rows_[static_cast<size_t>(sigma(a))] |= std::uint64_t{1} << sigma(b);
  return out;  // relabeling a closed relation stays closed
}

PartialOrder PartialOrder::with_edge(int a, int b) const {
  require_index(m_, a);
  require_index(m_, b);
  if (a == b || dominates(b, a)) throw CycleError("adding edge would create a cycle");
  PartialOrder out = *this;
  // Everything at or above a now dominates b and everything below it.
  const std::uint64_t below_b = rows_[static_cast<size_t>(b)] | (std::uint64_t{1} << b);
  out.rows_[static_cast<size_t>(a)] |= below_b;
  for (int x = 0; x < m_; ++x)
    if (dominates(x, a)) out.rows_[static_cast<size_t>(x)] |= below_b;
  return out;
}

bool PartialOrder::is_linear() const {
  for (int a = 0; a < m_; ++a)
    for (int b = a + 1; b < m_; ++b)
      if (!dominates(a, b) && !dominates(b, a)) return false;
  return true;
}

bool PartialOrder::satisfies_approval_condition() const {
  const AltSet t = top();
  const AltSet b = bottom();
  return !t.intersects(b) && (t | b) == AltSet::full(m_);
}

BallotKind PartialOrder::kind() const {
  if (is_linear()) return BallotKind::linear;
  if (satisfies_approval_condition()) return BallotKind::approval;
  return BallotKind::general;
}

bool PartialOrder::lex_less(const PartialOrder& x, const PartialOrder& y) {
  if (x.m_ != y.m_) return x.m_ < y.m_;
  for (int a = 0; a < x.m_; ++a)
    for (int b = 0; b < x.m_; ++b) {
      const bool xa = x.dominates(a, b);
      const bool ya = y.dominates(a, b);
      if (xa != ya) return !xa;
    }
  return false;
}

std::size_t PartialOrder::hash() const {
  std::size_t h = static_cast<std::size_t>(m_) * 0x9e3779b97f4a7c15ull;
  for (std::uint64_t row : rows_) h = (h ^ row) * 0x100000001b3ull;
  return h;
}

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  const int m = static_cast<int>(map_.size());
  if (m < 1 || m > kMaxAlternatives) throw Error("permutation size out of range");
  std::uint64_t seen = 0;
  for (int v : map_) {
    if (v < 0 || v >= m || ((seen >> v) & 1u)) throw Error("mapping is not a bijection");
    seen |= std::uint64_t{1} << v;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> map(static_cast<size_t>(m));
  std::iota(map.begin(), map.end(), 0);
  return Permutation(std::move(map));
}

Permutation Permutation::transposition(int m, int a, int b) {
  Permutation p = identity(m);
  std::swap(p.map_[static_cast<size_t>(a)], p.map_[static_cast<size_t>(b)]);
  return p;
}

std::vector<Permutation> Permutation::all(int m) {
  std::vector<int> map(static_cast<size_t>(m));
  std::iota(map.begin(), map.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(map));
  } while (std::next_permutation(map.begin(), map.end()));
  return out;
}

AltSet Permutation::apply(AltSet s) const {
  AltSet out;
  for (int a : s.to_vector()) out = out.with((*this)(a));
  return out;
}

PartialOrder approval_ballot(AltSet approved, int m) {
  const AltSet universe = AltSet::full(m);
  if (approved.empty() || approved == universe)
    throw DegenerateBallotError("approval set must be a nonempty proper subset of the universe");
  if (!approved.subset_of(universe)) throw IndexError("approved alternative outside universe");
  std::vector<std::pair<int, int>> edges;
  for (int a : approved.to_vector())
    for (int b : (universe - approved).to_vector()) edges.emplace_back(a, b);
  return PartialOrder::from_edges(m, edges);
}

}  // namespace povote
