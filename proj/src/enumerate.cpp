#include "povote/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

namespace povote {

int enumeration_bound() {
  if (const char* env = std::getenv("POVOTE_MAX_M")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return 5;
}

// Worklist closure search: every partial order is reachable from the empty
// order by inserting its covering edges one at a time (each intermediate
// closure stays inside the target relation). Kept deliberately different from
// the brute-force filter the tests use as an oracle.
std::vector<PartialOrder> enumerate_partial_orders(int m) {
  if (m < 1) throw Error("universe size must be at least 1");
  if (m > enumeration_bound())
    throw ResourceError("m=" + std::to_string(m) + " exceeds the enumeration bound " +
                        std::to_string(enumeration_bound()) +
                        " (override with POVOTE_MAX_M)");

  std::unordered_set<PartialOrder, PartialOrderHash> seen;
  std::vector<PartialOrder> out;
  out.push_back(PartialOrder::empty_order(m));
  seen.insert(out.front());
  for (size_t next = 0; next < out.size(); ++next) {
    const PartialOrder po = out[next];  // copy: out may reallocate below
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (a == b || po.dominates(a, b) || po.dominates(b, a)) continue;
        PartialOrder grown = po.with_edge(a, b);
        if (seen.insert(grown).second) out.push_back(std::move(grown));
      }
  }
  std::sort(out.begin(), out.end(), PartialOrder::lex_less);
  return out;
}

}  // namespace povote
