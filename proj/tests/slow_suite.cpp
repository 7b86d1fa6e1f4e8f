// Larger-universe checks kept out of the fast unit suite: the m=5 enumeration
// oracle and m=4 positionality.

#include <chrono>
#include <cstdio>
#include <vector>

#include "oracles.hpp"
#include "povote/enumerate.hpp"
#include "povote/scoring.hpp"

using namespace povote;

namespace {

int g_failed = 0;

void report(const char* name, bool ok, double seconds) {
  std::printf("[%s] %s (%.2fs)\n", ok ? "PASS" : "FAIL", name, seconds);
  if (!ok) ++g_failed;
}

template <typename Fn>
void timed(const char* name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::printf("       exception: %s\n", e.what());
  }
  report(name, ok,
         std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

}  // namespace

int main() {
  timed("enumeration count matches the brute-force oracle at m=5", [] {
    const long long oracle = oracles::brute_force_poset_count(5);
    return oracle == 4231 &&
           static_cast<long long>(enumerate_partial_orders(5).size()) == oracle;
  });

  timed("every enumerated order at m=5 satisfies the invariants", [] {
    const std::vector<PartialOrder> orders = enumerate_partial_orders(5);
    for (size_t i = 0; i + 1 < orders.size(); ++i)
      if (!PartialOrder::lex_less(orders[i], orders[i + 1])) return false;
    for (const PartialOrder& po : orders) {
      if (po.top().empty() || po.bottom().empty()) return false;
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
          if (a == b && po.dominates(a, a)) return false;
          if (po.dominates(a, b) && po.dominates(b, a)) return false;
          for (int c = 0; c < 5; ++c)
            if (po.dominates(a, b) && po.dominates(b, c) && !po.dominates(a, c)) return false;
        }
    }
    return true;
  });

  timed("built-in scoring functions are positional at m=4", [] {
    return is_positional(uniform_plurality_scoring(), 4) &&
           is_positional(dominance_plurality_scoring(), 4) &&
           is_positional(borda_dominance_scoring(), 4) &&
           is_positional(uniform_anti_plurality_scoring(), 4) &&
           is_positional(size_family_scoring({Score(4), Score(3), Score(2), Score(1)}), 4) &&
           is_positional(anti_size_family_scoring({Score(4), Score(3), Score(2), Score(1)}), 4);
  });

  timed("relabeling commutes with tops and bottoms at m=4", [] {
    const auto sigmas = Permutation::all(4);
    for (const PartialOrder& po : enumerate_partial_orders(4))
      for (const Permutation& sigma : sigmas) {
        const PartialOrder moved = po.relabeled(sigma);
        if (moved.top() != sigma.apply(po.top())) return false;
        if (moved.bottom() != sigma.apply(po.bottom())) return false;
      }
    return true;
  });

  return g_failed == 0 ? 0 : 1;
}
