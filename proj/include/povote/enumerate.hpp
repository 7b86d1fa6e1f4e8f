#pragma once

#include <vector>

#include "povote/partial_order.hpp"

namespace povote {

/// Largest universe size enumeration-backed operations accept.
/// Defaults to 5; the POVOTE_MAX_M environment variable overrides it.
int enumeration_bound();

/// All strict partial orders on m labeled alternatives, sorted by the
/// canonical lexicographic order on incidence bits.
/// Throws ResourceError if m exceeds enumeration_bound().
std::vector<PartialOrder> enumerate_partial_orders(int m);

}  // namespace povote
