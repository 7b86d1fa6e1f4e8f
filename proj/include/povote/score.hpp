#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace povote {

/// Exact rational score. Winner determination never touches floating point.
using Score = boost::rational<std::int64_t>;

/// Canonical "p/q" form, q > 0, reduced ("2/1", "-1/3").
std::string format_score(const Score& s);

/// Accepts "p" or "p/q" with optional leading minus. Throws GrammarError.
Score parse_score(std::string_view text);

/// Smallest integer >= num/den for den > 0.
std::int64_t ceil_ratio(std::int64_t num, std::int64_t den);

}  // namespace povote
